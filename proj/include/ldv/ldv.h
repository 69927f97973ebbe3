#ifndef LDV_LDV_H
#define LDV_LDV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LDV_BUILDING_LIBRARY)
#define LDV_API __declspec(dllexport)
#else
#define LDV_API __declspec(dllimport)
#endif
#else
#define LDV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum ldv_status {
  LDV_OK = 0,
  LDV_ERR_MATH = 1,     /* e.g. degenerate f, too few coefficients */
  LDV_ERR_INPUT = 2,    /* malformed file, expression or argument */
  LDV_ERR_RESOURCE = 3, /* S-pair cap exhausted */
  LDV_ERR_INTERNAL = 4
} ldv_status;

typedef struct ldv_problem ldv_problem;
typedef struct ldv_text ldv_text;
typedef struct ldv_report ldv_report;

LDV_API const char* ldv_version(void);

/* Message of the last failing call on this thread; "" if none. */
LDV_API const char* ldv_last_error(void);

LDV_API ldv_status ldv_problem_from_file(const char* path, ldv_problem** out);
LDV_API ldv_status ldv_problem_from_string(const char* text, ldv_problem** out);
LDV_API void ldv_problem_destroy(ldv_problem* problem);
LDV_API size_t ldv_problem_variable_count(const ldv_problem* problem);
LDV_API size_t ldv_problem_diagonal_rank(const ldv_problem* problem);

typedef struct ldv_run_options {
  int64_t max_order;  /* negative: command default */
  int skip_nondeg;
  int machine_format;
  uint64_t spair_cap; /* 0: file value or library default */
  const int64_t* ray; /* NULL: no ray */
  size_t ray_length;
} ldv_run_options;

LDV_API void ldv_run_options_default(ldv_run_options* options);

/* Runs a CLI command (nondeg, transform, faces, landau, diagonal, radius,
   crosscheck). *report receives the report text, possibly empty, even when
   the status is not LDV_OK; free it with ldv_text_destroy. */
LDV_API ldv_status ldv_run(const ldv_problem* problem, const char* command, const ldv_run_options* options,
                           ldv_text** report);

LDV_API const char* ldv_text_data(const ldv_text* text);
LDV_API size_t ldv_text_size(const ldv_text* text);
LDV_API void ldv_text_destroy(ldv_text* text);

/* Parses expr over the given variables and prints it back in canonical
   form; with normalize set, integer-primitive with positive leading term. */
LDV_API ldv_status ldv_polynomial_canonical(const char* expr, const char* const* vars, size_t var_count,
                                            int normalize, ldv_text** out);

/* Structured landau result. Strings are owned by the report. A degenerate f
   gives LDV_ERR_MATH together with a report that has no faces; free it. */
LDV_API ldv_status ldv_landau(const ldv_problem* problem, const ldv_run_options* options, ldv_report** out);
LDV_API void ldv_report_destroy(ldv_report* report);
/* 1 nondegenerate, 0 degenerate, -1 check skipped. */
LDV_API int ldv_report_nondegenerate(const ldv_report* report);
LDV_API const char* ldv_report_f_tilde(const ldv_report* report);
LDV_API size_t ldv_report_face_count(const ldv_report* report);
LDV_API size_t ldv_report_face_id(const ldv_report* report, size_t index);
LDV_API int ldv_report_face_dim(const ldv_report* report, size_t index);
/* 0 empty, 1 hypersurface or smaller, 2 whole torus, -1 bad index. */
LDV_API int ldv_report_face_status(const ldv_report* report, size_t index);
LDV_API const char* ldv_report_face_truncation(const ldv_report* report, size_t index);
LDV_API size_t ldv_report_face_generator_count(const ldv_report* report, size_t index);
LDV_API const char* ldv_report_face_generator(const ldv_report* report, size_t index, size_t generator);
LDV_API size_t ldv_report_union_generator_count(const ldv_report* report);
LDV_API const char* ldv_report_union_generator(const ldv_report* report, size_t generator);

#ifdef __cplusplus
}
#endif

#endif
