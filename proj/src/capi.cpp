#include "ldv/ldv.h"

#include <new>
#include <string>
#include <vector>

#include "ldv/cli.hpp"
#include "ldv/errors.hpp"

struct ldv_problem {
  ldv::ProblemFile file;
};

struct ldv_text {
  std::string data;
};

struct ldv_report_face {
  std::size_t id = 0;
  int dim = 0;
  int status = 0;
  std::string truncation;
  std::vector<std::string> generators;
};

struct ldv_report {
  int nondegenerate = -1;
  std::string f_tilde;
  std::vector<ldv_report_face> faces;
  std::vector<std::string> union_generators;
};

namespace {

thread_local std::string last_error;

ldv_status fail(ldv_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
ldv_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ldv::ResourceCapExceeded& e) {
    return fail(LDV_ERR_RESOURCE, e.what());
  } catch (const ldv::InputError& e) {
    return fail(LDV_ERR_INPUT, e.what());
  } catch (const ldv::MathError& e) {
    return fail(LDV_ERR_MATH, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LDV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LDV_ERR_INTERNAL, e.what());
  }
}

ldv::RunFlags to_flags(const ldv_run_options* options) {
  ldv::RunFlags flags;
  ldv_run_options defaults;
  ldv_run_options_default(&defaults);
  if (!options) options = &defaults;
  if (options->max_order >= 0) flags.max_order = options->max_order;
  flags.skip_nondeg = options->skip_nondeg != 0;
  flags.format = options->machine_format ? ldv::OutputFormat::kMachine : ldv::OutputFormat::kHuman;
  if (options->spair_cap) flags.spair_cap = options->spair_cap;
  if (options->ray) flags.ray = ldv::ExponentVector(options->ray, options->ray + options->ray_length);
  return flags;
}

const ldv_report_face* face_at(const ldv_report* report, size_t index) {
  if (!report || index >= report->faces.size()) {
    last_error = "face index out of range";
    return nullptr;
  }
  return &report->faces[index];
}

}  // namespace

extern "C" {

const char* ldv_version(void) { return "0.1.0"; }

const char* ldv_last_error(void) { return last_error.c_str(); }

ldv_status ldv_problem_from_file(const char* path, ldv_problem** out) {
  if (!path || !out) return fail(LDV_ERR_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ldv_problem{ldv::load_problem(path)};
    return LDV_OK;
  });
}

ldv_status ldv_problem_from_string(const char* text, ldv_problem** out) {
  if (!text || !out) return fail(LDV_ERR_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ldv_problem{ldv::parse_problem(text)};
    return LDV_OK;
  });
}

void ldv_problem_destroy(ldv_problem* problem) { delete problem; }

size_t ldv_problem_variable_count(const ldv_problem* problem) { return problem ? problem->file.problem.n() : 0; }

size_t ldv_problem_diagonal_rank(const ldv_problem* problem) { return problem ? problem->file.problem.r() : 0; }

void ldv_run_options_default(ldv_run_options* options) {
  if (!options) return;
  options->max_order = -1;
  options->skip_nondeg = 0;
  options->machine_format = 0;
  options->spair_cap = 0;
  options->ray = nullptr;
  options->ray_length = 0;
}

ldv_status ldv_run(const ldv_problem* problem, const char* command, const ldv_run_options* options,
                   ldv_text** report) {
  if (!problem || !command || !report) return fail(LDV_ERR_INPUT, "null argument");
  *report = nullptr;
  return guarded([&] {
    if (!ldv::is_command(command)) throw ldv::InputError(std::string("unknown command '") + command + "'");
    auto result = ldv::run(command, problem->file, to_flags(options));
    *report = new ldv_text{std::move(result.text)};
    if (!result.diagnostic.empty()) {
      last_error = result.diagnostic;
      if (last_error.back() == '\n') last_error.pop_back();
    }
    return static_cast<ldv_status>(result.exit_code);
  });
}

const char* ldv_text_data(const ldv_text* text) { return text ? text->data.c_str() : ""; }

size_t ldv_text_size(const ldv_text* text) { return text ? text->data.size() : 0; }

void ldv_text_destroy(ldv_text* text) { delete text; }

ldv_status ldv_polynomial_canonical(const char* expr, const char* const* vars, size_t var_count, int normalize,
                                    ldv_text** out) {
  if (!expr || !out || (!vars && var_count)) return fail(LDV_ERR_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> names(vars, vars + var_count);
    auto p = ldv::parse(expr, names);
    if (normalize) p = ldv::normalized(p);
    *out = new ldv_text{ldv::to_string(p, names)};
    return LDV_OK;
  });
}

ldv_status ldv_landau(const ldv_problem* problem, const ldv_run_options* options, ldv_report** out) {
  if (!problem || !out) return fail(LDV_ERR_INPUT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto flags = to_flags(options);
    ldv::LandauOptions opts;
    opts.skip_nondegeneracy = flags.skip_nondeg || problem->file.skip_nondeg;
    if (flags.spair_cap) {
      opts.elimination.spair_cap = *flags.spair_cap;
    } else if (problem->file.spair_cap) {
      opts.elimination.spair_cap = *problem->file.spair_cap;
    }
    auto report = ldv::landau_variety(problem->file.problem, opts);
    const auto& tp = report.transformed;
    auto tn = tp.t_names();
    auto result = new ldv_report;
    result->nondegenerate = report.nondegeneracy ? (report.nondegeneracy->nondegenerate ? 1 : 0) : -1;
    result->f_tilde = ldv::to_string(tp.f_tilde, tp.names);
    for (const auto& entry : report.entries) {
      ldv_report_face face;
      face.id = entry.sigma.face_id;
      face.dim = entry.sigma.face.dim;
      face.status = entry.eliminant.empty ? 0 : (entry.eliminant.generators.empty() ? 2 : 1);
      face.truncation = ldv::to_string(entry.sigma.truncation, tp.names);
      for (const auto& g : entry.eliminant.generators) face.generators.push_back(ldv::to_string(g, tn));
      result->faces.push_back(std::move(face));
    }
    if (!report.degenerate())
      for (const auto& g : ldv::union_ideal(report, opts.elimination).generators)
        result->union_generators.push_back(ldv::to_string(g, tn));
    *out = result;
    if (report.degenerate()) {
      last_error = "f is degenerate for its Newton polytope";
      return LDV_ERR_MATH;
    }
    return LDV_OK;
  });
}

void ldv_report_destroy(ldv_report* report) { delete report; }

int ldv_report_nondegenerate(const ldv_report* report) { return report ? report->nondegenerate : -1; }

const char* ldv_report_f_tilde(const ldv_report* report) { return report ? report->f_tilde.c_str() : nullptr; }

size_t ldv_report_face_count(const ldv_report* report) { return report ? report->faces.size() : 0; }

size_t ldv_report_face_id(const ldv_report* report, size_t index) {
  auto f = face_at(report, index);
  return f ? f->id : 0;
}

int ldv_report_face_dim(const ldv_report* report, size_t index) {
  auto f = face_at(report, index);
  return f ? f->dim : -1;
}

int ldv_report_face_status(const ldv_report* report, size_t index) {
  auto f = face_at(report, index);
  return f ? f->status : -1;
}

const char* ldv_report_face_truncation(const ldv_report* report, size_t index) {
  auto f = face_at(report, index);
  return f ? f->truncation.c_str() : nullptr;
}

size_t ldv_report_face_generator_count(const ldv_report* report, size_t index) {
  auto f = face_at(report, index);
  return f ? f->generators.size() : 0;
}

const char* ldv_report_face_generator(const ldv_report* report, size_t index, size_t generator) {
  auto f = face_at(report, index);
  if (!f) return nullptr;
  if (generator >= f->generators.size()) {
    last_error = "generator index out of range";
    return nullptr;
  }
  return f->generators[generator].c_str();
}

size_t ldv_report_union_generator_count(const ldv_report* report) {
  return report ? report->union_generators.size() : 0;
}

const char* ldv_report_union_generator(const ldv_report* report, size_t generator) {
  if (!report || generator >= report->union_generators.size()) {
    last_error = "generator index out of range";
    return nullptr;
  }
  return report->union_generators[generator].c_str();
}

}  // extern "C"
