#include <doctest.h>

#include <cstring>
#include <string>

#include "ldv/ldv.h"

namespace {

const char* kChain = "vars = z1, z2, z3\nf = 1 - z1 - z2*z3 - z3\nQ = [1,1,1]\n";

std::string take(ldv_text* t) {
  std::string s(ldv_text_data(t), ldv_text_size(t));
  ldv_text_destroy(t);
  return s;
}

}  // namespace

TEST_CASE("version and problem handles") {
  CHECK(std::strlen(ldv_version()) > 0);

  ldv_problem* p = nullptr;
  REQUIRE(ldv_problem_from_string(kChain, &p) == LDV_OK);
  CHECK(ldv_problem_variable_count(p) == 3);
  CHECK(ldv_problem_diagonal_rank(p) == 1);
  ldv_problem_destroy(p);

  ldv_problem* f4 = nullptr;
  REQUIRE(ldv_problem_from_file(LDV_PROBLEM_DIR "/appell_f4.prob", &f4) == LDV_OK);
  CHECK(ldv_problem_diagonal_rank(f4) == 2);
  ldv_problem_destroy(f4);

  ldv_problem* bad = nullptr;
  CHECK(ldv_problem_from_string("vars = x\nf = 1 - y\nQ = [1]\n", &bad) == LDV_ERR_INPUT);
  CHECK(bad == nullptr);
  CHECK(std::string(ldv_last_error()).find("y") != std::string::npos);
  CHECK(ldv_problem_from_file(LDV_PROBLEM_DIR "/missing.prob", &bad) == LDV_ERR_INPUT);
  CHECK(ldv_problem_from_string(nullptr, &bad) == LDV_ERR_INPUT);
  CHECK(ldv_problem_from_string(kChain, nullptr) == LDV_ERR_INPUT);
  ldv_problem_destroy(nullptr);
}

TEST_CASE("running commands") {
  ldv_problem* p = nullptr;
  REQUIRE(ldv_problem_from_string(kChain, &p) == LDV_OK);
  ldv_run_options opt;
  ldv_run_options_default(&opt);
  CHECK(opt.max_order < 0);
  opt.max_order = 5;
  ldv_text* out = nullptr;
  REQUIRE(ldv_run(p, "diagonal", &opt, &out) == LDV_OK);
  CHECK(take(out).find("\n1, 2, 6, 20, 70, 252\n") != std::string::npos);

  REQUIRE(ldv_run(p, "landau", nullptr, &out) == LDV_OK);
  CHECK(take(out).find("union: 4*t - 1") != std::string::npos);

  CHECK(ldv_run(p, "nonsense", nullptr, &out) == LDV_ERR_INPUT);
  take(out);

  int64_t ray[] = {2};
  opt.ray = ray;
  opt.ray_length = 1;
  opt.max_order = 3;
  REQUIRE(ldv_run(p, "diagonal", &opt, &out) == LDV_OK);
  CHECK(take(out).find("1, 6, 70, 924") != std::string::npos);
  ldv_problem_destroy(p);

  ldv_problem* sq = nullptr;
  REQUIRE(ldv_problem_from_string("vars = z1\nf = (1 - z1)^2\nQ = [1]\n", &sq) == LDV_OK);
  CHECK(ldv_run(sq, "nondeg", nullptr, &out) == LDV_ERR_MATH);
  CHECK(take(out).find("verdict: degenerate") != std::string::npos);
  ldv_problem_destroy(sq);

  ldv_problem* f4 = nullptr;
  REQUIRE(ldv_problem_from_file(LDV_PROBLEM_DIR "/appell_f4.prob", &f4) == LDV_OK);
  ldv_run_options capped;
  ldv_run_options_default(&capped);
  capped.spair_cap = 2;
  CHECK(ldv_run(f4, "landau", &capped, &out) == LDV_ERR_RESOURCE);
  take(out);
  ldv_problem_destroy(f4);
}

TEST_CASE("canonical polynomials") {
  const char* vars[] = {"x", "y"};
  ldv_text* out = nullptr;
  REQUIRE(ldv_polynomial_canonical("-2/3*x + 4/3", vars, 2, 1, &out) == LDV_OK);
  CHECK(take(out) == "x - 2");
  REQUIRE(ldv_polynomial_canonical("(1 - x)*(1 + y)", vars, 2, 0, &out) == LDV_OK);
  CHECK(take(out) == "-x*y - x + y + 1");
  CHECK(ldv_polynomial_canonical("x +", vars, 2, 0, &out) == LDV_ERR_INPUT);
  CHECK(out == nullptr);
}

TEST_CASE("structured landau report") {
  ldv_problem* f4 = nullptr;
  REQUIRE(ldv_problem_from_file(LDV_PROBLEM_DIR "/appell_f4.prob", &f4) == LDV_OK);
  ldv_report* r = nullptr;
  REQUIRE(ldv_landau(f4, nullptr, &r) == LDV_OK);
  CHECK(ldv_report_nondegenerate(r) == 1);
  CHECK(std::string(ldv_report_f_tilde(r)) == "-u1 - u2 - t1*u1^-1 - t2*u2^-1 + 1");
  REQUIRE(ldv_report_face_count(r) == 6);
  int nonempty = 0;
  for (size_t i = 0; i < 6; ++i) {
    int status = ldv_report_face_status(r, i);
    CHECK((status == 0 || status == 1));
    if (status == 1) {
      ++nonempty;
      CHECK(ldv_report_face_dim(r, i) == 2);
      CHECK(ldv_report_face_id(r, i) == 8);
      REQUIRE(ldv_report_face_generator_count(r, i) == 1);
      CHECK(std::string(ldv_report_face_generator(r, i, 0)) == "16*t1^2 - 32*t1*t2 + 16*t2^2 - 8*t1 - 8*t2 + 1");
    }
  }
  CHECK(nonempty == 1);
  REQUIRE(ldv_report_union_generator_count(r) == 1);
  CHECK(std::string(ldv_report_union_generator(r, 0)) == "16*t1^2 - 32*t1*t2 + 16*t2^2 - 8*t1 - 8*t2 + 1");
  CHECK(ldv_report_face_status(r, 99) == -1);
  CHECK(ldv_report_face_truncation(r, 99) == nullptr);
  CHECK(ldv_report_face_generator(r, 0, 5) == nullptr);
  CHECK(ldv_report_union_generator(r, 3) == nullptr);
  ldv_report_destroy(r);

  ldv_run_options skip;
  ldv_run_options_default(&skip);
  skip.skip_nondeg = 1;
  REQUIRE(ldv_landau(f4, &skip, &r) == LDV_OK);
  CHECK(ldv_report_nondegenerate(r) == -1);
  ldv_report_destroy(r);
  ldv_problem_destroy(f4);

  ldv_problem* sq = nullptr;
  REQUIRE(ldv_problem_from_string("vars = z1\nf = (1 - z1)^2\nQ = [1]\n", &sq) == LDV_OK);
  CHECK(ldv_landau(sq, nullptr, &r) == LDV_ERR_MATH);
  REQUIRE(r != nullptr);
  CHECK(ldv_report_nondegenerate(r) == 0);
  CHECK(ldv_report_face_count(r) == 0);
  CHECK(ldv_report_union_generator_count(r) == 0);
  ldv_report_destroy(r);
  ldv_problem_destroy(sq);
  ldv_report_destroy(nullptr);
}
