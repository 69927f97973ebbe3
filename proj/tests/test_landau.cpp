#include <doctest.h>

#include <cmath>

#include "ldv/errors.hpp"
#include "ldv/landau.hpp"
#include "ldv/problem.hpp"

using namespace ldv;

namespace {

DiagonalProblem chain(int l) {
  DiagonalProblem p;
  p.vars = {"z1", "z2", "z3"};
  std::string zl = "z2^" + std::to_string(l) + "*z3^" + std::to_string(l);
  p.f = parse("1 - z1 - " + zl + " - z3", p.vars);
  p.g = LaurentPolynomial::constant(3, 1);
  p.q = IntegerMatrix{{1, 1, 1}};
  return p;
}

DiagonalProblem appell() {
  DiagonalProblem p;
  p.vars = {"z1", "z2", "z3", "z4"};
  p.f = parse("1 - z1 - z2 - z3 - z4", p.vars);
  p.g = LaurentPolynomial::constant(4, 1);
  p.q = IntegerMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}};
  return p;
}

DiagonalProblem bivariate() {
  DiagonalProblem p;
  p.vars = {"x", "y"};
  p.f = parse("1 - x - y", p.vars);
  p.g = LaurentPolynomial::constant(2, 1);
  p.q = IntegerMatrix{{1, 1}};
  return p;
}

const SigmaFace& sigma_with_support(const std::vector<SigmaFace>& sigmas, const std::vector<ExponentVector>& pts) {
  for (const auto& s : sigmas)
    if (s.face.support_points == pts) return s;
  FAIL("no such sigma face");
  throw std::logic_error("unreachable");
}

std::string single(const Eliminant& e, const std::vector<std::string>& t) {
  REQUIRE_FALSE(e.empty);
  REQUIRE(e.generators.size() == 1);
  return to_string(e.generators[0], t);
}

}  // namespace

TEST_CASE("transform") {
  std::vector<std::string> tu{"t", "u1", "u2"};
  for (int l = 1; l <= 3; ++l) {
    auto tp = transform(chain(l));
    CHECK(tp.r == 1);
    CHECK(tp.s == 2);
    CHECK(tp.names == tu);
    std::string ul = "u1^" + std::to_string(l) + "*u2^" + std::to_string(l);
    CHECK(tp.f_tilde == parse("1 - t/(u1*u2) - " + ul + " - u2", tu));
  }

  std::vector<std::string> tu2{"t1", "t2", "u1", "u2"};
  auto f4 = transform(appell());
  CHECK(f4.names == tu2);
  CHECK(f4.f_tilde == parse("1 - t1/u1 - u1 - t2/u2 - u2", tu2));
  CHECK(f4.t_names() == std::vector<std::string>{"t1", "t2"});

  auto bv = transform(bivariate());
  CHECK(bv.b == IntegerMatrix::from_columns({{1, 1}, {0, 1}}));
  CHECK(bv.f_tilde == parse("1 - t/u - u", std::vector<std::string>{"t", "u"}));

  auto bad = bivariate();
  bad.q = IntegerMatrix{{2, 2}};
  CHECK_THROWS_AS(transform(bad), InputError);
}

TEST_CASE("sigma faces of the chain family") {
  auto sigmas = sigma_faces(transform(chain(1)));
  REQUIRE(sigmas.size() == 4);
  for (const auto& s : sigmas) CHECK(s.depends_on_t);
  CHECK(sigmas[0].face.support_points == std::vector<ExponentVector>{{-1, -1}});
  CHECK(sigmas[1].face.support_points == std::vector<ExponentVector>{{-1, -1}, {0, 0}, {1, 1}});
  CHECK(sigmas[2].face.support_points == std::vector<ExponentVector>{{-1, -1}, {0, 1}});
  CHECK(sigmas[3].face.improper);
  // The three faces without t are the other two vertices and the top edge.
  CHECK(u_faces(transform(chain(1))).size() == 7);
}

TEST_CASE("sigma faces of the two-row diagonal") {
  auto sigmas = sigma_faces(transform(appell()));
  // Two vertices, the three edges incident to them, and the improper face.
  REQUIRE(sigmas.size() == 6);
  std::size_t vertices = 0, edges = 0, improper = 0;
  for (const auto& s : sigmas) {
    if (s.face.improper) ++improper;
    else if (s.face.dim == 0) ++vertices;
    else if (s.face.dim == 1) ++edges;
  }
  CHECK(vertices == 2);
  CHECK(edges == 3);
  CHECK(improper == 1);
}

TEST_CASE("no diagonal generators means no sigma faces") {
  auto p = bivariate();
  p.q = IntegerMatrix(0, 2);
  auto tp = transform(p);
  CHECK(tp.r == 0);
  CHECK(sigma_faces(tp).empty());
  auto report = landau_variety(p);
  CHECK(report.entries.empty());
  CHECK(report.components.empty());
}

TEST_CASE("landau components") {
  std::vector<std::string> t{"t"};
  auto tp = transform(chain(1));
  auto sigmas = sigma_faces(tp);
  CHECK(single(landau_component(tp, sigma_with_support(sigmas, {{-1, -1}, {0, 0}, {1, 1}})), t) == "4*t - 1");
  CHECK(landau_component(tp, sigma_with_support(sigmas, {{-1, -1}, {0, 1}})).empty);
  CHECK(landau_component(tp, sigma_with_support(sigmas, {{-1, -1}})).empty);

  // (l+1)^(l+1) t^l - l^l
  auto t2 = transform(chain(2));
  auto edge2 = sigma_with_support(sigma_faces(t2), {{-1, -1}, {0, 0}, {2, 2}});
  CHECK(single(landau_component(t2, edge2), t) == "27*t^2 - 4");
  auto t3 = transform(chain(3));
  auto edge3 = sigma_with_support(sigma_faces(t3), {{-1, -1}, {0, 0}, {3, 3}});
  CHECK(single(landau_component(t3, edge3), t) == "256*t^3 - 27");

  std::vector<std::string> t12{"t1", "t2"};
  auto f4 = transform(appell());
  auto s4 = sigma_faces(f4);
  CHECK(single(landau_component(f4, s4.back()), t12) == "16*t1^2 - 32*t1*t2 + 16*t2^2 - 8*t1 - 8*t2 + 1");
  for (std::size_t i = 0; i + 1 < s4.size(); ++i) CHECK(landau_component(f4, s4[i]).empty);
}

TEST_CASE("nondegeneracy") {
  std::vector<std::string> z4{"z1", "z2", "z3", "z4"};
  CHECK(check_nondegenerate(parse("1 - z1 - z2 - z3 - z4", z4)).nondegenerate);
  for (int l = 1; l <= 3; ++l) CHECK(check_nondegenerate(chain(l).f).nondegenerate);

  std::vector<std::string> z1{"z1"};
  auto sq = check_nondegenerate(parse("1 - 2*z1 + z1^2", z1));
  CHECK_FALSE(sq.nondegenerate);
  REQUIRE(sq.witness.has_value());
  CHECK(sq.witness->improper);
  REQUIRE(sq.critical_locus.size() == 1);
  CHECK(to_string(sq.critical_locus[0], z1) == "z1 - 1");

  std::vector<std::string> z12{"z1", "z2"};
  auto bin = check_nondegenerate(parse("1 - 2*z1*z2 + z1^2*z2^2", z12));
  CHECK_FALSE(bin.nondegenerate);
  REQUIRE(bin.witness.has_value());
  REQUIRE(bin.truncation.has_value());
  CHECK(bin.truncation->size() == 3);
}

TEST_CASE("degenerate input stops the variety computation") {
  DiagonalProblem p;
  p.vars = {"z1"};
  p.f = parse("(1 - z1)^2", p.vars);
  p.g = LaurentPolynomial::constant(1, 1);
  p.q = IntegerMatrix{{1}};
  auto report = landau_variety(p);
  CHECK(report.degenerate());
  CHECK(report.entries.empty());

  LandauOptions skip;
  skip.skip_nondegeneracy = true;
  auto forced = landau_variety(p, skip);
  CHECK_FALSE(forced.degenerate());
  CHECK_FALSE(forced.nondegeneracy.has_value());
}

TEST_CASE("landau variety unions") {
  std::vector<std::string> t{"t"};
  auto r1 = landau_variety(chain(1));
  REQUIRE(r1.components.size() == 1);
  REQUIRE(r1.components[0].size() == 1);
  CHECK(to_string(r1.components[0][0], t) == "4*t - 1");
  CHECK(r1.entries.size() == 4);

  auto rb = landau_variety(bivariate());
  REQUIRE(rb.components.size() == 1);
  CHECK(to_string(rb.components[0][0], t) == "4*t - 1");

  auto rf = landau_variety(appell());
  REQUIRE(rf.components.size() == 1);
  CHECK(to_string(rf.components[0][0], std::vector<std::string>{"t1", "t2"}) ==
        "16*t1^2 - 32*t1*t2 + 16*t2^2 - 8*t1 - 8*t2 + 1");
}

TEST_CASE("direct description") {
  std::vector<std::string> t{"t"};
  auto p = chain(1);
  auto poly = newton_polytope(p.f);
  for (const auto& v : poly.faces())
    if (v.dim == 0) CHECK(landau_direct(p, v).empty);
  const Face* delta = poly.find_face({{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});
  REQUIRE(delta != nullptr);
  CHECK(single(landau_direct(p, *delta), t) == "4*t - 1");

  auto f4 = appell();
  auto direct = landau_direct(f4, newton_polytope(f4.f).improper_face());
  auto tp = transform(f4);
  auto component = landau_component(tp, sigma_faces(tp).back());
  CHECK(same_zero_set(direct, component, 2));
}

TEST_CASE("paired faces agree") {
  for (const auto& p : {chain(1), chain(2), appell(), bivariate()}) {
    auto entries = crosscheck(p);
    std::size_t paired = 0;
    for (const auto& e : entries) {
      CHECK(e.agree);
      if (e.component) ++paired;
    }
    CHECK(paired > 0);
  }
}

TEST_CASE("explicit unimodular bases") {
  auto p = chain(1);
  // Columns (1,1,1), (1,2,1), (0,1,1): determinant 1.
  auto b = IntegerMatrix::from_columns({{1, 1, 1}, {1, 2, 1}, {0, 1, 1}});
  auto tp = transform(p, b);
  CHECK(tp.b == b);
  CHECK(monomial_substitute(tp.f_tilde, b) == p.f);
  LandauOptions alt;
  alt.basis = b;
  auto report = landau_variety(p, alt);
  REQUIRE(report.components.size() == 1);
  CHECK(to_string(report.components[0][0], std::vector<std::string>{"t"}) == "4*t - 1");

  CHECK_THROWS_AS(transform(p, IntegerMatrix::identity(3)), InputError);
  CHECK_THROWS_AS(transform(p, IntegerMatrix::from_columns({{1, 1, 1}, {0, 2, 0}, {0, 0, 1}})), InputError);
  CHECK_THROWS_AS(transform(p, IntegerMatrix::identity(2)), InputError);
}

TEST_CASE("the union does not depend on the unimodular extension") {
  for (const auto& p : {chain(1), chain(2), appell(), bivariate()}) {
    LandauOptions smith;
    smith.completion = CompletionStrategy::kSmith;
    auto a = landau_variety(p);
    auto b = landau_variety(p, smith);
    CHECK(same_zero_set(union_ideal(a), union_ideal(b), p.r()));
  }
}

TEST_CASE("eliminants are primitive and nonconstant") {
  for (const auto& p : {chain(1), chain(2), chain(3), appell(), bivariate()}) {
    auto report = landau_variety(p);
    for (const auto& entry : report.entries) {
      if (entry.sigma.face.dim == 0) CHECK(entry.eliminant.empty);
      if (entry.eliminant.empty) continue;
      for (const auto& g : entry.eliminant.generators) {
        CHECK_FALSE(g.is_constant());
        CHECK(normalized(g) == g);
        for (const auto& [e, c] : g.terms()) CHECK(c.get_den() == 1);
      }
    }
  }
}

TEST_CASE("positive real roots") {
  std::vector<std::string> t{"t"};
  auto r = positive_real_roots(parse("4*t - 1", t));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.25));
  auto r2 = positive_real_roots(parse("27*t^2 - 4", t));
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))));
  auto r3 = positive_real_roots(parse("(t - 1)*(t - 3)*(t + 2)", t));
  REQUIRE(r3.size() == 2);
  CHECK(r3[0] == doctest::Approx(1.0));
  CHECK(r3[1] == doctest::Approx(3.0));
  CHECK(positive_real_roots(parse("t^2 + 1", t)).empty());
}
