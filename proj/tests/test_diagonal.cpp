#include <doctest.h>

#include <cmath>
#include <random>

#include "ldv/diagonal.hpp"
#include "ldv/errors.hpp"
#include "ldv/landau.hpp"
#include "oracles.hpp"

using namespace ldv;
using oracle::binomial;
using oracle::factorial;
using oracle::multinomial;

namespace {

ExponentBox cube(std::size_t n, std::int64_t lo, std::int64_t hi) {
  return {ExponentVector(n, lo), ExponentVector(n, hi)};
}

template <class F>
void for_box(const ExponentBox& box, F&& fn) {
  ExponentVector e = box.lo;
  const std::size_t n = e.size();
  for (;;) {
    fn(e);
    std::size_t i = 0;
    while (i < n && e[i] == box.hi[i]) e[i] = box.lo[i], ++i;
    if (i == n) return;
    ++e[i];
  }
}

}  // namespace

TEST_CASE("multinomial coefficients of 1/(1 - sum z)") {
  std::vector<std::string> z2{"z1", "z2"};
  VertexExpansion e2(parse("1 - z1 - z2", z2), LaurentPolynomial::constant(2, 1), {0, 0});
  auto t2 = vertex_expansion_coefficients(e2, cube(2, -2, 6));
  CHECK(t2.at({1, 1}) == 2);
  for_box(t2.box(), [&](const ExponentVector& a) { CHECK(t2.at(a) == Rational(multinomial(a))); });

  std::vector<std::string> z4{"z1", "z2", "z3", "z4"};
  VertexExpansion e4(parse("1 - z1 - z2 - z3 - z4", z4), LaurentPolynomial::constant(4, 1), {0, 0, 0, 0});
  auto t4 = vertex_expansion_coefficients(e4, cube(4, 0, 3));
  CHECK(t4.at({1, 1, 0, 0}) == 2);
  for_box(t4.box(), [&](const ExponentVector& a) { CHECK(t4.at(a) == Rational(multinomial(a))); });
}

TEST_CASE("monomial numerators shift the table") {
  std::vector<std::string> z{"z1", "z2"};
  auto f = parse("2 - z1 + 3*z1*z2 - z2^2", z);
  VertexExpansion plain(f, LaurentPolynomial::constant(2, 1), {0, 0});
  VertexExpansion shifted(f, parse("z1", z), {0, 0});
  auto a = vertex_expansion_coefficients(plain, cube(2, -1, 6));
  auto b = vertex_expansion_coefficients(shifted, cube(2, -1, 6));
  for_box(b.box(), [&](const ExponentVector& e) {
    ExponentVector back{e[0] - 1, e[1]};
    CHECK(b.at(e) == (a.box().contains(back) ? a.at(back) : Rational(0)));
  });
}

TEST_CASE("agreement with the convolution recurrence") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto f = oracle::random_taylor_denominator(rng, n, 2 + trial % 5, 2);
    auto g = oracle::random_taylor_denominator(rng, n, 2, 2);
    VertexExpansion exp(f, g, ExponentVector(n, 0));
    ExponentVector hi(n, 5);
    auto table = vertex_expansion_coefficients(exp, {ExponentVector(n, 0), hi});
    auto ref = oracle::convolution_coefficients(f, g, hi);
    for (const auto& [a, c] : ref) CHECK(table.at(a) == c);
  }
}

TEST_CASE("vertex orders other than the origin") {
  // x - 1 - y/x expanded where x dominates: 1/f = x^-1 sum (1/x + y/x^2)^k.
  std::vector<std::string> v{"x", "y"};
  auto f = parse("x - 1 - y/x", v);
  VertexExpansion exp(f, LaurentPolynomial::constant(2, 1), {1, 0});
  auto table = vertex_expansion_coefficients(exp, {{-12, 0}, {0, 4}});
  // coefficient of x^-(1+k+j) y^j is C(k+j, j)
  for (std::int64_t k = 0; k <= 5; ++k)
    for (std::int64_t j = 0; j <= 4; ++j)
      if (1 + k + 2 * j <= 12) CHECK(table.at({-(1 + k + 2 * j), j}) == Rational(binomial(k + j, j)));
  CHECK(table.at({0, 0}) == 0);
  CHECK(table.at({-1, 1}) == 0);

  // Diagonal along (-3,1) with numerator x: central binomial coefficients.
  VertexExpansion withg(f, parse("x", v), {1, 0});
  auto diag = diagonal_along_ray(withg, IntegerMatrix{{-3, 1}}, {1}, 8);
  for (std::size_t m = 0; m < diag.size(); ++m)
    CHECK(diag[m] == Rational(binomial(2 * static_cast<std::int64_t>(m), static_cast<std::int64_t>(m))));
}

TEST_CASE("chain family diagonal") {
  std::vector<std::string> z{"z1", "z2", "z3"};
  VertexExpansion exp(parse("1 - z1 - z2*z3 - z3", z), LaurentPolynomial::constant(3, 1), {0, 0, 0});
  auto d = diagonal_coefficients(exp, IntegerMatrix{{1, 1, 1}}, 8);
  CHECK(d.size() == 17);
  for (std::int64_t k = -8; k <= 8; ++k) CHECK(d.at({k}) == (k < 0 ? Rational(0) : Rational(binomial(2 * k, k))));

  // l = 2: z1^a (z2^2 z3^2)^b z3^c hits (k,k,k) only for a = 2b = k, c = 0.
  VertexExpansion e2(parse("1 - z1 - z2^2*z3^2 - z3", z), LaurentPolynomial::constant(3, 1), {0, 0, 0});
  auto d2 = diagonal_along_ray(e2, IntegerMatrix{{1, 1, 1}}, {1}, 13);
  for (std::int64_t k = 0; k < 13; ++k) {
    Rational want = 0;
    if (k % 2 == 0) want = Rational(multinomial({k, k / 2}));
    CHECK(d2[static_cast<std::size_t>(k)] == want);
  }
}

TEST_CASE("appell diagonal") {
  std::vector<std::string> z{"z1", "z2", "z3", "z4"};
  VertexExpansion exp(parse("1 - z1 - z2 - z3 - z4", z), LaurentPolynomial::constant(4, 1), {0, 0, 0, 0});
  auto d = diagonal_coefficients(exp, IntegerMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}, 4);
  CHECK(d.size() == 81);
  CHECK(d.at({1, 0}) == 2);
  CHECK(d.at({1, 1}) == 24);
  for (const auto& [k, c] : d) {
    if (k[0] < 0 || k[1] < 0) {
      CHECK(c == 0);
      continue;
    }
    Integer want = factorial(2 * k[0] + 2 * k[1]) /
                   (factorial(k[0]) * factorial(k[0]) * factorial(k[1]) * factorial(k[1]));
    CHECK(c == Rational(want));
  }
}

TEST_CASE("diagonal is a restriction of the full table") {
  std::vector<std::string> z{"z1", "z2", "z3"};
  VertexExpansion exp(parse("3 - z1 + 2*z2*z3 - z3^2 + z1*z3", z), parse("1 + z2", z), {0, 0, 0});
  IntegerMatrix q{{1, 0, 1}};
  auto d = diagonal_coefficients(exp, q, 5);
  auto table = vertex_expansion_coefficients(exp, cube(3, -5, 5));
  for (const auto& [k, c] : d) CHECK(c == table.at({k[0], 0, k[0]}));
}

TEST_CASE("radius estimates") {
  std::vector<Rational> cbc, ones;
  for (std::int64_t k = 0; k < 40; ++k) {
    cbc.emplace_back(binomial(2 * k, k));
    ones.emplace_back(1);
  }
  auto r = radius_estimate(cbc);
  CHECK(std::abs(r.radius - 0.25) / 0.25 < 0.05);
  CHECK(r.lower <= r.radius);
  CHECK(r.radius <= r.upper);
  CHECK(r.points == 20);
  auto one = radius_estimate(ones);
  CHECK(one.radius == doctest::Approx(1.0));
  CHECK(one.residual == doctest::Approx(0.0));

  // Zeros are skipped; alternating ones count as nonzero.
  std::vector<Rational> sparse;
  for (int k = 0; k < 40; ++k) sparse.emplace_back(k % 2 == 0 ? 1 : 0);
  CHECK(radius_estimate(sparse).points == 10);
  std::vector<Rational> few(40, Rational(0));
  for (int k = 0; k < 9; ++k) few[static_cast<std::size_t>(k)] = 1;
  CHECK_THROWS_AS(radius_estimate(few), MathError);
  CHECK_THROWS_AS(radius_estimate(std::vector<Rational>{}), MathError);
}

TEST_CASE("radius of the chain diagonal against the eliminant") {
  std::vector<std::string> z{"z1", "z2", "z3"};
  for (int l = 1; l <= 2; ++l) {
    auto f = parse("1 - z1 - z2^" + std::to_string(l) + "*z3^" + std::to_string(l) + " - z3", z);
    VertexExpansion exp(f, LaurentPolynomial::constant(3, 1), {0, 0, 0});
    auto coeffs = diagonal_along_ray(exp, IntegerMatrix{{1, 1, 1}}, {1}, 40);
    auto est = radius_estimate(coeffs);
    double t0 = static_cast<double>(l) / (l + 1) * std::pow(1.0 / (l + 1), 1.0 / l);
    CHECK(std::abs(est.radius - t0) / t0 < (l == 1 ? 0.05 : 0.10));
  }
}

TEST_CASE("errors") {
  std::vector<std::string> z{"z1", "z2"};
  auto f = parse("1 - z1 - z2 + z1*z2/4", z);
  CHECK_THROWS_AS(VertexExpansion(f, LaurentPolynomial::constant(2, 1), {2, 2}), InputError);
  auto diamond = parse("1 + z1 + 1/z1 + z2 + 1/z2", z);
  CHECK_THROWS_AS(VertexExpansion(diamond, LaurentPolynomial::constant(2, 1), {0, 0}), InputError);
  CHECK_THROWS_AS(VertexExpansion(f, LaurentPolynomial::constant(3, 1), {0, 0}), InputError);

  VertexExpansion exp(f, LaurentPolynomial::constant(2, 1), {0, 0});
  CHECK_THROWS_AS(vertex_expansion_coefficients(exp, {{2, 0}, {1, 3}}), InputError);
  CHECK_THROWS_AS(vertex_expansion_coefficients(exp, {{0, 0, 0}, {1, 1, 1}}), InputError);
  auto table = vertex_expansion_coefficients(exp, cube(2, 0, 2));
  CHECK_THROWS_AS(table.at({3, 0}), InputError);
  CHECK_THROWS_AS(diagonal_coefficients(exp, IntegerMatrix{{1, 1, 1}}, 2), InputError);
}
