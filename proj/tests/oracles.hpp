#pragma once

// Reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ldv/laurent.hpp"

namespace ldv::oracle {

inline Integer factorial(std::int64_t n) {
  Integer r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// (sum parts)! / prod(parts!)
inline Integer multinomial(const std::vector<std::int64_t>& parts) {
  std::int64_t total = 0;
  Integer den = 1;
  for (auto p : parts) {
    if (p < 0) return 0;
    total += p;
    den *= factorial(p);
  }
  return factorial(total) / den;
}

// Coefficients of g/f on the box [0, hi] from f * F = g, for f with a
// nonzero constant term and nonnegative support.
inline std::map<ExponentVector, Rational> convolution_coefficients(const LaurentPolynomial& f,
                                                                   const LaurentPolynomial& g,
                                                                   const ExponentVector& hi) {
  const std::size_t n = f.arity();
  const ExponentVector zero(n, 0);
  const Rational a0 = f.coefficient(zero);
  std::vector<ExponentVector> box;
  ExponentVector e(n, 0);
  for (;;) {
    box.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == hi[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  // Every beta - alpha with alpha != 0 precedes beta in total degree.
  std::stable_sort(box.begin(), box.end(),
                   [](const ExponentVector& a, const ExponentVector& b) { return total_degree(a) < total_degree(b); });
  std::map<ExponentVector, Rational> c;
  for (const auto& beta : box) {
    Rational v = g.coefficient(beta);
    for (const auto& [alpha, a] : f.terms()) {
      if (alpha == zero) continue;
      ExponentVector d(n);
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = beta[i] - alpha[i];
        if (d[i] < 0) inside = false;
      }
      if (inside) v -= a * c[d];
    }
    c[beta] = v / a0;
  }
  return c;
}

// Random polynomial with nonzero constant term, nonnegative exponents below
// max_exp and `terms` terms in total.
inline LaurentPolynomial random_taylor_denominator(std::mt19937& rng, std::size_t n, std::size_t terms,
                                                   std::int64_t max_exp) {
  std::uniform_int_distribution<std::int64_t> ex(0, max_exp);
  std::uniform_int_distribution<int> coef(-5, 5);
  const int a0 = (coef(rng) >= 0 ? 1 : -1) * (1 + std::abs(coef(rng)));
  LaurentPolynomial f = LaurentPolynomial::constant(n, a0);
  while (f.size() < terms) {
    ExponentVector e(n);
    for (auto& x : e) x = ex(rng);
    int c = coef(rng);
    if (c == 0 || f.coefficient(e) != 0) continue;
    f.add_term(e, c);
  }
  return f;
}

inline LaurentPolynomial random_laurent(std::mt19937& rng, std::size_t n, std::size_t terms, std::int64_t lo,
                                        std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> ex(lo, hi);
  std::uniform_int_distribution<int> coef(-6, 6);
  LaurentPolynomial f(n);
  for (std::size_t k = 0; k < terms; ++k) {
    ExponentVector e(n);
    for (auto& x : e) x = ex(rng);
    int c = coef(rng);
    if (c != 0) f.add_term(e, Rational(c) / static_cast<int>(1 + rng() % 3));
  }
  return f;
}

}  // namespace ldv::oracle
