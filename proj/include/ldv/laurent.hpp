#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ldv {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent of a Laurent monomial; entries may be negative.
using ExponentVector = std::vector<std::int64_t>;

std::int64_t total_degree(const ExponentVector& e);

// Graded-then-lexicographic, larger first. This is the canonical iteration
// and printing order of LaurentPolynomial terms.
struct GradedLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class IntegerMatrix;
struct Face;

class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexGreater>;

  explicit LaurentPolynomial(std::size_t arity);

  static LaurentPolynomial constant(std::size_t arity, const Rational& c);
  static LaurentPolynomial monomial(ExponentVector exponent, const Rational& c);
  static LaurentPolynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const;

  Rational coefficient(const ExponentVector& e) const;
  std::vector<ExponentVector> support() const;

  // Adds c*z^e, pruning the term if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  // Componentwise minimum and maximum of the support (zero vector for 0).
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;
  bool is_ordinary() const;  // no negative exponents

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);

  // Exact inverse exists only for monomials.
  LaurentPolynomial monomial_inverse() const;
  LaurentPolynomial pow(std::int64_t k) const;
  LaurentPolynomial shifted(const ExponentVector& by) const;

  double evaluate(std::span<const double> point) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_arity(const LaurentPolynomial& o) const;

  std::size_t arity_;
  TermMap terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c);
LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a);

// z_i * d f / d z_i, with 0-based index.
LaurentPolynomial log_derivative(const LaurentPolynomial& f, std::size_t index);

// Rewrites every term z^a as w^(A a); A must be square and unimodular.
LaurentPolynomial monomial_substitute(const LaurentPolynomial& f, const IntegerMatrix& a);

// Sub-sum of f over exponents lying on the face. The face must come from the
// Newton polytope of f.
LaurentPolynomial truncate_to_face(const LaurentPolynomial& f, const Face& face);

// Multiplies by the monomial that makes every exponent nonnegative and
// the componentwise minimum zero.
LaurentPolynomial clear_denominators(const LaurentPolynomial& f);

// Integer-primitive multiple of f whose leading term (canonical order) is
// positive. Zero stays zero.
LaurentPolynomial normalized(const LaurentPolynomial& f);

LaurentPolynomial parse(std::string_view text, std::span<const std::string> vars);

// Canonical rendering: terms in graded-lex order, `*` between factors,
// negative exponents written as `x^-2`. Re-parses to the same polynomial.
std::string to_string(const LaurentPolynomial& f, std::span<const std::string> vars);

std::string to_string(const Rational& q);
std::string to_string(const ExponentVector& e);

}  // namespace ldv
