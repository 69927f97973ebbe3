#include "ldv/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ldv/errors.hpp"
#include "ldv/lattice.hpp"
#include "ldv/polytope.hpp"

namespace ldv {

std::int64_t total_degree(const ExponentVector& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedLexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return b < a;
}

LaurentPolynomial::LaurentPolynomial(std::size_t arity) : arity_(arity) {}

LaurentPolynomial LaurentPolynomial::constant(std::size_t arity, const Rational& c) {
  LaurentPolynomial p(arity);
  p.add_term(ExponentVector(arity, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector exponent, const Rational& c) {
  LaurentPolynomial p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InputError("variable index out of range");
  ExponentVector e(arity, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ExponentVector> LaurentPolynomial::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != arity_) throw InputError("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExponentVector LaurentPolynomial::min_exponents() const {
  ExponentVector m(arity_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

ExponentVector LaurentPolynomial::max_exponents() const {
  ExponentVector m(arity_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

bool LaurentPolynomial::is_ordinary() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x < 0) return false;
  return true;
}

void LaurentPolynomial::require_same_arity(const LaurentPolynomial& o) const {
  if (o.arity_ != arity_)
    throw InputError("arity mismatch: " + std::to_string(arity_) + " vs " +
                     std::to_string(o.arity_));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  require_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  require_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  require_same_arity(o);
  LaurentPolynomial r(arity_);
  ExponentVector e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  *this = std::move(r);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::monomial_inverse() const {
  if (!is_monomial()) throw InputError("only monomials can be inverted");
  const auto& [e, c] = *terms_.begin();
  ExponentVector neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  return monomial(std::move(neg), Rational(1) / c);
}

LaurentPolynomial LaurentPolynomial::pow(std::int64_t k) const {
  if (k < 0) return monomial_inverse().pow(-k);
  LaurentPolynomial result = constant(arity_, 1);
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& by) const {
  if (by.size() != arity_) throw InputError("shift arity mismatch");
  LaurentPolynomial r(arity_);
  for (const auto& [e, c] : terms_) {
    ExponentVector s(e);
    for (std::size_t i = 0; i < arity_; ++i) s[i] += by[i];
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

double LaurentPolynomial::evaluate(std::span<const double> point) const {
  if (point.size() != arity_) throw InputError("evaluation point arity mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < arity_; ++i) term *= std::pow(point[i], static_cast<double>(e[i]));
    sum += term;
  }
  return sum;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r = a;
  r *= b;
  return r;
}
LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

LaurentPolynomial log_derivative(const LaurentPolynomial& f, std::size_t index) {
  if (index >= f.arity()) throw InputError("log_derivative: variable index out of range");
  LaurentPolynomial r(f.arity());
  for (const auto& [e, c] : f.terms()) r.add_term(e, c * Rational(static_cast<long>(e[index])));
  return r;
}

LaurentPolynomial monomial_substitute(const LaurentPolynomial& f, const IntegerMatrix& a) {
  if (!a.is_square() || a.rows() != f.arity())
    throw InputError("monomial_substitute: matrix must be square of size arity");
  if (!a.is_unimodular()) throw InputError("monomial_substitute: matrix is not unimodular");
  LaurentPolynomial r(f.arity());
  for (const auto& [e, c] : f.terms()) r.add_term(a.apply(e), c);
  return r;
}

LaurentPolynomial truncate_to_face(const LaurentPolynomial& f, const Face& face) {
  if (face.support_points.empty()) throw InputError("truncate_to_face: empty face");
  for (const auto& p : face.support_points)
    if (f.coefficient(p) == 0)
      throw InputError("truncate_to_face: face does not belong to the Newton polytope of f");
  if (face.improper) {
    if (face.support_points.size() != f.size())
      throw InputError("truncate_to_face: improper face of a different polytope");
    return f;
  }
  // Every support point of f must lie on the closed side of the face.
  const Integer level = pairing(face.normal, face.support_points.front());
  LaurentPolynomial r(f.arity());
  for (const auto& [e, c] : f.terms()) {
    Integer v = pairing(face.normal, e);
    if (v < level)
      throw InputError("truncate_to_face: face does not belong to the Newton polytope of f");
    if (v == level) {
      if (!std::binary_search(face.support_points.begin(), face.support_points.end(), e))
        throw InputError("truncate_to_face: face does not belong to the Newton polytope of f");
      r.add_term(e, c);
    }
  }
  return r;
}

LaurentPolynomial clear_denominators(const LaurentPolynomial& f) {
  if (f.is_zero()) return f;
  ExponentVector m = f.min_exponents();
  for (auto& x : m) x = -x;
  return f.shifted(m);
}

LaurentPolynomial normalized(const LaurentPolynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.terms().begin()->second < 0) scale = -scale;
  return f * scale;
}

std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string to_string(const ExponentVector& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string to_string(const LaurentPolynomial& f, std::span<const std::string> vars) {
  if (vars.size() != f.arity()) throw InputError("to_string: variable name count mismatch");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace ldv
