#include <cctype>
#include <limits>

#include "ldv/errors.hpp"
#include "ldv/laurent.hpp"

namespace ldv {
namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := ('+' | '-') unary | power
// power  := atom ('^' exponent)?
// atom   := integer | name | '(' expr ')'
// Division is only allowed by a monomial, which covers rational literals.
class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  LaurentPolynomial run() {
    if (vars_.empty()) throw InputError("at least one variable is required");
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    auto p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  LaurentPolynomial expr() {
    auto acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial term() {
    auto acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        std::size_t at = ++pos_;
        auto d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (!d.is_monomial()) throw ParseError("division by a non-monomial", at);
        acc *= d.monomial_inverse();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  LaurentPolynomial power() {
    auto base = atom();
    if (peek() != '^') return base;
    ++pos_;
    std::size_t at = pos_;
    auto k = exponent();
    if (k < 0 && !base.is_monomial())
      throw ParseError("negative exponent of a non-monomial", at);
    if (k < 0 && base.is_zero()) throw ParseError("negative power of zero", at);
    return base.pow(k);
  }

  std::int64_t exponent() {
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    bool neg = false;
    char c = peek();
    if (c == '-' || c == '+') {
      neg = c == '-';
      ++pos_;
    }
    skip_ws();
    std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("non-integer exponent", start);
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (!at_end() && (text_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(text_[pos_]))))
      throw ParseError("non-integer exponent", start);
    if (paren) {
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    return neg ? -v : v;
  }

  LaurentPolynomial atom() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (!at_end() && text_[pos_] == '.') throw ParseError("decimal literals are not supported", pos_);
      Integer n(std::string(text_.substr(start, pos_ - start)));
      return LaurentPolynomial::constant(vars_.size(), Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return LaurentPolynomial::variable(vars_.size(), i);
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse(std::string_view text, std::span<const std::string> vars) {
  return Parser(text, vars).run();
}

}  // namespace ldv
