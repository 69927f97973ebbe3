#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ldv/laurent.hpp"

namespace ldv {

inline constexpr std::size_t kMaxEliminationVariables = 16;
inline constexpr std::size_t kDefaultSPairCap = 1'000'000;

struct MonomialOrder {
  enum class Kind { kLex, kGrevlex, kBlock };

  Kind kind = Kind::kGrevlex;
  // kBlock only: variables of the first (eliminated) block. Each block is
  // compared by graded reverse lex.
  std::vector<bool> first_block;

  static MonomialOrder lex() { return {Kind::kLex, {}}; }
  static MonomialOrder grevlex() { return {Kind::kGrevlex, {}}; }
  static MonomialOrder block(std::vector<bool> first) { return {Kind::kBlock, std::move(first)}; }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const ExponentVector& a, const ExponentVector& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct EliminationOptions {
  std::size_t spair_cap = kDefaultSPairCap;
  // Nonzero: shuffle input generators with this seed before every basis
  // computation. Reduced bases must not change; used to test that.
  std::uint64_t shuffle_seed = 0;
};

// Ideal of ordinary polynomials over Q. Generators of a computed basis are
// stored integer-primitive with positive leading coefficient and sorted by
// increasing leading monomial.
class PolynomialIdeal {
 public:
  PolynomialIdeal(std::size_t arity, std::vector<LaurentPolynomial> generators,
                  MonomialOrder order = MonomialOrder::grevlex());

  // Clears negative exponents of each generator first; zero generators are
  // dropped.
  static PolynomialIdeal from_laurent(std::size_t arity, const std::vector<LaurentPolynomial>& generators,
                                      MonomialOrder order = MonomialOrder::grevlex());

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<LaurentPolynomial>& generators() const& noexcept { return generators_; }
  std::vector<LaurentPolynomial> generators() && { return std::move(generators_); }
  const MonomialOrder& order() const noexcept { return order_; }
  bool is_groebner() const noexcept { return groebner_; }
  bool is_unit() const;  // generators == {1}

  friend PolynomialIdeal groebner(const PolynomialIdeal&, const EliminationOptions&);

 private:
  std::size_t arity_;
  std::vector<LaurentPolynomial> generators_;
  MonomialOrder order_;
  bool groebner_ = false;
};

// Reduced Gröbner basis under ideal.order(). Throws ResourceCapExceeded when
// more than options.spair_cap S-pairs are reduced.
PolynomialIdeal groebner(const PolynomialIdeal& ideal, const EliminationOptions& options = {});

// I : m^inf via an auxiliary variable y and the relation y*m - 1.
PolynomialIdeal saturate_by_monomial(const PolynomialIdeal& ideal, const ExponentVector& m,
                                     const EliminationOptions& options = {});

// I intersected with the subring in the variables flagged in keep.
PolynomialIdeal eliminate(const PolynomialIdeal& ideal, const std::vector<bool>& keep,
                          const EliminationOptions& options = {});

struct SaturatedElimination {
  bool trivial = false;      // I : m^inf = <1>
  PolynomialIdeal eliminant;  // (I : m^inf) in k[keep], grevlex basis
};

// Saturation and elimination in a single basis computation.
SaturatedElimination saturate_and_eliminate(const PolynomialIdeal& ideal, const ExponentVector& m,
                                            const std::vector<bool>& keep,
                                            const EliminationOptions& options = {});

bool is_trivial(const PolynomialIdeal& ideal, const EliminationOptions& options = {});

// Normal form of f modulo a Gröbner basis (in the basis' order).
LaurentPolynomial reduce(const LaurentPolynomial& f, const PolynomialIdeal& basis);
bool contains(const PolynomialIdeal& basis, const LaurentPolynomial& f);

// Product of two ideals (pairwise products of generators).
PolynomialIdeal product(const PolynomialIdeal& a, const PolynomialIdeal& b);

}  // namespace ldv
