#include "ldv/elimination.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "ldv/errors.hpp"

namespace ldv {

namespace {

constexpr std::size_t kVars = kMaxEliminationVariables;

struct Mono {
  std::array<std::int32_t, kVars> e{};
};

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

bool disjoint(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono m;
  for (std::size_t i = 0; i < kVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

Mono quotient(const Mono& a, const Mono& b) {
  Mono m;
  for (std::size_t i = 0; i < kVars; ++i) m.e[i] = a.e[i] - b.e[i];
  return m;
}

Mono product(const Mono& a, const Mono& b) {
  Mono m;
  for (std::size_t i = 0; i < kVars; ++i) m.e[i] = a.e[i] + b.e[i];
  return m;
}

bool is_one(const Mono& a) {
  return std::all_of(a.e.begin(), a.e.end(), [](auto x) { return x == 0; });
}

class Order {
 public:
  Order(const MonomialOrder& o, std::size_t n) : kind_(o.kind), n_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      bool first = o.kind == MonomialOrder::Kind::kBlock && i < o.first_block.size() && o.first_block[i];
      (first ? block1_ : block2_).push_back(i);
    }
  }

  int cmp(const Mono& a, const Mono& b) const {
    switch (kind_) {
      case MonomialOrder::Kind::kLex:
        for (std::size_t i = 0; i < n_; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case MonomialOrder::Kind::kGrevlex:
        return grevlex(a, b, block2_);
      case MonomialOrder::Kind::kBlock:
        if (int r = grevlex(a, b, block1_)) return r;
        return grevlex(a, b, block2_);
    }
    return 0;
  }

 private:
  static int grevlex(const Mono& a, const Mono& b, const std::vector<std::size_t>& idx) {
    std::int64_t da = 0, db = 0;
    for (auto i : idx) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = idx.size(); k-- > 0;) {
      auto i = idx[k];
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  MonomialOrder::Kind kind_;
  std::size_t n_;
  std::vector<std::size_t> block1_, block2_;
};

struct Term {
  Mono m;
  Rational c;
};
using Poly = std::vector<Term>;  // strictly decreasing monomials

// h[hs..] - q * shift * g[gs..]
Poly sub_scaled(const Poly& h, std::size_t hs, const Poly& g, std::size_t gs, const Rational& q,
                const Mono& shift, const Order& ord) {
  Poly out;
  out.reserve(h.size() - hs + g.size() - gs);
  std::size_t i = hs, j = gs;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Mono gm = product(g[j].m, shift);
    int c = i == h.size() ? -1 : ord.cmp(h[i].m, gm);
    if (c > 0) {
      out.push_back(h[i++]);
    } else if (c < 0) {
      out.push_back({gm, -q * g[j].c});
      ++j;
    } else {
      Rational v = h[i].c - q * g[j].c;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Poly& p) {
  if (p.empty() || p.front().c == 1) return;
  Rational inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

// Full normal form of h modulo the monic polynomials basis[k], k in use.
Poly normal_form(Poly h, const std::vector<Poly>& basis, const std::vector<std::size_t>& use, const Order& ord) {
  Poly rem;
  std::size_t i = 0;
  while (i < h.size()) {
    const Poly* div = nullptr;
    for (auto k : use)
      if (divides(basis[k].front().m, h[i].m)) {
        div = &basis[k];
        break;
      }
    if (!div) {
      rem.push_back(std::move(h[i]));
      ++i;
      continue;
    }
    Rational q = h[i].c;  // divisor is monic
    Mono shift = quotient(h[i].m, div->front().m);
    h = sub_scaled(h, i + 1, *div, 1, q, shift, ord);
    i = 0;
  }
  return rem;
}

Poly to_poly(const LaurentPolynomial& f, const Order& ord) {
  Poly p;
  for (const auto& [e, c] : f.terms()) {
    Term t;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw InputError("elimination requires ordinary polynomials");
      t.m.e[i] = static_cast<std::int32_t>(e[i]);
    }
    t.c = c;
    p.push_back(std::move(t));
  }
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  return p;
}

LaurentPolynomial to_laurent(const Poly& p, std::size_t n) {
  LaurentPolynomial f(n);
  for (const auto& t : p) {
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.m.e[i];
    f.add_term(e, t.c);
  }
  return f;
}

// Integer-primitive with positive coefficient on the order's leading term.
LaurentPolynomial primitive_form(const Poly& p, std::size_t n) {
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : p) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.front().c < 0) scale = -scale;
  Poly q = p;
  for (auto& t : q) t.c *= scale;
  return to_laurent(q, n);
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

class Buchberger {
 public:
  Buchberger(const Order& ord, std::size_t cap) : ord_(ord), cap_(cap) {}

  // Returns the reduced basis, or {1} for the unit ideal.
  std::vector<Poly> run(std::vector<Poly> input) {
    std::sort(input.begin(), input.end(),
              [&](const Poly& a, const Poly& b) { return ord_.cmp(a.front().m, b.front().m) < 0; });
    for (auto& f : input)
      if (!add(std::move(f))) return unit();
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it)
        if (ord_.cmp(it->lcm, best->lcm) < 0) best = it;
      Pair p = *best;
      pairs_.erase(best);
      if (++reduced_ > cap_)
        throw ResourceCapExceeded("Groebner basis computation exceeded the S-pair cap of " +
                                  std::to_string(cap_) + " (instance too large)");
      if (!add(spoly(p))) return unit();
    }
    return reduced_basis();
  }

 private:
  static std::vector<Poly> unit() {
    Term one;
    one.c = 1;
    return {Poly{one}};
  }

  Poly spoly(const Pair& p) const {
    const Poly& f = polys_[p.i];
    const Poly& g = polys_[p.j];
    Poly a = sub_scaled(Poly{}, 0, f, 1, Rational(-1), quotient(p.lcm, f.front().m), ord_);
    return sub_scaled(a, 0, g, 1, Rational(1), quotient(p.lcm, g.front().m), ord_);
  }

  // false when a nonzero constant appears.
  bool add(Poly f) {
    Poly h = normal_form(std::move(f), polys_, basis_, ord_);
    if (h.empty()) return true;
    make_monic(h);
    if (is_one(h.front().m)) return false;
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
    return true;
  }

  // Gebauer-Moeller installation of the new element hi.
  void update(std::size_t hi) {
    const Mono& lh = polys_[hi].front().m;
    std::vector<std::size_t> c = basis_, d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Mono& lg = polys_[c[k]].front().m;
      Mono l1 = lcm(lh, lg);
      bool keep = disjoint(lh, lg);
      if (!keep) {
        keep = true;
        for (std::size_t k2 = k + 1; k2 < c.size() && keep; ++k2)
          if (divides(lcm(lh, polys_[c[k2]].front().m), l1)) keep = false;
        for (std::size_t k2 = 0; k2 < d.size() && keep; ++k2)
          if (divides(lcm(lh, polys_[d[k2]].front().m), l1)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && lcm(polys_[p.i].front().m, lh).e != p.lcm.e &&
                  lcm(lh, polys_[p.j].front().m).e != p.lcm.e;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto g : d) {
      const Mono& lg = polys_[g].front().m;
      if (!disjoint(lh, lg)) next.push_back({g, hi, lcm(lh, lg)});
    }
    pairs_ = std::move(next);
    std::vector<std::size_t> nb;
    for (auto g : basis_)
      if (!divides(lh, polys_[g].front().m)) nb.push_back(g);
    nb.push_back(hi);
    basis_ = std::move(nb);
  }

  std::vector<Poly> reduced_basis() const {
    std::vector<Poly> out;
    for (auto k : basis_) {
      std::vector<std::size_t> others;
      for (auto o : basis_)
        if (o != k) others.push_back(o);
      const Poly& g = polys_[k];
      Poly tail(g.begin() + 1, g.end());
      Poly r = normal_form(std::move(tail), polys_, others, ord_);
      Poly full{g.front()};
      full.insert(full.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return ord_.cmp(a.front().m, b.front().m) < 0; });
    return out;
  }

  const Order& ord_;
  std::size_t cap_;
  std::size_t reduced_ = 0;
  std::vector<Poly> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

std::vector<Poly> compute_basis(std::size_t n, const std::vector<LaurentPolynomial>& gens, const Order& ord,
                                const EliminationOptions& options) {
  std::vector<Poly> input;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    input.push_back(to_poly(g, ord));
  }
  (void)n;
  if (input.empty()) return {};
  if (options.shuffle_seed != 0) {
    std::mt19937_64 rng(options.shuffle_seed);
    std::shuffle(input.begin(), input.end(), rng);
  }
  return Buchberger(ord, options.spair_cap).run(std::move(input));
}

std::vector<LaurentPolynomial> export_basis(const std::vector<Poly>& basis, std::size_t n) {
  std::vector<LaurentPolynomial> out;
  for (const auto& p : basis) out.push_back(primitive_form(p, n));
  return out;
}

bool uses_only(const LaurentPolynomial& f, const std::vector<bool>& allowed) {
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && !allowed[i]) return false;
  return true;
}

LaurentPolynomial drop_first_variable(const LaurentPolynomial& f) {
  LaurentPolynomial r(f.arity() - 1);
  for (const auto& [e, c] : f.terms()) r.add_term(ExponentVector(e.begin() + 1, e.end()), c);
  return r;
}

LaurentPolynomial prepend_variable(const LaurentPolynomial& f) {
  LaurentPolynomial r(f.arity() + 1);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector x{0};
    x.insert(x.end(), e.begin(), e.end());
    r.add_term(x, c);
  }
  return r;
}

void check_monomial(const ExponentVector& m, std::size_t n) {
  if (m.size() != n) throw InputError("saturating monomial arity mismatch");
  bool nonconstant = false;
  for (auto x : m) {
    if (x < 0) throw InputError("saturating monomial must have nonnegative exponents");
    if (x > 0) nonconstant = true;
  }
  if (!nonconstant) throw InputError("saturating monomial must be nonconstant");
}

}  // namespace

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  if (a.size() != b.size() || a.size() > kVars) throw InputError("monomial comparison arity mismatch");
  Mono ma, mb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma.e[i] = static_cast<std::int32_t>(a[i]);
    mb.e[i] = static_cast<std::int32_t>(b[i]);
  }
  return Order(*this, a.size()).cmp(ma, mb);
}

PolynomialIdeal::PolynomialIdeal(std::size_t arity, std::vector<LaurentPolynomial> generators, MonomialOrder order)
    : arity_(arity), order_(std::move(order)) {
  if (arity == 0 || arity > kVars)
    throw InputError("polynomial ideal arity must be between 1 and " + std::to_string(kVars));
  if (order_.kind == MonomialOrder::Kind::kBlock && order_.first_block.size() != arity)
    throw InputError("block order size does not match the ideal arity");
  for (auto& g : generators) {
    if (g.arity() != arity) throw InputError("generator arity mismatch");
    if (!g.is_ordinary()) throw InputError("ideal generators must have nonnegative exponents");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

PolynomialIdeal PolynomialIdeal::from_laurent(std::size_t arity, const std::vector<LaurentPolynomial>& generators,
                                              MonomialOrder order) {
  std::vector<LaurentPolynomial> cleared;
  for (const auto& g : generators) cleared.push_back(clear_denominators(g));
  return PolynomialIdeal(arity, std::move(cleared), std::move(order));
}

bool PolynomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_constant() && !generators_.front().is_zero();
}

PolynomialIdeal groebner(const PolynomialIdeal& ideal, const EliminationOptions& options) {
  if (ideal.is_groebner()) return ideal;
  Order ord(ideal.order(), ideal.arity());
  auto basis = compute_basis(ideal.arity(), ideal.generators(), ord, options);
  PolynomialIdeal out(ideal.arity(), export_basis(basis, ideal.arity()), ideal.order());
  out.groebner_ = true;
  return out;
}

PolynomialIdeal saturate_by_monomial(const PolynomialIdeal& ideal, const ExponentVector& m,
                                     const EliminationOptions& options) {
  const std::size_t n = ideal.arity();
  check_monomial(m, n);
  std::vector<bool> keep(n, true);
  auto r = saturate_and_eliminate(ideal, m, keep, options);
  if (r.trivial) return groebner(PolynomialIdeal(n, {LaurentPolynomial::constant(n, 1)}, ideal.order()), options);
  return groebner(PolynomialIdeal(n, r.eliminant.generators(), ideal.order()), options);
}

PolynomialIdeal eliminate(const PolynomialIdeal& ideal, const std::vector<bool>& keep,
                          const EliminationOptions& options) {
  const std::size_t n = ideal.arity();
  if (keep.size() != n) throw InputError("eliminate: keep mask size mismatch");
  std::vector<bool> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = !keep[i];
  auto gb = groebner(PolynomialIdeal(n, ideal.generators(), MonomialOrder::block(first)), options);
  std::vector<LaurentPolynomial> kept;
  for (const auto& g : gb.generators())
    if (uses_only(g, keep)) kept.push_back(g);
  return groebner(PolynomialIdeal(n, std::move(kept)), options);
}

SaturatedElimination saturate_and_eliminate(const PolynomialIdeal& ideal, const ExponentVector& m,
                                            const std::vector<bool>& keep, const EliminationOptions& options) {
  const std::size_t n = ideal.arity();
  check_monomial(m, n);
  if (keep.size() != n) throw InputError("saturate_and_eliminate: keep mask size mismatch");
  if (n + 1 > kVars) throw InputError("too many variables for elimination");

  std::vector<LaurentPolynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(prepend_variable(g));
  ExponentVector ym{1};
  ym.insert(ym.end(), m.begin(), m.end());
  gens.push_back(LaurentPolynomial::monomial(ym, 1) - LaurentPolynomial::constant(n + 1, 1));

  std::vector<bool> first(n + 1, true);
  std::vector<bool> allowed(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    first[i + 1] = !keep[i];
    allowed[i + 1] = keep[i];
  }
  Order ord(MonomialOrder::block(first), n + 1);
  auto basis = compute_basis(n + 1, gens, ord, options);

  SaturatedElimination out{false, PolynomialIdeal(n, {})};
  if (basis.size() == 1 && is_one(basis.front().front().m)) {
    out.trivial = true;
    out.eliminant = groebner(PolynomialIdeal(n, {LaurentPolynomial::constant(n, 1)}), options);
    return out;
  }
  std::vector<LaurentPolynomial> kept;
  for (const auto& g : export_basis(basis, n + 1))
    if (uses_only(g, allowed)) kept.push_back(drop_first_variable(g));
  out.eliminant = groebner(PolynomialIdeal(n, std::move(kept)), options);
  return out;
}

bool is_trivial(const PolynomialIdeal& ideal, const EliminationOptions& options) {
  return groebner(ideal, options).is_unit();
}

LaurentPolynomial reduce(const LaurentPolynomial& f, const PolynomialIdeal& basis) {
  if (!basis.is_groebner()) throw InputError("reduce: ideal is not a Groebner basis");
  if (f.arity() != basis.arity()) throw InputError("reduce: arity mismatch");
  Order ord(basis.order(), basis.arity());
  std::vector<Poly> polys;
  std::vector<std::size_t> use;
  for (const auto& g : basis.generators()) {
    Poly p = to_poly(g, ord);
    make_monic(p);
    use.push_back(polys.size());
    polys.push_back(std::move(p));
  }
  return to_laurent(normal_form(to_poly(f, ord), polys, use, ord), f.arity());
}

bool contains(const PolynomialIdeal& basis, const LaurentPolynomial& f) { return reduce(f, basis).is_zero(); }

PolynomialIdeal product(const PolynomialIdeal& a, const PolynomialIdeal& b) {
  if (a.arity() != b.arity()) throw InputError("ideal product arity mismatch");
  std::vector<LaurentPolynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return PolynomialIdeal(a.arity(), std::move(gens), a.order());
}

}  // namespace ldv
