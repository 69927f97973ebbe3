#include "ldv/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ldv/errors.hpp"

namespace ldv {

namespace {

std::int64_t dot(const ExponentVector& a, const ExponentVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ExponentVector minus(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool positive_on(const ExponentVector& ell, const std::vector<ExponentVector>& rays) {
  return std::all_of(rays.begin(), rays.end(), [&](const auto& v) { return dot(ell, v) > 0; });
}

// Deterministic search over small integer vectors, ordered by max-norm.
bool search_grading(const std::vector<ExponentVector>& rays, std::size_t n, ExponentVector& out) {
  for (std::int64_t radius = 1; radius <= 4; ++radius) {
    ExponentVector v(n, -radius);
    for (;;) {
      if (positive_on(v, rays)) {
        out = v;
        return true;
      }
      std::size_t i = 0;
      while (i < n && v[i] == radius) v[i++] = -radius;
      if (i == n) break;
      ++v[i];
    }
  }
  return false;
}

struct PowerSeriesBounds {
  std::int64_t grading_budget;
  std::vector<std::int64_t> normal_bounds;
};

// g a_nu^{-1} z^{-nu} as (exponent, coefficient) terms.
std::vector<std::pair<ExponentVector, Rational>> shifted_numerator(const VertexExpansion& exp) {
  Rational inv = 1 / exp.f().coefficient(exp.vertex());
  std::vector<std::pair<ExponentVector, Rational>> out;
  for (const auto& [e, c] : exp.g().terms()) out.emplace_back(minus(e, exp.vertex()), c * inv);
  return out;
}

// Sum of h^k, with f = a_nu z^nu (1 - h), keeping only exponents that can
// still reach a requested coefficient.
std::map<ExponentVector, Rational> geometric_sum(const VertexExpansion& exp, const PowerSeriesBounds& bounds) {
  const std::size_t n = exp.f().arity();
  const Rational a_nu = exp.f().coefficient(exp.vertex());
  std::vector<std::pair<ExponentVector, Rational>> h;
  for (const auto& [e, c] : exp.f().terms()) {
    if (e == exp.vertex()) continue;
    h.emplace_back(minus(e, exp.vertex()), -c / a_nu);
  }
  auto admissible = [&](const ExponentVector& d) {
    if (dot(exp.grading(), d) > bounds.grading_budget) return false;
    for (std::size_t i = 0; i < exp.cone_normals().size(); ++i)
      if (dot(exp.cone_normals()[i], d) > bounds.normal_bounds[i]) return false;
    return true;
  };

  std::map<ExponentVector, Rational> sum, power;
  ExponentVector zero(n, 0);
  if (!admissible(zero)) return sum;
  power.emplace(zero, Rational(1));
  ExponentVector e(n);
  while (!power.empty()) {
    for (const auto& [d, c] : power) {
      auto [it, inserted] = sum.try_emplace(d, c);
      if (!inserted) it->second += c;
    }
    std::map<ExponentVector, Rational> next;
    for (const auto& [d, c] : power)
      for (const auto& [hd, hc] : h) {
        for (std::size_t i = 0; i < n; ++i) e[i] = d[i] + hd[i];
        if (!admissible(e)) continue;
        auto [it, inserted] = next.try_emplace(e, c * hc);
        if (!inserted) it->second += c * hc;
      }
    power.clear();
    for (auto& [d, c] : next)
      if (c != 0) power.emplace(d, std::move(c));
  }
  return sum;
}

// Bounds from the maxima of each functional over the requested exponents.
PowerSeriesBounds bounds_for(const VertexExpansion& exp,
                             const std::vector<std::pair<ExponentVector, Rational>>& numerator,
                             const std::function<std::int64_t(const ExponentVector&)>& max_over_targets) {
  auto bound = [&](const ExponentVector& functional) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (const auto& [e, c] : numerator) lo = std::min(lo, dot(functional, e));
    return max_over_targets(functional) - lo;
  };
  PowerSeriesBounds b;
  b.grading_budget = bound(exp.grading());
  for (const auto& nrm : exp.cone_normals()) b.normal_bounds.push_back(bound(nrm));
  return b;
}

Rational coefficient_at(const ExponentVector& beta, const std::vector<std::pair<ExponentVector, Rational>>& numerator,
                        const std::map<ExponentVector, Rational>& series) {
  Rational c = 0;
  for (const auto& [e, v] : numerator) {
    auto it = series.find(minus(beta, e));
    if (it != series.end()) c += v * it->second;
  }
  return c;
}

}  // namespace

VertexExpansion::VertexExpansion(LaurentPolynomial f, LaurentPolynomial g, ExponentVector vertex)
    : f_(std::move(f)), g_(std::move(g)), vertex_(std::move(vertex)) {
  const std::size_t n = f_.arity();
  if (g_.arity() != n || vertex_.size() != n) throw InputError("expansion: arity mismatch");
  auto polytope = newton_polytope(f_);
  if (!polytope.is_vertex(vertex_))
    throw InputError("expansion order " + to_string(vertex_) + " is not a vertex of the Newton polytope");

  std::vector<ExponentVector> rays;
  for (const auto& e : f_.support())
    if (e != vertex_) rays.push_back(minus(e, vertex_));
  grading_.assign(n, 0);
  for (const auto& facet : polytope.facets_through(vertex_)) {
    cone_normals_.push_back(facet.normal);
    for (std::size_t i = 0; i < n; ++i) grading_[i] += facet.normal[i];
  }
  if (!positive_on(grading_, rays) && !search_grading(rays, n, grading_))
    throw Error("no grading functional found for the vertex cone");
}

bool ExponentBox::contains(const ExponentVector& e) const {
  if (e.size() != lo.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < lo[i] || e[i] > hi[i]) return false;
  return true;
}

Rational CoefficientTable::at(const ExponentVector& e) const {
  if (!box_.contains(e)) throw InputError("coefficient " + to_string(e) + " lies outside the table box");
  auto it = entries_.find(e);
  return it == entries_.end() ? Rational(0) : it->second;
}

void CoefficientTable::set(const ExponentVector& e, const Rational& c) {
  if (!box_.contains(e)) throw InputError("coefficient " + to_string(e) + " lies outside the table box");
  if (c == 0) {
    entries_.erase(e);
  } else {
    entries_[e] = c;
  }
}

CoefficientTable vertex_expansion_coefficients(const VertexExpansion& exp, const ExponentBox& box) {
  const std::size_t n = exp.f().arity();
  if (box.lo.size() != n || box.hi.size() != n) throw InputError("box arity mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (box.lo[i] > box.hi[i]) throw InputError("empty exponent box");

  auto numerator = shifted_numerator(exp);
  CoefficientTable table(box);
  if (numerator.empty()) return table;
  auto bounds = bounds_for(exp, numerator, [&](const ExponentVector& fn) {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) m += std::max(fn[i] * box.lo[i], fn[i] * box.hi[i]);
    return m;
  });
  auto series = geometric_sum(exp, bounds);
  for (const auto& [d, c] : series)
    for (const auto& [e, v] : numerator) {
      ExponentVector beta(n);
      for (std::size_t i = 0; i < n; ++i) beta[i] = d[i] + e[i];
      if (!box.contains(beta)) continue;
      table.set(beta, table.at(beta) + c * v);
    }
  return table;
}

namespace {

std::map<ExponentVector, Rational> coefficients_at(const VertexExpansion& exp,
                                                   const std::vector<ExponentVector>& targets) {
  std::map<ExponentVector, Rational> out;
  auto numerator = shifted_numerator(exp);
  if (targets.empty()) return out;
  if (numerator.empty()) {
    for (const auto& t : targets) out[t] = 0;
    return out;
  }
  auto bounds = bounds_for(exp, numerator, [&](const ExponentVector& fn) {
    std::int64_t m = std::numeric_limits<std::int64_t>::min();
    for (const auto& t : targets) m = std::max(m, dot(fn, t));
    return m;
  });
  auto series = geometric_sum(exp, bounds);
  for (const auto& t : targets) out[t] = coefficient_at(t, numerator, series);
  return out;
}

ExponentVector combine(const IntegerMatrix& q, const ExponentVector& k) {
  ExponentVector beta(q.cols(), 0);
  for (std::size_t j = 0; j < q.rows(); ++j)
    for (std::size_t i = 0; i < q.cols(); ++i) beta[i] += k[j] * q(j, i).get_si();
  return beta;
}

}  // namespace

std::map<ExponentVector, Rational> diagonal_coefficients(const VertexExpansion& exp, const IntegerMatrix& q,
                                                         std::int64_t max_order) {
  if (q.cols() != exp.f().arity()) throw InputError("Q rows must have one entry per variable");
  if (max_order < 0) throw InputError("max order must be nonnegative");
  const std::size_t r = q.rows();
  std::vector<ExponentVector> ks;
  ExponentVector k(r, -max_order);
  for (;;) {
    ks.push_back(k);
    std::size_t i = r;
    while (i > 0 && k[i - 1] == max_order) k[--i] = -max_order;
    if (i == 0) break;
    ++k[i - 1];
  }
  std::vector<ExponentVector> targets;
  for (const auto& kk : ks) targets.push_back(combine(q, kk));
  auto values = coefficients_at(exp, targets);
  std::map<ExponentVector, Rational> out;
  for (std::size_t i = 0; i < ks.size(); ++i) out[ks[i]] = values[targets[i]];
  return out;
}

std::vector<Rational> diagonal_along_ray(const VertexExpansion& exp, const IntegerMatrix& q,
                                         const ExponentVector& ray, std::size_t count) {
  if (ray.size() != q.rows()) throw InputError("ray must have one entry per row of Q");
  std::vector<ExponentVector> targets;
  for (std::size_t m = 0; m < count; ++m) {
    ExponentVector k(ray);
    for (auto& x : k) x *= static_cast<std::int64_t>(m);
    targets.push_back(combine(q, k));
  }
  auto values = coefficients_at(exp, targets);
  std::vector<Rational> out;
  for (const auto& t : targets) out.push_back(values[t]);
  return out;
}

namespace {
double log_abs(const Rational& c) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, c.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, c.get_den_mpz_t());
  return std::log(std::abs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}
}  // namespace

RadiusEstimate radius_estimate(std::span<const Rational> coefficients) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    if (coefficients[k] != 0) pts.emplace_back(static_cast<double>(k), log_abs(coefficients[k]));
  if (pts.size() < 10)
    throw MathError("radius estimate needs at least 10 nonzero coefficients, got " + std::to_string(pts.size()));
  std::vector<std::pair<double, double>> tail(pts.begin() + static_cast<std::ptrdiff_t>(pts.size() / 2), pts.end());
  const double m = static_cast<double>(tail.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : tail) {
    sx += x;
    sy += y;
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : tail) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0;
  for (const auto& [x, y] : tail) {
    double res = y - (intercept + slope * x);
    ssr += res * res;
  }
  RadiusEstimate est;
  est.points = tail.size();
  est.radius = std::exp(-slope);
  est.residual = std::sqrt(ssr / m);
  const double se = tail.size() > 2 ? std::sqrt(ssr / (m - 2) / sxx) : 0.0;
  est.lower = std::exp(-slope - 2 * se);
  est.upper = std::exp(-slope + 2 * se);
  return est;
}

}  // namespace ldv
