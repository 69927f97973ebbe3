#include "ldv/landau.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "ldv/errors.hpp"

namespace ldv {

namespace {

std::vector<std::string> numbered(const std::string& base, std::size_t count) {
  if (count == 1) return {base};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(base + std::to_string(i));
  return out;
}

// Re-embeds f (arity k) into arity total at offset.
LaurentPolynomial embed(const LaurentPolynomial& f, std::size_t total, std::size_t offset) {
  LaurentPolynomial r(total);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector x(total, 0);
    std::copy(e.begin(), e.end(), x.begin() + static_cast<std::ptrdiff_t>(offset));
    r.add_term(x, c);
  }
  return r;
}

// Restriction of a polynomial that only involves variables [offset, offset+k).
LaurentPolynomial restrict_to(const LaurentPolynomial& f, std::size_t offset, std::size_t k) {
  LaurentPolynomial r(k);
  for (const auto& [e, c] : f.terms())
    r.add_term(ExponentVector(e.begin() + static_cast<std::ptrdiff_t>(offset),
                              e.begin() + static_cast<std::ptrdiff_t>(offset + k)),
               c);
  return r;
}

Eliminant run_elimination(const std::vector<LaurentPolynomial>& gens, std::size_t total, std::size_t keep_from,
                          const EliminationOptions& options) {
  auto ideal = PolynomialIdeal::from_laurent(total, gens);
  std::vector<bool> keep(total, false);
  for (std::size_t i = keep_from; i < total; ++i) keep[i] = true;
  auto res = saturate_and_eliminate(ideal, ExponentVector(total, 1), keep, options);
  Eliminant out;
  out.empty = res.trivial;
  if (!res.trivial)
    for (const auto& g : res.eliminant.generators())
      out.generators.push_back(normalized(restrict_to(g, keep_from, total - keep_from)));
  return out;
}

}  // namespace

void DiagonalProblem::validate() const {
  const std::size_t n = vars.size();
  if (n == 0) throw InputError("no variables declared");
  if (f.arity() != n || g.arity() != n) throw InputError("f and g must use the declared variables");
  if (f.is_zero()) throw InputError("denominator f is zero");
  if (q.cols() != n && q.rows() != 0) throw InputError("each Q row must have one entry per variable");
  if (q.rows() > n) throw InputError("Q has more rows than variables");
  if (!is_saturated(q)) throw InputError("Q does not generate a saturated sublattice");
  if (order && order->size() != n) throw InputError("order must have one entry per variable");
}

std::vector<std::string> TransformedProblem::t_names() const {
  return std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(r));
}

TransformedProblem transform(const DiagonalProblem& problem, CompletionStrategy strategy) {
  problem.validate();
  IntegerMatrix q = problem.q.rows() == 0 ? IntegerMatrix(0, problem.n()) : problem.q;
  return transform(problem, extend_to_unimodular(q, strategy));
}

TransformedProblem transform(const DiagonalProblem& problem, const IntegerMatrix& b) {
  problem.validate();
  const std::size_t n = problem.n();
  if (b.rows() != n || b.cols() != n)
    throw InputError("transform: basis must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t j = 0; j < problem.r(); ++j)
    if (b.column(j) != problem.q.row(j))
      throw InputError("transform: basis column " + std::to_string(j + 1) + " is not row " + std::to_string(j + 1) +
                       " of Q");
  TransformedProblem tp;
  tp.r = problem.r();
  tp.s = n - tp.r;
  tp.b = b;
  tp.a = inverse_unimodular(tp.b);  // throws unless |det b| = 1
  tp.f_tilde = monomial_substitute(problem.f, tp.a);
  tp.names = numbered("t", tp.r);
  auto u = numbered("u", tp.s);
  tp.names.insert(tp.names.end(), u.begin(), u.end());
  return tp;
}

NondegeneracyVerdict check_nondegenerate(const LaurentPolynomial& f, const EliminationOptions& options) {
  const std::size_t n = f.arity();
  auto polytope = newton_polytope(f);
  NondegeneracyVerdict verdict;
  for (const auto& face : polytope.faces()) {
    auto fd = truncate_to_face(f, face);
    if (fd.is_monomial()) continue;  // no torus zeros
    std::vector<LaurentPolynomial> gens{fd};
    for (std::size_t i = 0; i < n; ++i) gens.push_back(log_derivative(fd, i));
    auto ideal = PolynomialIdeal::from_laurent(n, gens);
    auto res = saturate_and_eliminate(ideal, ExponentVector(n, 1), std::vector<bool>(n, true), options);
    if (res.trivial) continue;
    verdict.nondegenerate = false;
    verdict.witness = face;
    verdict.truncation = fd;
    for (const auto& g : res.eliminant.generators()) verdict.critical_locus.push_back(normalized(g));
    break;
  }
  return verdict;
}

std::vector<SigmaFace> u_faces(const TransformedProblem& tp) {
  const std::size_t r = tp.r, s = tp.s;
  std::vector<ExponentVector> pts;
  for (const auto& [e, c] : tp.f_tilde.terms()) pts.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(r), e.end());
  NewtonPolytope delta(pts);
  std::vector<SigmaFace> out;
  for (std::size_t id = 0; id < delta.faces().size(); ++id) {
    SigmaFace sf;
    sf.face_id = id;
    sf.face = delta.faces()[id];
    sf.truncation = LaurentPolynomial(r + s);
    for (const auto& [e, c] : tp.f_tilde.terms()) {
      ExponentVector uproj(e.begin() + static_cast<std::ptrdiff_t>(r), e.end());
      if (!std::binary_search(sf.face.support_points.begin(), sf.face.support_points.end(), uproj)) continue;
      sf.truncation.add_term(e, c);
      for (std::size_t i = 0; i < r; ++i)
        if (e[i] != 0) sf.depends_on_t = true;
    }
    out.push_back(std::move(sf));
  }
  return out;
}

std::vector<SigmaFace> sigma_faces(const TransformedProblem& tp) {
  auto all = u_faces(tp);
  std::vector<SigmaFace> out;
  for (auto& f : all)
    if (f.depends_on_t) out.push_back(std::move(f));
  return out;
}

Eliminant landau_component(const TransformedProblem& tp, const SigmaFace& sigma, const EliminationOptions& options) {
  const std::size_t n = tp.r + tp.s;
  // Variables ordered (u, t) so that t is the kept trailing block.
  auto reorder = [&](const LaurentPolynomial& p) {
    LaurentPolynomial out(n);
    for (const auto& [e, c] : p.terms()) {
      ExponentVector x(n);
      std::copy(e.begin() + static_cast<std::ptrdiff_t>(tp.r), e.end(), x.begin());
      std::copy(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(tp.r), x.begin() + static_cast<std::ptrdiff_t>(tp.s));
      out.add_term(x, c);
    }
    return out;
  };
  std::vector<LaurentPolynomial> gens{reorder(sigma.truncation)};
  for (std::size_t j = 0; j < tp.s; ++j) gens.push_back(reorder(log_derivative(sigma.truncation, tp.r + j)));
  return run_elimination(gens, n, tp.s, options);
}

Eliminant landau_direct(const DiagonalProblem& problem, const Face& delta, const EliminationOptions& options) {
  const std::size_t n = problem.n(), r = problem.r(), total = n + r;
  auto fd = truncate_to_face(problem.f, delta);
  std::vector<LaurentPolynomial> logd;
  for (std::size_t i = 0; i < n; ++i) logd.push_back(log_derivative(fd, i));

  std::vector<LaurentPolynomial> gens{embed(fd, total, 0)};
  // (r+1)-minors of the matrix with the log-gradient over the rows of Q,
  // expanded along the first row.
  if (r + 1 <= n) {
    std::vector<std::size_t> cols(r + 1);
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
      LaurentPolynomial minor(n);
      for (std::size_t k = 0; k <= r; ++k) {
        IntegerMatrix sub(r, r);
        for (std::size_t i = 0; i < r; ++i) {
          std::size_t jj = 0;
          for (std::size_t kk = 0; kk <= r; ++kk) {
            if (kk == k) continue;
            sub(i, jj++) = problem.q(i, cols[kk]);
          }
        }
        Integer cof = r == 0 ? Integer(1) : sub.determinant();
        if (k % 2) cof = -cof;
        if (cof != 0) minor += logd[cols[k]] * Rational(cof);
      }
      if (!minor.is_zero()) gens.push_back(embed(minor, total, 0));
      std::size_t i = r + 1;
      while (i > 0 && cols[i - 1] == n - (r + 1) + i - 1) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j <= r; ++j) cols[j] = cols[j - 1] + 1;
    }
  }
  // t_j z^{q_j^-} - z^{q_j^+}
  for (std::size_t j = 0; j < r; ++j) {
    ExponentVector neg(total, 0), pos(total, 0);
    for (std::size_t i = 0; i < n; ++i) {
      long v = problem.q(j, i).get_si();
      (v < 0 ? neg : pos)[i] = v < 0 ? -v : v;
    }
    neg[n + j] = 1;
    gens.push_back(LaurentPolynomial::monomial(neg, 1) - LaurentPolynomial::monomial(pos, 1));
  }
  return run_elimination(gens, total, n, options);
}

namespace {
TransformedProblem transform_for(const DiagonalProblem& problem, const LandauOptions& options) {
  return options.basis ? transform(problem, *options.basis) : transform(problem, options.completion);
}
}  // namespace

LandauReport landau_variety(const DiagonalProblem& problem, const LandauOptions& options) {
  LandauReport report;
  report.transformed = transform_for(problem, options);
  if (!options.skip_nondegeneracy) {
    report.nondegeneracy = check_nondegenerate(problem.f, options.elimination);
    if (!report.nondegeneracy->nondegenerate) return report;
  }
  auto sigma = sigma_faces(report.transformed);
  std::vector<Eliminant> results(sigma.size());
  if (options.parallel && sigma.size() > 1) {
    std::vector<std::future<Eliminant>> jobs;
    for (const auto& sf : sigma)
      jobs.push_back(std::async(std::launch::async, [&, &sf = sf] {
        return landau_component(report.transformed, sf, options.elimination);
      }));
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < sigma.size(); ++i)
      results[i] = landau_component(report.transformed, sigma[i], options.elimination);
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!results[i].empty) report.components.push_back(results[i].generators);
    report.entries.push_back({std::move(sigma[i]), std::move(results[i])});
  }
  return report;
}

bool same_zero_set(const Eliminant& a, const Eliminant& b, std::size_t r, const EliminationOptions& options) {
  if (a.empty || b.empty) return a.empty == b.empty;
  if (r == 0) return true;
  auto ga = groebner(PolynomialIdeal(r, a.generators), options);
  auto gb = groebner(PolynomialIdeal(r, b.generators), options);
  for (const auto& p : a.generators)
    if (!contains(gb, p)) return false;
  for (const auto& p : b.generators)
    if (!contains(ga, p)) return false;
  return true;
}

Eliminant union_ideal(const LandauReport& report, const EliminationOptions& options) {
  Eliminant out;
  const std::size_t r = report.transformed.r;
  if (report.components.empty() || r == 0) return out;
  PolynomialIdeal acc(r, report.components.front());
  for (std::size_t i = 1; i < report.components.size(); ++i)
    acc = product(acc, PolynomialIdeal(r, report.components[i]));
  out.empty = false;
  auto basis = groebner(acc, options);
  for (const auto& g : basis.generators()) out.generators.push_back(normalized(g));
  return out;
}

std::vector<CrosscheckEntry> crosscheck(const DiagonalProblem& problem, const LandauOptions& options) {
  auto tp = transform_for(problem, options);
  auto faces_u = u_faces(tp);
  auto delta_f = newton_polytope(problem.f);
  const std::size_t r = tp.r;

  // Preimage of every u-face in w-exponents.
  std::vector<std::vector<ExponentVector>> preimages;
  for (const auto& sf : faces_u) {
    auto pts = sf.truncation.support();
    std::sort(pts.begin(), pts.end());
    preimages.push_back(std::move(pts));
  }

  std::vector<CrosscheckEntry> out;
  for (std::size_t id = 0; id < delta_f.faces().size(); ++id) {
    const Face& delta = delta_f.faces()[id];
    CrosscheckEntry entry;
    entry.delta_id = id;
    entry.delta = delta;
    std::vector<ExponentVector> image;
    for (const auto& p : delta.support_points) image.push_back(tp.a.apply(p));
    std::sort(image.begin(), image.end());
    for (std::size_t k = 0; k < preimages.size(); ++k)
      if (preimages[k] == image) entry.sigma_id = k;
    entry.direct = landau_direct(problem, delta, options.elimination);
    if (entry.sigma_id) {
      entry.component = landau_component(tp, faces_u[*entry.sigma_id], options.elimination);
      entry.agree = same_zero_set(entry.direct, *entry.component, r, options.elimination);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<double> positive_real_roots(const LaurentPolynomial& p) {
  if (p.arity() != 1) throw InputError("positive_real_roots expects a univariate polynomial");
  if (p.is_zero()) throw MathError("the zero polynomial has no isolated roots");
  auto q = clear_denominators(p);
  auto deg = static_cast<std::size_t>(q.max_exponents()[0]);
  std::vector<double> c(deg + 1, 0.0);  // c[i] * x^i
  for (const auto& [e, v] : q.terms()) c[static_cast<std::size_t>(e[0])] = v.get_d();

  auto eval = [](const std::vector<double>& a, double x) {
    double y = 0;
    for (std::size_t i = a.size(); i-- > 0;) y = y * x + a[i];
    return y;
  };
  double bound = 0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
  bound += 1;

  // Roots of a polynomial on [0, bound] via the roots of its derivative.
  auto solve = [&](auto&& self, const std::vector<double>& a) -> std::vector<double> {
    if (a.size() <= 1) return {};
    std::vector<double> da;
    for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<double>(i));
    std::vector<double> knots{0.0};
    for (double x : self(self, da)) knots.push_back(x);
    knots.push_back(bound);
    std::vector<double> roots;
    double scale = 0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      double lo = knots[k], hi = knots[k + 1];
      double flo = eval(a, lo), fhi = eval(a, hi);
      if (std::abs(flo) <= 1e-12 * scale) {
        roots.push_back(lo);
        continue;
      }
      if ((flo < 0) == (fhi < 0)) continue;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = eval(a, mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    if (std::abs(eval(a, bound)) <= 1e-12 * scale) roots.push_back(bound);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)); }),
                roots.end());
    return roots;
  };
  std::vector<double> out;
  for (double x : solve(solve, c))
    if (x > 0) out.push_back(x);
  return out;
}

}  // namespace ldv
