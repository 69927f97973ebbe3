#include "ldv/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ldv/errors.hpp"

namespace ldv {

Integer pairing(const ExponentVector& a, const ExponentVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Integer(static_cast<long>(a[i])) * static_cast<long>(b[i]);
  return s;
}

namespace {

using Wide = __int128;

// Fraction-free determinant of a small square matrix.
Wide small_determinant(std::vector<std::vector<Wide>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Wide sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::int64_t narrow(Wide x) {
  if (x > INT64_MAX || x < INT64_MIN) throw InputError("polytope coordinates too large");
  return static_cast<std::int64_t>(x);
}

// Rank of a set of integer vectors by fraction-free elimination.
std::size_t vector_rank(std::vector<std::vector<Integer>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer a = rows[rank][c], b = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

int affine_dimension(const std::vector<ExponentVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Integer>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Integer> d(pts[0].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = static_cast<long>(pts[i][j] - pts[0][j]);
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(vector_rank(std::move(diffs)));
}

ExponentVector primitive(ExponentVector v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

NewtonPolytope::NewtonPolytope(std::vector<ExponentVector> points) {
  if (points.empty()) throw InputError("newton_polytope: empty point set");
  ambient_dim_ = points.front().size();
  for (const auto& p : points)
    if (p.size() != ambient_dim_) throw InputError("newton_polytope: points of different arity");
  if (ambient_dim_ > kMaxPolytopeDimension)
    throw InputError("newton_polytope: ambient dimension " + std::to_string(ambient_dim_) +
                     " exceeds the supported maximum of " + std::to_string(kMaxPolytopeDimension));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  generators_ = std::move(points);
  const std::size_t m = generators_.size();
  dim_ = affine_dimension(generators_);
  const std::size_t d = static_cast<std::size_t>(dim_);

  auto make_face = [&](std::vector<std::size_t> idx) {
    Face f;
    f.indices = std::move(idx);
    for (auto i : f.indices) f.support_points.push_back(generators_[i]);
    f.dim = affine_dimension(f.support_points);
    f.normal.assign(ambient_dim_, 0);
    return f;
  };

  if (d == 0) {
    vertices_ = generators_;
    Face f = make_face({0});
    f.improper = true;
    faces_.push_back(std::move(f));
    return;
  }

  // Coordinate projection that is injective on the affine hull.
  std::vector<std::vector<Integer>> basis;
  {
    std::vector<std::vector<Integer>> acc;
    for (std::size_t i = 1; i < m && basis.size() < d; ++i) {
      std::vector<Integer> diff(ambient_dim_);
      for (std::size_t j = 0; j < ambient_dim_; ++j) diff[j] = static_cast<long>(generators_[i][j] - generators_[0][j]);
      acc.push_back(diff);
      if (vector_rank(acc) > basis.size()) {
        basis.push_back(diff);
      } else {
        acc.pop_back();
      }
    }
  }
  std::vector<std::size_t> coords;
  for_each_subset(ambient_dim_, d, [&](const std::vector<std::size_t>& c) {
    if (!coords.empty()) return;
    std::vector<std::vector<Wide>> minor(d, std::vector<Wide>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) minor[i][j] = basis[i][c[j]].get_si();
    if (small_determinant(minor) != 0) coords = c;
  });

  std::vector<std::vector<Wide>> proj(m, std::vector<Wide>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) proj[i][j] = generators_[i][coords[j]];

  // Facets: hyperplanes through d affinely independent generators with all
  // generators on one side.
  std::vector<std::vector<std::size_t>> facet_supports;
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(m, d, [&](const std::vector<std::size_t>& sub) {
    for (const auto& fs : facet_supports)
      if (std::includes(fs.begin(), fs.end(), sub.begin(), sub.end())) return;
    std::vector<Wide> normal(d);
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<std::vector<Wide>> minor;
      for (std::size_t k = 1; k < d; ++k) {
        std::vector<Wide> row;
        for (std::size_t j = 0; j < d; ++j)
          if (j != c) row.push_back(proj[sub[k]][j] - proj[sub[0]][j]);
        minor.push_back(std::move(row));
      }
      Wide det = small_determinant(std::move(minor));
      normal[c] = (c % 2 == 0) ? det : -det;
    }
    if (std::all_of(normal.begin(), normal.end(), [](Wide x) { return x == 0; })) return;
    auto value = [&](std::size_t i) {
      Wide s = 0;
      for (std::size_t j = 0; j < d; ++j) s += normal[j] * proj[i][j];
      return s;
    };
    const Wide level = value(sub[0]);
    bool above = false, below = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < m; ++i) {
      Wide v = value(i);
      if (v > level) above = true;
      if (v < level) below = true;
      if (v == level) on.push_back(i);
    }
    if (above && below) return;
    if (!seen.insert(on).second) return;
    ExponentVector lifted(ambient_dim_, 0);
    for (std::size_t j = 0; j < d; ++j) lifted[coords[j]] = narrow(below ? -normal[j] : normal[j]);
    lifted = primitive(std::move(lifted));
    facets_.push_back({lifted, pairing(lifted, generators_[on.front()])});
    facet_supports.push_back(std::move(on));
  });

  // Every proper face is an intersection of facets.
  std::set<std::vector<std::size_t>> face_sets(facet_supports.begin(), facet_supports.end());
  std::vector<std::vector<std::size_t>> queue(facet_supports.begin(), facet_supports.end());
  while (!queue.empty()) {
    auto cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& fs : facet_supports) {
      std::vector<std::size_t> inter;
      std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(), std::back_inserter(inter));
      if (inter.empty()) continue;
      if (face_sets.insert(inter).second) queue.push_back(std::move(inter));
    }
  }

  for (const auto& idx : face_sets) {
    Face f = make_face(idx);
    for (std::size_t k = 0; k < facets_.size(); ++k)
      if (std::includes(facet_supports[k].begin(), facet_supports[k].end(), idx.begin(), idx.end()))
        for (std::size_t j = 0; j < ambient_dim_; ++j) f.normal[j] += facets_[k].normal[j];
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.support_points < b.support_points;
  });
  for (const auto& f : faces_)
    if (f.dim == 0) vertices_.push_back(f.support_points.front());

  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), 0);
  Face whole = make_face(std::move(all));
  whole.improper = true;
  faces_.push_back(std::move(whole));
}

const Face& NewtonPolytope::face_of_direction(const ExponentVector& v) const {
  if (v.size() != ambient_dim_) throw InputError("face_of_direction: arity mismatch");
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }))
    throw InputError("face_of_direction: zero direction");
  Integer best;
  std::vector<ExponentVector> argmin;
  for (const auto& g : generators_) {
    Integer val = pairing(v, g);
    if (argmin.empty() || val < best) {
      best = val;
      argmin.clear();
    }
    if (val == best) argmin.push_back(g);
  }
  const Face* f = find_face(argmin);
  if (!f) throw Error("face_of_direction: minimiser is not a face (internal error)");
  return *f;
}

const Face* NewtonPolytope::find_face(const std::vector<ExponentVector>& support) const {
  std::vector<ExponentVector> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& f : faces_)
    if (f.support_points == sorted) return &f;
  return nullptr;
}

bool NewtonPolytope::is_vertex(const ExponentVector& p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

std::vector<Facet> NewtonPolytope::facets_through(const ExponentVector& p) const {
  std::vector<Facet> out;
  for (const auto& f : facets_)
    if (pairing(f.normal, p) == f.offset) out.push_back(f);
  return out;
}

NewtonPolytope newton_polytope(const std::vector<ExponentVector>& points) { return NewtonPolytope(points); }

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw InputError("newton_polytope: zero polynomial has empty support");
  return NewtonPolytope(f.support());
}

}  // namespace ldv
