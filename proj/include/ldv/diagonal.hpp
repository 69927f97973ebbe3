#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ldv/lattice.hpp"
#include "ldv/laurent.hpp"
#include "ldv/polytope.hpp"

namespace ldv {

// Laurent expansion of g/f converging on the amoeba-complement component
// whose order is the vertex nu of the Newton polytope of f.
class VertexExpansion {
 public:
  VertexExpansion(LaurentPolynomial f, LaurentPolynomial g, ExponentVector vertex);

  const LaurentPolynomial& f() const noexcept { return f_; }
  const LaurentPolynomial& g() const noexcept { return g_; }
  const ExponentVector& vertex() const noexcept { return vertex_; }
  // Strictly positive on (support(f) - vertex) \ {0}.
  const ExponentVector& grading() const noexcept { return grading_; }
  // Inner normals of the tangent cone at the vertex.
  const std::vector<ExponentVector>& cone_normals() const noexcept { return cone_normals_; }

 private:
  LaurentPolynomial f_, g_;
  ExponentVector vertex_;
  ExponentVector grading_;
  std::vector<ExponentVector> cone_normals_;
};

struct ExponentBox {
  ExponentVector lo, hi;  // inclusive

  bool contains(const ExponentVector& e) const;
};

// Coefficients over a box; entries not stored are zero.
class CoefficientTable {
 public:
  explicit CoefficientTable(ExponentBox box) : box_(std::move(box)) {}

  const ExponentBox& box() const noexcept { return box_; }
  // Throws when e lies outside the box.
  Rational at(const ExponentVector& e) const;
  void set(const ExponentVector& e, const Rational& c);
  const std::map<ExponentVector, Rational>& nonzero() const noexcept { return entries_; }

 private:
  ExponentBox box_;
  std::map<ExponentVector, Rational> entries_;
};

CoefficientTable vertex_expansion_coefficients(const VertexExpansion& exp, const ExponentBox& box);

// c_{Q k} for every k in [-max_order, max_order]^r.
std::map<ExponentVector, Rational> diagonal_coefficients(const VertexExpansion& exp, const IntegerMatrix& q,
                                                         std::int64_t max_order);

// c_{Q (m ray)} for m = 0..count-1.
std::vector<Rational> diagonal_along_ray(const VertexExpansion& exp, const IntegerMatrix& q,
                                         const ExponentVector& ray, std::size_t count);

struct RadiusEstimate {
  double radius = 0;
  double residual = 0;  // RMS residual of the log-linear fit
  double lower = 0;     // two-sigma band from the slope standard error
  double upper = 0;
  std::size_t points = 0;
};

// Root-test estimate from a least-squares fit of log|c_k| against k over the
// tail half of the nonzero coefficients. Needs at least 10 of them.
RadiusEstimate radius_estimate(std::span<const Rational> coefficients);

}  // namespace ldv
