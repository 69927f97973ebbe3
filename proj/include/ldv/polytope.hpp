#pragma once

#include <cstddef>
#include <vector>

#include "ldv/laurent.hpp"

namespace ldv {

inline constexpr std::size_t kMaxPolytopeDimension = 6;

// A face is the set of generators minimising <normal, .>. The improper face
// (the whole polytope) carries the zero normal.
struct Face {
  int dim = 0;
  bool improper = false;
  std::vector<std::size_t> indices;           // into NewtonPolytope::generators
  std::vector<ExponentVector> support_points;  // generators on the face, sorted
  ExponentVector normal;

  friend bool operator==(const Face& a, const Face& b) {
    return a.support_points == b.support_points;
  }
};

struct Facet {
  ExponentVector normal;  // primitive inner normal
  Integer offset;         // <normal, x> >= offset on the polytope
};

class NewtonPolytope {
 public:
  explicit NewtonPolytope(std::vector<ExponentVector> points);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  int dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  const std::vector<ExponentVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  // Proper faces ordered by (dim, support), then the improper face.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& improper_face() const { return faces_.back(); }

  const Face& face_of_direction(const ExponentVector& v) const;
  // Face with the given support set, or nullptr.
  const Face* find_face(const std::vector<ExponentVector>& support) const;
  bool is_vertex(const ExponentVector& p) const;

  // Facets whose closure contains p.
  std::vector<Facet> facets_through(const ExponentVector& p) const;

 private:
  std::size_t ambient_dim_;
  int dim_ = 0;
  std::vector<ExponentVector> generators_;
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
};

NewtonPolytope newton_polytope(const std::vector<ExponentVector>& points);
NewtonPolytope newton_polytope(const LaurentPolynomial& f);

inline const std::vector<Face>& all_faces(const NewtonPolytope& p) { return p.faces(); }

Integer pairing(const ExponentVector& a, const ExponentVector& b);

}  // namespace ldv
