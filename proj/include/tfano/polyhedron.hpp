#pragma once

#include "tfano/matrix.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace tfano {

// normal·x >= rhs for inequalities, normal·x == rhs for equations
struct Halfspace {
  RatVec normal;
  Rational rhs;
};

// Pointed polyhedron kept in both representations. Vertices and primitive
// tail generators are sorted, so == is set equality.
class Polyhedron {
 public:
  static Polyhedron from_generators(std::size_t dim, std::vector<RatVec> points,
                                    std::vector<RatVec> rays = {});
  static std::optional<Polyhedron> from_constraints(std::size_t dim, const std::vector<Halfspace>& ineqs,
                                                    const std::vector<Halfspace>& eqs = {});
  static Polyhedron point(const RatVec& p) { return from_generators(p.size(), {p}); }

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool bounded() const { return rays_.empty(); }
  bool full_dimensional() const { return dim_ == static_cast<int>(ambient_); }
  // rvalue overloads keep range-for over temporaries safe
  const std::vector<RatVec>& vertices() const& { return vertices_; }
  std::vector<RatVec> vertices() && { return std::move(vertices_); }
  const std::vector<IntVec>& rays() const& { return rays_; }
  std::vector<IntVec> rays() && { return std::move(rays_); }
  std::vector<RatVec> rays_rat() const;
  // facet-defining inequalities (relative to the affine hull) and affine hull equations
  const std::vector<Halfspace>& inequalities() const& { return ineqs_; }
  std::vector<Halfspace> inequalities() && { return std::move(ineqs_); }
  const std::vector<Halfspace>& equations() const& { return eqs_; }
  std::vector<Halfspace> equations() && { return std::move(eqs_); }

  bool contains(const RatVec& x) const;
  bool contains(const Polyhedron& o) const;
  bool in_relative_interior(const RatVec& x) const;
  RatVec relative_interior_point() const;
  Polyhedron tail() const;
  Polyhedron translated(const RatVec& v) const;
  Polyhedron linear_image(const RatMatrix& f) const;
  Polyhedron scaled(const Rational& k) const;
  std::vector<Polyhedron> facets() const;
  // face minimizing w, none if w is unbounded below
  std::optional<Polyhedron> face(const RatVec& w) const;
  bool is_face_of(const Polyhedron& big) const;
  std::optional<Rational> minimum(const RatVec& w) const;

  bool operator==(const Polyhedron& o) const { return vertices_ == o.vertices_ && rays_ == o.rays_; }
  std::strong_ordering operator<=>(const Polyhedron& o) const;

 private:
  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<IntVec> rays_;
  std::vector<Halfspace> ineqs_, eqs_;
};

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);
std::optional<Polyhedron> intersection(const Polyhedron& a, const Polyhedron& b);
Polyhedron convex_hull(const std::vector<Polyhedron>& ps);

class Cone {
 public:
  Cone() = default;
  static Cone from_generators(std::size_t dim, const std::vector<RatVec>& gens);
  static Cone from_generators(std::size_t dim, const std::vector<IntVec>& gens);
  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<IntVec>& rays() const& { return rays_; }
  std::vector<IntVec> rays() && { return std::move(rays_); }
  bool contains(const RatVec& x) const;
  Polyhedron as_polyhedron() const;
  std::vector<Cone> faces() const;  // all faces including {0} and the cone itself
  bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && rays_ == o.rays_; }
  bool operator<(const Cone& o) const { return rays_ < o.rays_; }

 private:
  std::size_t ambient_ = 0;
  int dim_ = 0;
  std::vector<IntVec> rays_;
};

bool cone_is_regular(const Cone& c);

struct Measure {
  Rational vol;
  RatVec bc;
};
std::vector<std::vector<RatVec>> triangulate(const Polyhedron& p);
Measure volume_and_barycenter(const Polyhedron& p);
Measure facet_volume_and_barycenter(const Polyhedron& p);
// Integral of an affine function a·x + c over p (intrinsic lattice measure).
Rational integrate_affine(const Polyhedron& p, const RatVec& a, const Rational& c);

Integer count_lattice_points(const Polyhedron& p);
// Lattice points of p whose first prefix.size() coordinates equal prefix.
Integer count_fiber_points(const Polyhedron& p, const IntVec& prefix);
std::vector<IntVec> lattice_points(const Polyhedron& p);

// k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace tfano
