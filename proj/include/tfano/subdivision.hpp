#pragma once

#include "tfano/polyhedron.hpp"

#include <string>
#include <vector>

namespace tfano {

std::vector<Polyhedron> all_faces(const Polyhedron& p);  // nonempty faces incl. p itself

class Subdivision {
 public:
  Subdivision() = default;
  Subdivision(std::size_t dim, std::vector<Polyhedron> cells);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Polyhedron>& cells() const& { return cells_; }
  std::vector<Polyhedron> cells() && { return std::move(cells_); }
  std::vector<RatVec> vertices() const;  // sorted ascending
  std::vector<Cone> tail_cones() const;  // distinct tails of the maximal cells
  const Polyhedron* cell_with_tail(const Cone& sigma) const;
  std::vector<Polyhedron> faces() const;
  Subdivision translated(const RatVec& v) const;
  Subdivision linear_image(const RatMatrix& f) const;
  bool operator==(const Subdivision& o) const { return dim_ == o.dim_ && cells_ == o.cells_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Polyhedron> cells_;
};

struct Problem {
  std::string check;
  std::string detail;
};

// Facet pairing plus interior disjointness.
std::vector<Problem> completeness_problems(const Subdivision& s);
Subdivision common_refinement(const std::vector<Subdivision>& subs);

class Fan {
 public:
  Fan() = default;
  Fan(std::size_t dim, std::vector<Cone> maximal);
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Cone>& maximal() const& { return maximal_; }
  std::vector<Cone> maximal() && { return std::move(maximal_); }
  std::vector<IntVec> rays() const;
  std::vector<Cone> cones() const;  // all faces of all maximal cones
  bool complete() const;
  Subdivision as_subdivision() const;
  bool operator==(const Fan& o) const { return dim_ == o.dim_ && maximal_ == o.maximal_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Cone> maximal_;
};

}  // namespace tfano
