#pragma once

#include "tfano/divpolytope.hpp"

#include <vector>

namespace tfano {

struct Term {
  Rational coef;
  Polyhedron poly;
};

// Formal sum of bounded polytopes, modulo [Δ]+[∇] = [Δ∪∇]+[Δ∩∇]. Terms are not
// normalized; all functionals are evaluated term by term.
class VirtualPolytope {
 public:
  VirtualPolytope() = default;
  explicit VirtualPolytope(std::size_t dim) : dim_(dim) {}
  VirtualPolytope(std::size_t dim, std::vector<Term> terms);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  void add(const Rational& coef, const Polyhedron& p);
  VirtualPolytope& operator+=(const VirtualPolytope& o);
  VirtualPolytope operator*(const Rational& k) const;  // scalar multiple of coefficients
  VirtualPolytope dilated(const Integer& k) const;     // k * Δ

 private:
  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

struct VirtualMeasures {
  Rational vol, vol1;
  RatVec moment, moment1;  // vol·bc and vol1·bc1, which stay defined when the volume vanishes
  RatVec bc() const;
  RatVec bc1() const;
};
VirtualMeasures measures(const VirtualPolytope& v);
Integer lattice_count(const VirtualPolytope& v);
Integer lattice_count(const VirtualPolytope& v, const IntVec& u);  // N_u, fibers over u
RatVec project(const RatVec& x);  // drop the last coordinate

VirtualPolytope boundary(const VirtualPolytope& v);
VirtualPolytope pyramid(const VirtualPolytope& v);

// f = min of pieces on box; R is an integer below f and 0 (chosen automatically when absent)
VirtualPolytope class_of_function(const Polyhedron& box, const std::vector<AffinePiece>& pieces,
                                  std::optional<Integer> R = std::nullopt);
VirtualPolytope class_of_divpolytope(const DivisorialPolytope& psi);
// walls: the solid over ∂Box between 0 and deg Ψ, as a sum of codim-1 pieces
VirtualPolytope walls(const DivisorialPolytope& psi);
VirtualPolytope graph(const Polyhedron& box, const std::vector<AffinePiece>& pieces);

RatVec futaki_general(const DivisorialPolytope& psi);
// vol·bc of Δ(deg Ψ), projected; the Fano formula
RatVec degree_solid_moment(const DivisorialPolytope& psi);
RatVec futaki_fano(const DivisorialPolytope& psi, const FDivisor& s);
RatVec futaki_toric(const Polyhedron& delta);

}  // namespace tfano
