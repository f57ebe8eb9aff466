#pragma once

#include "tfano/fdivisor.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tfano {

// u ↦ <u, slope> + c
struct AffinePiece {
  RatVec slope;
  Rational c;
  Rational operator()(const RatVec& u) const { return dot(u, slope) + c; }
  bool operator==(const AffinePiece& o) const { return slope == o.slope && c == o.c; }
  bool operator<(const AffinePiece& o) const { return slope != o.slope ? slope < o.slope : c < o.c; }
};

class DivisorialPolytope {
 public:
  DivisorialPolytope() = default;
  DivisorialPolytope(Polyhedron box, std::map<MarkedPoint, std::vector<AffinePiece>> pieces);

  std::size_t rank() const { return box_.ambient_dim(); }
  const Polyhedron& box() const& { return box_; }
  Polyhedron box() && { return std::move(box_); }
  const std::map<MarkedPoint, std::vector<AffinePiece>>& pieces() const& { return pieces_; }
  std::map<MarkedPoint, std::vector<AffinePiece>> pieces() && { return std::move(pieces_); }
  std::vector<MarkedPoint> support() const;

  Rational value(const MarkedPoint& p, const RatVec& u) const;
  Rational degree(const RatVec& u) const;
  AffinePiece active_piece(const MarkedPoint& p, const RatVec& u) const;
  AffinePiece degree_piece(const RatVec& u) const;  // deg Ψ near an interior point u of a refined cell
  Subdivision regions(const MarkedPoint& p) const;  // maximal domains of linearity within box
  Subdivision refined() const;

  // kΨ on k·box
  DivisorialPolytope dilated(const Integer& k) const;

 private:
  Polyhedron box_;
  std::map<MarkedPoint, std::vector<AffinePiece>> pieces_;
};

std::vector<Problem> well_formed_problems(const DivisorialPolytope& psi);

struct SupportSlice {
  MarkedPoint point;
  std::vector<AffinePiece> functions;  // one per vertex u: v ↦ <u,v> − Ψ_P(u)
  Subdivision cells;
  std::vector<AffinePiece> cell_function;  // aligned with cells.cells()
  Rational operator()(const RatVec& v) const;
};
SupportSlice support_function(const DivisorialPolytope& psi, const MarkedPoint& p);
Rational box_min(const DivisorialPolytope& psi, const RatVec& v);  // lin(Ψ*)

struct AmpleReport {
  bool ok = true;
  std::vector<std::string> problems;
};
AmpleReport check_ample_correspondence(const DivisorialPolytope& psi, const FDivisor& s);
std::optional<std::map<MarkedPoint, Integer>> anticanonical_check(const DivisorialPolytope& psi, const FDivisor& s);

Rational volume(const DivisorialPolytope& psi);
Integer fano_degree(const DivisorialPolytope& psi);
Integer section_dim(const DivisorialPolytope& psi, const IntVec& u);
Integer total_sections(const DivisorialPolytope& psi);
// 3-dimensional pieces of Δ(deg Ψ) = {(u,x) | 0 ≤ x ≤ deg Ψ(u)}, one per refined cell with deg ≢ 0
std::vector<Polyhedron> degree_solid(const DivisorialPolytope& psi);

// Ψ'_{φ(P)}(u) = Ψ_P(Fᵀu) + <u, v_P>, matching transform() on f-divisors
DivisorialPolytope transform(const DivisorialPolytope& psi, const IntMatrix& F, const PointMap& phi,
                             const std::map<MarkedPoint, IntVec>& v);

}  // namespace tfano
