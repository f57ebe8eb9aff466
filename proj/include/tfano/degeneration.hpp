#pragma once

#include "tfano/divpolytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfano {

struct MinkowskiDecomposition {
  Subdivision base;                             // Ξ
  std::vector<MarkedPoint> points;              // where the summands came from
  std::vector<std::vector<Polyhedron>> pieces;  // pieces[c][i] = Δ^i for cell c of Ξ
  std::vector<Subdivision> summands() const;    // Ξ^i
};

struct AdmissibilityReport {
  bool ok = true;
  std::vector<std::string> violations;
};
AdmissibilityReport check_admissible(const MinkowskiDecomposition& dec);

// Decomposition of Ξ = Σ S_P over the given points, read off the support functions of Ψ.
MinkowskiDecomposition decompose(const DivisorialPolytope& psi, const std::vector<MarkedPoint>& points);

struct Degeneration {
  FDivisor s;
  DivisorialPolytope psi;
  MinkowskiDecomposition decomposition;
};
// Replaces the slices at `points` by their sum at `target`; Ψ_target becomes Σ Ψ_P.
Degeneration add_slices(const FDivisor& s, const DivisorialPolytope& psi, const std::vector<MarkedPoint>& points,
                        const MarkedPoint& target);
// With at most two stored slices: target (if stored) goes to 0 and the other one to ∞.
FDivisor relabel_two_slices(const FDivisor& s, const MarkedPoint& keep_at_zero, PointMap* used = nullptr);

struct TwoSliceFan {
  std::vector<Cone> upper, lower;  // cones over S_0 at height 1 and over S_∞ at height −1
  Fan fan;
};
TwoSliceFan two_slice_fan(const FDivisor& s);

std::optional<Polyhedron> fan_to_reflexive_polytope(const Fan& f);
bool is_reflexive(const Polyhedron& p);
std::optional<IntMatrix> lattice_equivalent(const Polyhedron& a, const Polyhedron& b);

}  // namespace tfano
