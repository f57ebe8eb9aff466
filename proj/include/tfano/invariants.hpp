#pragma once

#include "tfano/fdivisor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfano {

struct SmoothnessCheck {
  std::string kind;     // "unflagged" or "flagged"
  Cone tail;            // σ
  std::string detail;   // which slice / which Q
  Cone cone;            // the cone whose regularity was tested
  bool regular;
};
struct SmoothnessResult {
  bool smooth = true;
  std::vector<SmoothnessCheck> checks;
  std::optional<SmoothnessCheck> witness;  // first failing check
};
SmoothnessResult smoothness(const FDivisor& s);

struct ClassGroupPresentation {
  std::vector<std::string> generators;
  IntMatrix relation_matrix;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::vector<IntVec> degree_map;  // aligned with generators, empty when torsion is present
};
// extra: points whose trivial slice contributes a vertical divisor of its own
ClassGroupPresentation class_group(const FDivisor& s, const std::vector<MarkedPoint>& extra = {});
int picard_rank(const FDivisor& s);

struct Trinomial {
  std::string coefficient;  // c of the middle term
  MarkedPoint point;
  IntVec zero, infinity, third;  // exponent vectors over the variables
};
struct CoxPresentation {
  std::vector<std::string> variables;
  std::vector<std::string> origin;  // "P:vertex" or "ray:ρ"
  std::vector<Trinomial> relations;
  IntMatrix grading;  // free_rank × #variables
};
CoxPresentation cox_ring(const FDivisor& s);
IntVec monomial_degree(const IntMatrix& grading, const IntVec& exponents);
bool homogeneous(const CoxPresentation& c);
std::string to_text(const CoxPresentation& c);
// Same column multiset up to GL(Z) acting on rows; tries column permutations when n ≤ 8.
bool grading_equivalent(const IntMatrix& a, const IntMatrix& b);

// Support relabeled so that two of the slices sit at 0 and ∞; identity when already so.
FDivisor canonicalize_support(const FDivisor& s, PointMap* used = nullptr);

}  // namespace tfano
