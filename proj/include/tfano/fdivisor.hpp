#pragma once

#include "tfano/subdivision.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tfano {

struct MarkedPoint {
  enum class Kind { Zero, Infinity, One, Named };
  Kind kind = Kind::Zero;
  std::string name;                   // Named only
  std::optional<Rational> coordinate;  // Named only

  static MarkedPoint zero() { return {Kind::Zero, {}, {}}; }
  static MarkedPoint infinity() { return {Kind::Infinity, {}, {}}; }
  static MarkedPoint one() { return {Kind::One, {}, {}}; }
  // "0", "inf", "1"; other labels become Named, with a coordinate when the label is a rational
  static MarkedPoint parse(const std::string& label);

  std::string label() const;
  bool is_infinity() const { return kind == Kind::Infinity; }
  std::optional<Rational> affine_coordinate() const;

  bool operator==(const MarkedPoint& o) const { return kind == o.kind && name == o.name; }
  bool operator<(const MarkedPoint& o) const { return kind != o.kind ? kind < o.kind : name < o.name; }
};

using PointMap = std::map<MarkedPoint, MarkedPoint>;

class FDivisor {
 public:
  FDivisor() = default;
  // tail fan taken from the slices unless given explicitly
  FDivisor(std::size_t rank, std::map<MarkedPoint, Subdivision> slices, std::optional<Fan> tail_fan,
           std::vector<Cone> degree_cones);

  std::size_t rank() const { return rank_; }
  const std::map<MarkedPoint, Subdivision>& slices() const& { return slices_; }
  std::map<MarkedPoint, Subdivision> slices() && { return std::move(slices_); }
  const Fan& tail_fan() const& { return tail_fan_; }
  Fan tail_fan() && { return std::move(tail_fan_); }
  const std::set<Cone>& degree_marks() const { return marks_; }
  bool flagged(const Cone& sigma) const { return marks_.count(sigma) > 0; }

  std::vector<MarkedPoint> support() const;
  Subdivision slice(const MarkedPoint& p) const;  // trivial slices synthesized
  Subdivision trivial_slice() const { return tail_fan_.as_subdivision(); }
  // Δ^σ_P for a maximal tail cone
  Polyhedron delta(const MarkedPoint& p, const Cone& sigma) const;
  Polyhedron delta_sum(const Cone& sigma) const;
  // lattice translation w when S_P = tail fan + w, none when essential
  std::optional<IntVec> trivial_shift(const MarkedPoint& p) const;
  bool meets_degree(const Cone& c) const;

 private:
  std::size_t rank_ = 0;
  std::map<MarkedPoint, Subdivision> slices_;
  Fan tail_fan_;
  std::set<Cone> marks_;
};

struct ValidationEntry {
  std::string check;
  bool ok;
  std::string detail;
};
struct ValidationReport {
  bool valid = true;
  std::vector<ValidationEntry> entries;
};
ValidationReport validate(const FDivisor& s);
void require_valid(const FDivisor& s);

struct VertexDatum {
  MarkedPoint point;
  RatVec vertex;
  Integer multiplicity;
};
Integer multiplicity(const RatVec& v);
// Vertices per slice, descending lexicographic order within a slice; extra points get the vertex 0.
std::vector<VertexDatum> vertex_data(const FDivisor& s, const std::vector<MarkedPoint>& extra = {});
std::vector<IntVec> excluded_rays(const FDivisor& s);
Integer point_multiplicity(const FDivisor& s, const MarkedPoint& p);

struct Witness {
  IntMatrix F;
  PointMap phi;  // on essential slices
  std::map<MarkedPoint, IntVec> translations;
  IntVec residual;  // total shift carried by the non-essential points
  bool caveat_non_maximal_torus = false;
};

// S'_{φ(P)} = F(S_P) + v_P
FDivisor transform(const FDivisor& s, const IntMatrix& F, const PointMap& phi, const std::map<MarkedPoint, IntVec>& v);
std::vector<IntMatrix> fan_automorphisms(const Fan& a, const Fan& b, const FDivisor* sa = nullptr,
                                         const FDivisor* sb = nullptr);
std::vector<Witness> all_equivalences(const FDivisor& a, const FDivisor& b);
std::optional<Witness> equivalent(const FDivisor& a, const FDivisor& b);
std::vector<MarkedPoint> essential_support(const FDivisor& s);
bool phi_realizable(const std::vector<MarkedPoint>& from, const std::vector<MarkedPoint>& to);

}  // namespace tfano
