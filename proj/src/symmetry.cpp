#include "tfano/symmetry.hpp"

#include "tfano/invariants.hpp"
#include "tfano/virtual.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tfano {

namespace {

MarkedPoint image(const PointMap& phi, const MarkedPoint& p) {
  auto it = phi.find(p);
  return it == phi.end() ? p : it->second;
}

// φ with identity entries dropped, so equal maps compare equal
PointMap normalized(const PointMap& phi) {
  PointMap out;
  for (const auto& [a, b] : phi)
    if (!(a == b)) out[a] = b;
  return out;
}

}  // namespace

std::vector<AutElement> automorphism_group(const FDivisor& s) {
  require_valid(s);
  return all_equivalences(s, s);
}

AutElement compose(const AutElement& a, const AutElement& b) {
  AutElement c;
  c.F = a.F * b.F;
  std::set<MarkedPoint> dom;
  for (const auto& [p, _] : a.phi) dom.insert(p);
  for (const auto& [p, _] : b.phi) dom.insert(p);
  for (const auto& p : dom) c.phi[p] = image(a.phi, image(b.phi, p));
  // v_P = F_a v^b_P + v^a_{φ_b(P)}
  for (const auto& [p, vb] : b.translations) {
    IntVec v = a.F * vb;
    auto it = a.translations.find(image(b.phi, p));
    if (it != a.translations.end())
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += it->second[i];
    c.translations[p] = v;
  }
  c.residual = a.F * b.residual;
  for (std::size_t i = 0; i < c.residual.size() && i < a.residual.size(); ++i) c.residual[i] += a.residual[i];
  c.caveat_non_maximal_torus = a.caveat_non_maximal_torus || b.caveat_non_maximal_torus;
  return c;
}

std::optional<std::size_t> find_element(const std::vector<AutElement>& g, const IntMatrix& F, const PointMap& phi) {
  PointMap target = normalized(phi);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].F == F && normalized(g[i].phi) == target) return i;
  return std::nullopt;
}

bool is_symmetric(const std::vector<AutElement>& g, std::size_t d) {
  // u fixed by every Fᵀ  <=>  (Fᵀ − I)u = 0 for all F
  std::vector<RatVec> rows;
  for (const auto& e : g) {
    RatMatrix t = to_rat(e.F).transpose();
    for (std::size_t i = 0; i < d; ++i) {
      RatVec r = t.row(i);
      r[i] -= 1;
      rows.push_back(r);
    }
  }
  return !rows.empty() && rank(rows, d) == d;
}

bool is_symmetric(const FDivisor& s) { return is_symmetric(automorphism_group(s), s.rank()); }

std::string to_string(KE k) {
  switch (k) {
    case KE::Yes: return "yes";
    case KE::No: return "no";
    case KE::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// order of a permutation of finitely many labels
std::size_t order(const PointMap& phi) {
  std::size_t o = 1;
  std::set<MarkedPoint> seen;
  for (const auto& [p, _] : phi) {
    if (seen.count(p)) continue;
    std::size_t len = 0;
    MarkedPoint q = p;
    do {
      seen.insert(q);
      q = image(phi, q);
      ++len;
    } while (!(q == p) && len <= phi.size());
    o = std::lcm(o, len);
  }
  return o;
}

}  // namespace

KEVerdict ke_status(const FDivisor& s, const DivisorialPolytope& psi) {
  KEVerdict v;
  v.futaki = futaki_fano(psi, s);  // throws NotAnticanonical
  if (!smoothness(s).smooth) throw Error(ErrorCode::NotSmooth, "X(S) is not smooth");
  if (!is_zero(v.futaki)) {
    v.status = KE::No;
    v.reason = "Futaki character " + to_string(v.futaki) + " does not vanish";
    return v;
  }
  auto g = automorphism_group(s);
  v.symmetric = is_symmetric(g, s.rank());
  if (!v.symmetric) {
    v.reason = "Futaki character vanishes but X is not symmetric";
    return v;
  }
  std::vector<MarkedPoint> multiple;
  for (const auto& p : s.support())
    if (point_multiplicity(s, p) > 1) multiple.push_back(p);
  if (multiple.size() >= 3) {
    v.status = KE::Yes;
    v.criterion = 1;
    v.reason = "three points with μ(P) > 1";
    return v;
  }
  if (multiple.size() == 2)
    for (const auto& e : g)
      if (image(e.phi, multiple[0]) == multiple[1] && image(e.phi, multiple[1]) == multiple[0]) {
        v.status = KE::Yes;
        v.criterion = 2;
        v.reason = "points " + multiple[0].label() + " and " + multiple[1].label() + " with μ > 1 are swapped";
        return v;
      }
  // Fixed-point-free action on P^1, read through the induced permutation group G of the
  // essential labels: finite cyclic subgroups of PGL(2) always fix two points, other finite
  // subgroups fix none; a label fixed by all of G is a fixed point in any case.
  auto labels = essential_support(s);
  std::set<PointMap> G;
  for (const auto& e : g) G.insert(normalized(e.phi));
  bool cyclic = false;
  for (const auto& phi : G)
    if (order(phi) == G.size()) cyclic = true;
  bool label_fixed = false;
  for (const auto& p : labels) {
    bool fixed = true;
    for (const auto& phi : G)
      if (!(image(phi, p) == p)) fixed = false;
    if (fixed) label_fixed = true;
  }
  bool caveat = std::any_of(g.begin(), g.end(), [](const AutElement& e) { return e.caveat_non_maximal_torus; });
  if (!cyclic && !label_fixed && !caveat) {
    v.status = KE::Yes;
    v.criterion = 3;
    v.reason = "Aut(S) acts on P^1 through a non-cyclic group";
    return v;
  }
  v.reason = "Futaki character vanishes and X is symmetric, but no sufficient criterion applies";
  return v;
}

}  // namespace tfano
