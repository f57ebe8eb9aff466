#include "tfano/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tfano {

namespace {

// rays of a polyhedron's tail, as a cone
Cone tail_cone(const Polyhedron& p) { return Cone::from_generators(p.ambient_dim(), p.rays()); }

RatVec lift(const RatVec& v, const Rational& h) {
  RatVec w = v;
  w.push_back(h);
  return w;
}

bool regular_safe(const Cone& c) {
  try {
    return cone_is_regular(c);
  } catch (const Error&) {
    return false;  // contains a line
  }
}

bool is_lattice_translate(const Polyhedron& delta, const Cone& sigma) {
  if (delta.vertices().size() != 1 || !is_integral(delta.vertices()[0])) return false;
  return delta.rays() == sigma.rays();
}

}  // namespace

SmoothnessResult smoothness(const FDivisor& s) {
  require_valid(s);
  SmoothnessResult res;
  const std::size_t d = s.rank();
  auto record = [&](SmoothnessCheck c) {
    if (!c.regular && res.smooth) {
      res.smooth = false;
      res.witness = c;
    }
    res.checks.push_back(std::move(c));
  };
  for (const auto& sigma : s.tail_fan().cones()) {
    std::vector<RatVec> srays;
    for (const auto& r : sigma.rays()) srays.push_back(lift(to_rat(r), 0));
    if (!s.meets_degree(sigma)) {
      // the cone over Δ×{1} + σ×{0} for every Δ with tail σ; a trivial slice gives Δ = σ
      std::vector<std::pair<std::string, Polyhedron>> deltas;
      deltas.emplace_back("generic point", sigma.as_polyhedron());
      for (const auto& [p, sub] : s.slices())
        for (const auto& f : sub.faces())
          if (tail_cone(f) == sigma) deltas.emplace_back("slice " + p.label(), f);
      std::set<Cone> seen;
      for (const auto& [where, delta] : deltas) {
        std::vector<RatVec> g = srays;
        for (const auto& v : delta.vertices()) g.push_back(lift(v, 1));
        Cone c = Cone::from_generators(d + 1, g);
        if (!seen.insert(c).second) continue;
        record({"unflagged", sigma, where, c, regular_safe(c)});
      }
      continue;
    }
    if (sigma.dim() != static_cast<int>(d)) continue;
    std::vector<MarkedPoint> nontranslates;
    for (const auto& p : s.support())
      if (!is_lattice_translate(s.delta(p, sigma), sigma)) nontranslates.push_back(p);
    if (nontranslates.size() > 2) {
      record({"flagged", sigma, "more than two non-translates", sigma, false});
      continue;
    }
    // candidates for Q; a generic point stands in for a missing one
    std::vector<std::optional<MarkedPoint>> qs(nontranslates.begin(), nontranslates.end());
    while (qs.size() < 2) qs.push_back(std::nullopt);
    for (const auto& q : qs) {
      Polyhedron rest = sigma.as_polyhedron();
      for (const auto& p : s.support())
        if (!q || !(p == *q)) rest = minkowski_sum(rest, s.delta(p, sigma));
      Polyhedron dq = q ? s.delta(*q, sigma) : sigma.as_polyhedron();
      std::vector<RatVec> g = srays;
      for (const auto& v : rest.vertices()) g.push_back(lift(v, 1));
      for (const auto& v : dq.vertices()) g.push_back(lift(v, -1));
      Cone c = Cone::from_generators(d + 1, g);
      record({"flagged", sigma, "Q = " + (q ? q->label() : std::string("generic point")), c, regular_safe(c)});
    }
  }
  return res;
}

ClassGroupPresentation class_group(const FDivisor& s, const std::vector<MarkedPoint>& extra_in) {
  require_valid(s);
  const std::size_t d = s.rank();
  std::vector<MarkedPoint> extra = extra_in;
  if (s.slices().empty() && extra.empty()) extra.push_back(MarkedPoint::zero());
  auto verts = vertex_data(s, extra);
  auto rays = excluded_rays(s);
  const std::size_t n = verts.size() + rays.size();
  ClassGroupPresentation cg;
  for (std::size_t i = 0; i < verts.size(); ++i) cg.generators.push_back("D_" + std::to_string(i + 1));
  for (std::size_t i = 0; i < rays.size(); ++i) cg.generators.push_back("E_" + std::to_string(i + 1));

  std::vector<MarkedPoint> pts;
  for (const auto& v : verts)
    if (pts.empty() || !(pts.back() == v.point)) pts.push_back(v.point);
  std::vector<IntVec> rows;
  auto weighted = [&](const MarkedPoint& p) {
    IntVec r(n, Integer(0));
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i].point == p) r[i] = verts[i].multiplicity;
    return r;
  };
  const MarkedPoint& base = pts.front();
  IntVec b = weighted(base);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    IntVec r = weighted(pts[k]);
    for (std::size_t i = 0; i < n; ++i) r[i] -= b[i];
    rows.push_back(r);
  }
  for (std::size_t e = 0; e < d; ++e) {
    IntVec r(n, Integer(0));
    for (std::size_t i = 0; i < verts.size(); ++i) r[i] = num(verts[i].vertex[e] * verts[i].multiplicity);
    for (std::size_t j = 0; j < rays.size(); ++j) r[verts.size() + j] = rays[j][e];
    rows.push_back(r);
  }
  cg.relation_matrix = IntMatrix::from_rows(rows, n);
  SmithForm snf = smith_normal_form(cg.relation_matrix);
  cg.free_rank = n - snf.rank;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.D(i, i) > 1) cg.torsion.push_back(snf.D(i, i));
  if (cg.torsion.empty())
    for (std::size_t j = 0; j < n; ++j) {
      IntVec deg;
      for (std::size_t c = snf.rank; c < n; ++c) deg.push_back(snf.Q(j, c));
      cg.degree_map.push_back(deg);
    }
  return cg;
}

int picard_rank(const FDivisor& s) {
  require_valid(s);
  long long r = 1;
  for (const auto& [p, sub] : s.slices()) r += static_cast<long long>(sub.vertices().size()) - 1;
  r += static_cast<long long>(excluded_rays(s).size());
  r -= static_cast<long long>(s.rank());
  if (r < 0) throw Error(ErrorCode::InconsistentInput, "rank formula gives " + std::to_string(r));
  return static_cast<int>(r);
}

namespace {

using Proj = std::pair<Rational, Rational>;

std::optional<Proj> proj(const MarkedPoint& p) {
  if (p.is_infinity()) return Proj{1, 0};
  auto c = p.affine_coordinate();
  if (!c) return std::nullopt;
  return Proj{*c, 1};
}

Rational br(const Proj& a, const Proj& b) { return a.first * b.second - a.second * b.first; }

MarkedPoint from_proj(const Proj& x) {
  if (x.second == 0) return MarkedPoint::infinity();
  Rational c = x.first / x.second;
  if (c == 0) return MarkedPoint::zero();
  if (c == 1) return MarkedPoint::one();
  return MarkedPoint::parse(to_string(c));
}

}  // namespace

FDivisor canonicalize_support(const FDivisor& s, PointMap* used) {
  auto sup = s.support();
  bool has0 = s.slices().count(MarkedPoint::zero()), hasinf = s.slices().count(MarkedPoint::infinity());
  PointMap phi;
  if (sup.size() <= 2) {
    // any two points can be moved to 0 and ∞
    std::vector<MarkedPoint> targets;
    if (sup.size() == 2 && !(has0 && hasinf)) {
      if (has0)
        phi = {{sup[0], MarkedPoint::zero()}, {sup[1], MarkedPoint::infinity()}};
      else if (hasinf)
        phi = {{sup[0], MarkedPoint::infinity()}, {sup[1], MarkedPoint::zero()}};
      else
        phi = {{sup[0], MarkedPoint::zero()}, {sup[1], MarkedPoint::infinity()}};
    } else if (sup.size() == 1 && !has0 && !hasinf) {
      phi = {{sup[0], MarkedPoint::zero()}};
    }
  } else if (!(has0 && hasinf)) {
    std::vector<Proj> xs;
    for (const auto& p : sup) {
      auto x = proj(p);
      if (!x) return s;  // no coordinates: caller synthesizes trivial slices instead
      xs.push_back(*x);
    }
    // Möbius map sending sup[0] → 0, sup[1] → ∞, sup[2] → 1
    const Proj &a = xs[0], &b = xs[1], &c = xs[2];
    for (std::size_t i = 0; i < sup.size(); ++i) {
      Proj y{br(xs[i], a) * br(c, b), br(xs[i], b) * br(c, a)};
      phi[sup[i]] = from_proj(y);
    }
  }
  if (used) *used = phi;
  if (phi.empty()) return s;
  std::map<MarkedPoint, Subdivision> slices;
  for (const auto& [p, sub] : s.slices()) {
    auto it = phi.find(p);
    slices.emplace(it == phi.end() ? p : it->second, sub);
  }
  std::vector<Cone> marks(s.degree_marks().begin(), s.degree_marks().end());
  return FDivisor(s.rank(), slices, s.tail_fan(), marks);
}

CoxPresentation cox_ring(const FDivisor& s0) {
  FDivisor s = canonicalize_support(s0);
  std::vector<MarkedPoint> extra;
  if (s.support().size() >= 2) {
    if (!s.slices().count(MarkedPoint::zero())) extra.push_back(MarkedPoint::zero());
    if (!s.slices().count(MarkedPoint::infinity())) extra.push_back(MarkedPoint::infinity());
  }
  ClassGroupPresentation cg = class_group(s, extra);
  if (!cg.torsion.empty()) throw Error(ErrorCode::TorsionClassGroup, "class group has torsion");
  auto verts = vertex_data(s, extra.empty() && s.slices().empty() ? std::vector{MarkedPoint::zero()} : extra);
  auto rays = excluded_rays(s);
  CoxPresentation cox;
  const std::size_t n = verts.size() + rays.size();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    cox.variables.push_back("T_" + std::to_string(i + 1));
    cox.origin.push_back(verts[i].point.label() + ":" + to_string(verts[i].vertex));
  }
  for (std::size_t j = 0; j < rays.size(); ++j) {
    cox.variables.push_back("S_" + std::to_string(j + 1));
    cox.origin.push_back("ray:" + to_string(to_rat(rays[j])));
  }
  cox.grading = IntMatrix(cg.free_rank, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < cg.free_rank; ++i) cox.grading(i, j) = cg.degree_map[j][i];
  auto monomial = [&](const MarkedPoint& p) {
    IntVec e(n, Integer(0));
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i].point == p) e[i] = verts[i].multiplicity;
    return e;
  };
  if (s.support().size() >= 2 || !extra.empty()) {
    int fresh = 0;
    std::set<MarkedPoint> pts;
    for (const auto& v : verts) pts.insert(v.point);
    for (const auto& p : pts) {
      if (p == MarkedPoint::zero() || p == MarkedPoint::infinity()) continue;
      Trinomial t;
      t.point = p;
      auto c = p.affine_coordinate();
      t.coefficient = c ? to_string(*c) : "λ_" + std::to_string(++fresh);
      t.zero = monomial(MarkedPoint::zero());
      t.infinity = monomial(MarkedPoint::infinity());
      t.third = monomial(p);
      cox.relations.push_back(t);
    }
  }
  return cox;
}

IntVec monomial_degree(const IntMatrix& g, const IntVec& e) {
  IntVec d(g.rows(), Integer(0));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) d[i] += g(i, j) * e[j];
  return d;
}

bool homogeneous(const CoxPresentation& c) {
  for (const auto& t : c.relations) {
    IntVec a = monomial_degree(c.grading, t.zero);
    if (a != monomial_degree(c.grading, t.infinity) || a != monomial_degree(c.grading, t.third)) return false;
  }
  return true;
}

namespace {

std::string monomial_text(const CoxPresentation& c, const IntVec& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    s += c.variables[i];
    if (e[i] != 1) s += "^" + e[i].str();
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string to_text(const CoxPresentation& c) {
  std::string s = "C[";
  for (std::size_t i = 0; i < c.variables.size(); ++i) s += (i ? "," : "") + c.variables[i];
  s += "]";
  if (c.relations.empty()) return s;
  s += "/<";
  for (std::size_t k = 0; k < c.relations.size(); ++k) {
    const auto& t = c.relations[k];
    if (k) s += ", ";
    std::string coef = t.coefficient == "1" ? "" : t.coefficient + "*";
    s += monomial_text(c, t.zero) + " + " + coef + monomial_text(c, t.infinity) + " + " + monomial_text(c, t.third);
  }
  return s + ">";
}

bool grading_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const std::size_t n = a.cols();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto permuted = [&]() {
    IntMatrix m(b.rows(), n);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = b(i, perm[j]);
    return m;
  };
  if (n > 8) return same_row_lattice(a, b);
  std::set<std::vector<IntVec>> tried;
  do {
    IntMatrix m = permuted();
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(m.col(j));
    if (!tried.insert(cols).second) continue;  // repeated columns give repeated candidates
    if (same_row_lattice(a, m)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace tfano
