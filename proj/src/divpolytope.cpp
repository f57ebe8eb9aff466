#include "tfano/divpolytope.hpp"

#include <algorithm>
#include <set>

namespace tfano {

DivisorialPolytope::DivisorialPolytope(Polyhedron box, std::map<MarkedPoint, std::vector<AffinePiece>> pieces)
    : box_(std::move(box)), pieces_(std::move(pieces)) {
  for (auto& [p, list] : pieces_) {
    if (list.empty()) throw Error(ErrorCode::Invalid, "point " + p.label() + " has no affine pieces");
    for (const auto& a : list)
      if (a.slope.size() != box_.ambient_dim()) throw Error(ErrorCode::IncompatibleDimension, "slope dimension");
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::vector<MarkedPoint> DivisorialPolytope::support() const {
  std::vector<MarkedPoint> s;
  for (const auto& [p, _] : pieces_) s.push_back(p);
  return s;
}

AffinePiece DivisorialPolytope::active_piece(const MarkedPoint& p, const RatVec& u) const {
  auto it = pieces_.find(p);
  if (it == pieces_.end()) return {RatVec(rank(), Rational(0)), 0};
  const AffinePiece* best = &it->second[0];
  Rational bv = (*best)(u);
  for (const auto& a : it->second) {
    Rational v = a(u);
    if (v < bv) {
      bv = v;
      best = &a;
    }
  }
  return *best;
}

Rational DivisorialPolytope::value(const MarkedPoint& p, const RatVec& u) const { return active_piece(p, u)(u); }

Rational DivisorialPolytope::degree(const RatVec& u) const {
  Rational s = 0;
  for (const auto& [p, _] : pieces_) s += value(p, u);
  return s;
}

AffinePiece DivisorialPolytope::degree_piece(const RatVec& u) const {
  AffinePiece d{RatVec(rank(), Rational(0)), 0};
  for (const auto& [p, _] : pieces_) {
    auto a = active_piece(p, u);
    d.slope = add(d.slope, a.slope);
    d.c += a.c;
  }
  return d;
}

Subdivision DivisorialPolytope::regions(const MarkedPoint& p) const {
  auto it = pieces_.find(p);
  if (it == pieces_.end()) return Subdivision(rank(), {box_});
  std::vector<Polyhedron> cells;
  const auto& list = it->second;
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto in = box_.inequalities();
    for (std::size_t j = 0; j < list.size(); ++j)
      if (j != i) in.push_back({sub(list[j].slope, list[i].slope), list[i].c - list[j].c});
    auto r = Polyhedron::from_constraints(rank(), in);
    if (r && r->full_dimensional()) cells.push_back(*r);
  }
  return Subdivision(rank(), cells);
}

Subdivision DivisorialPolytope::refined() const {
  std::vector<Subdivision> subs{Subdivision(rank(), {box_})};
  for (const auto& [p, _] : pieces_) subs.push_back(regions(p));
  return common_refinement(subs);
}

DivisorialPolytope DivisorialPolytope::dilated(const Integer& k) const {
  std::map<MarkedPoint, std::vector<AffinePiece>> np;
  for (const auto& [p, list] : pieces_)
    for (const auto& a : list) np[p].push_back({a.slope, a.c * k});
  return DivisorialPolytope(box_.scaled(Rational(k)), np);
}

std::vector<Problem> well_formed_problems(const DivisorialPolytope& psi) {
  std::vector<Problem> out;
  const auto& box = psi.box();
  if (!box.bounded()) out.push_back({"box", "box is unbounded"});
  if (!box.full_dimensional()) out.push_back({"box", "box is not full-dimensional"});
  if (!out.empty()) return out;
  for (const auto& p : psi.support())
    for (const auto& u : psi.regions(p).vertices()) {
      if (!is_integral(u)) out.push_back({"graph " + p.label(), "non-lattice vertex " + to_string(u)});
      else if (den(psi.value(p, u)) != 1)
        out.push_back({"graph " + p.label(), "non-integral value at " + to_string(u)});
    }
  auto ref = psi.refined();
  for (const auto& u : ref.vertices())
    if (psi.degree(u) < 0) out.push_back({"degree", "deg Ψ negative at " + to_string(u)});
  bool positive = false;
  for (const auto& c : ref.cells())
    if (psi.degree(c.relative_interior_point()) > 0) positive = true;
  if (!positive) out.push_back({"degree", "deg Ψ vanishes on the interior of the box"});
  return out;
}

Rational SupportSlice::operator()(const RatVec& v) const {
  Rational best = functions[0](v);
  for (const auto& f : functions) best = std::min(best, f(v));
  return best;
}

SupportSlice support_function(const DivisorialPolytope& psi, const MarkedPoint& p) {
  SupportSlice s;
  s.point = p;
  const std::size_t d = psi.rank();
  std::set<RatVec> verts;
  for (const auto& u : psi.regions(p).vertices()) verts.insert(u);
  for (const auto& u : verts) s.functions.push_back({u, -psi.value(p, u)});
  std::vector<Polyhedron> cells;
  std::vector<AffinePiece> fn;
  for (std::size_t i = 0; i < s.functions.size(); ++i) {
    std::vector<Halfspace> in;
    for (std::size_t j = 0; j < s.functions.size(); ++j)
      if (j != i)
        in.push_back({sub(s.functions[j].slope, s.functions[i].slope), s.functions[i].c - s.functions[j].c});
    auto r = Polyhedron::from_constraints(d, in);
    if (r && r->full_dimensional()) {
      cells.push_back(*r);
      fn.push_back(s.functions[i]);
    }
  }
  s.cells = Subdivision(d, cells);
  for (const auto& c : s.cells.cells())
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i] == c) s.cell_function.push_back(fn[i]);
  return s;
}

Rational box_min(const DivisorialPolytope& psi, const RatVec& v) { return *psi.box().minimum(v); }

namespace {

// normal cone of the box at u: generated by the tight facet normals
Cone normal_cone(const Polyhedron& box, const RatVec& u) {
  std::vector<RatVec> g;
  for (const auto& h : box.inequalities())
    if (dot(h.normal, u) == h.rhs) g.push_back(h.normal);
  return Cone::from_generators(box.ambient_dim(), g);
}

bool meets_degree_set(const FDivisor& s, const Cone& c) {
  Polyhedron cp = c.as_polyhedron();
  for (const auto& sigma : s.tail_fan().maximal())
    if (s.flagged(sigma) && intersection(s.delta_sum(sigma), cp)) return true;
  return false;
}

}  // namespace

AmpleReport check_ample_correspondence(const DivisorialPolytope& psi, const FDivisor& s) {
  AmpleReport r;
  if (psi.rank() != s.rank()) {
    r.ok = false;
    r.problems.push_back("rank mismatch");
    return r;
  }
  std::set<MarkedPoint> pts;
  for (const auto& p : s.support()) pts.insert(p);
  for (const auto& p : psi.support()) pts.insert(p);
  if (pts.empty()) pts.insert(MarkedPoint::zero());
  for (const auto& p : pts) {
    auto h = support_function(psi, p);
    if (!(h.cells == s.slice(p))) {
      r.ok = false;
      r.problems.push_back("linearity regions of Ψ*_" + p.label() + " differ from the cells of S_" + p.label());
    }
  }
  // zero set of deg Ψ
  auto ref = psi.refined();
  std::set<RatVec> probes;
  for (const auto& c : ref.cells()) {
    probes.insert(c.relative_interior_point());
    for (const auto& f : all_faces(c)) probes.insert(f.relative_interior_point());
  }
  for (const auto& u : probes) {
    bool zero = psi.degree(u) == 0;
    bool predicted = meets_degree_set(s, normal_cone(psi.box(), u));
    if (zero != predicted) {
      r.ok = false;
      r.problems.push_back("deg Ψ(" + to_string(u) + ") = " + to_string(psi.degree(u)) +
                           (predicted ? " but the degree meets the normal cone" : " but the degree misses the normal cone"));
    }
  }
  return r;
}

std::optional<std::map<MarkedPoint, Integer>> anticanonical_check(const DivisorialPolytope& psi, const FDivisor& s) {
  std::set<MarkedPoint> pts;
  for (const auto& p : s.support()) pts.insert(p);
  for (const auto& p : psi.support()) pts.insert(p);
  std::map<MarkedPoint, Integer> a;
  Integer total = 0;
  for (const auto& p : pts) {
    auto h = support_function(psi, p);
    std::optional<Rational> ap;
    for (const auto& v : s.slice(p).vertices()) {
      Rational x = h(v) - 1 + Rational(1) / Rational(multiplicity(v));
      if (den(x) != 1) return std::nullopt;
      if (ap && *ap != x) return std::nullopt;
      ap = x;
    }
    a[p] = num(*ap);
    total += num(*ap);
  }
  if (total != -2) return std::nullopt;
  for (const auto& rho : excluded_rays(s))
    if (box_min(psi, to_rat(rho)) != -1) return std::nullopt;
  return a;
}

Rational volume(const DivisorialPolytope& psi) {
  Rational v = 0;
  for (const auto& c : psi.refined().cells()) {
    auto d = psi.degree_piece(c.relative_interior_point());
    v += integrate_affine(c, d.slope, d.c);
  }
  return v;
}

Integer fano_degree(const DivisorialPolytope& psi) {
  Rational f = 1;
  for (std::size_t i = 2; i <= psi.rank() + 1; ++i) f *= static_cast<long>(i);
  Rational deg = f * volume(psi);
  if (den(deg) != 1) throw Error(ErrorCode::InconsistentInput, "non-integral degree " + to_string(deg));
  return num(deg);
}

Integer section_dim(const DivisorialPolytope& psi, const IntVec& u) {
  RatVec x = to_rat(u);
  if (!psi.box().contains(x)) return 0;
  Integer s = 1;
  for (const auto& p : psi.support()) s += floor(psi.value(p, x));
  return s < 0 ? Integer(0) : s;
}

Integer total_sections(const DivisorialPolytope& psi) {
  Integer t = 0;
  for (const auto& u : lattice_points(psi.box())) t += section_dim(psi, u);
  return t;
}

std::vector<Polyhedron> degree_solid(const DivisorialPolytope& psi) {
  std::vector<Polyhedron> out;
  const std::size_t d = psi.rank();
  for (const auto& c : psi.refined().cells()) {
    auto f = psi.degree_piece(c.relative_interior_point());
    std::vector<RatVec> pts;
    bool nonzero = false;
    for (const auto& w : c.vertices()) {
      RatVec lo = w, hi = w;
      lo.push_back(0);
      Rational h = f(w);
      if (h != 0) nonzero = true;
      hi.push_back(h);
      pts.push_back(lo);
      pts.push_back(hi);
    }
    if (nonzero) out.push_back(Polyhedron::from_generators(d + 1, pts));
  }
  return out;
}

DivisorialPolytope transform(const DivisorialPolytope& psi, const IntMatrix& F, const PointMap& phi,
                             const std::map<MarkedPoint, IntVec>& v) {
  RatMatrix f = to_rat(F);
  RatMatrix finvT = inverse(f)->transpose();
  Polyhedron box = psi.box().linear_image(finvT);
  std::set<MarkedPoint> labels;
  for (const auto& [p, _] : psi.pieces()) labels.insert(p);
  for (const auto& [p, _] : v) labels.insert(p);
  std::map<MarkedPoint, std::vector<AffinePiece>> np;
  for (const auto& p : labels) {
    auto it = phi.find(p);
    MarkedPoint q = it == phi.end() ? p : it->second;
    RatVec shift(psi.rank(), Rational(0));
    if (auto vi = v.find(p); vi != v.end()) shift = to_rat(vi->second);
    auto pi = psi.pieces().find(p);
    std::vector<AffinePiece> src = pi == psi.pieces().end()
                                       ? std::vector<AffinePiece>{{RatVec(psi.rank(), Rational(0)), 0}}
                                       : pi->second;
    for (const auto& a : src) np[q].push_back({add(f * a.slope, shift), a.c});
  }
  return DivisorialPolytope(box, np);
}

}  // namespace tfano
