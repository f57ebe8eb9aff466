#include "tfano/virtual.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tfano {

VirtualPolytope::VirtualPolytope(std::size_t dim, std::vector<Term> terms) : dim_(dim) {
  for (auto& t : terms) add(t.coef, t.poly);
}

void VirtualPolytope::add(const Rational& coef, const Polyhedron& p) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "virtual polytope terms must be bounded");
  if (p.ambient_dim() != dim_) throw Error(ErrorCode::IncompatibleDimension, "virtual polytope term");
  if (coef != 0) terms_.push_back({coef, p});
}

VirtualPolytope& VirtualPolytope::operator+=(const VirtualPolytope& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::IncompatibleDimension, "virtual polytope sum");
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

VirtualPolytope VirtualPolytope::operator*(const Rational& k) const {
  VirtualPolytope r(dim_);
  for (const auto& t : terms_) r.add(t.coef * k, t.poly);
  return r;
}

VirtualPolytope VirtualPolytope::dilated(const Integer& k) const {
  VirtualPolytope r(dim_);
  for (const auto& t : terms_) r.add(t.coef, t.poly.scaled(Rational(k)));
  return r;
}

RatVec VirtualMeasures::bc() const {
  if (vol == 0) throw Error(ErrorCode::IncompatibleDimension, "barycenter of a class with zero volume");
  return scale(1 / vol, moment);
}

RatVec VirtualMeasures::bc1() const {
  if (vol1 == 0) throw Error(ErrorCode::IncompatibleDimension, "facet barycenter of a class with zero facet volume");
  return scale(1 / vol1, moment1);
}

VirtualMeasures measures(const VirtualPolytope& v) {
  const std::size_t m = v.ambient_dim();
  VirtualMeasures r{0, 0, RatVec(m, Rational(0)), RatVec(m, Rational(0))};
  for (const auto& t : v.terms()) {
    int dim = t.poly.dim();
    if (dim == static_cast<int>(m)) {
      auto mu = volume_and_barycenter(t.poly);
      r.vol += t.coef * mu.vol;
      r.moment = add(r.moment, scale(t.coef * mu.vol, mu.bc));
    } else if (dim + 1 == static_cast<int>(m)) {
      auto mu = facet_volume_and_barycenter(t.poly);
      r.vol1 += t.coef * mu.vol;
      r.moment1 = add(r.moment1, scale(t.coef * mu.vol, mu.bc));
    }
  }
  return r;
}

Integer lattice_count(const VirtualPolytope& v) {
  Rational n = 0;
  for (const auto& t : v.terms()) n += t.coef * Rational(count_lattice_points(t.poly));
  if (den(n) != 1) throw Error(ErrorCode::InconsistentInput, "fractional lattice count " + to_string(n));
  return num(n);
}

Integer lattice_count(const VirtualPolytope& v, const IntVec& u) {
  Rational n = 0;
  for (const auto& t : v.terms()) n += t.coef * Rational(count_fiber_points(t.poly, u));
  if (den(n) != 1) throw Error(ErrorCode::InconsistentInput, "fractional fiber count " + to_string(n));
  return num(n);
}

RatVec project(const RatVec& x) { return RatVec(x.begin(), x.end() - 1); }

namespace {

// [dΔ] via inclusion–exclusion over the facets; intersections of facets are
// faces, identified by their vertex sets. Coefficients of repeated faces are merged.
void relative_boundary(const Polyhedron& p, const Rational& coef, VirtualPolytope& out) {
  auto facets = p.facets();
  const auto& verts = p.vertices();
  std::vector<std::set<std::size_t>> fv;
  for (const auto& f : facets) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (f.contains(verts[i])) s.insert(i);
    fv.push_back(s);
  }
  std::map<std::set<std::size_t>, Rational> acc;
  // depth-first over increasing facet index lists with nonempty intersection
  struct Frame {
    std::size_t next;
    std::set<std::size_t> inter;
    int size;
  };
  std::vector<Frame> st;
  for (std::size_t i = 0; i < fv.size(); ++i) st.push_back({i + 1, fv[i], 1});
  while (!st.empty()) {
    Frame f = std::move(st.back());
    st.pop_back();
    acc[f.inter] += (f.size % 2 == 1) ? 1 : -1;
    for (std::size_t j = f.next; j < fv.size(); ++j) {
      std::set<std::size_t> x;
      std::set_intersection(f.inter.begin(), f.inter.end(), fv[j].begin(), fv[j].end(), std::inserter(x, x.end()));
      if (!x.empty()) st.push_back({j + 1, std::move(x), f.size + 1});
    }
  }
  for (const auto& [vs, c] : acc) {
    if (c == 0) continue;
    std::vector<RatVec> pts;
    for (auto i : vs) pts.push_back(verts[i]);
    out.add(coef * c, Polyhedron::from_generators(p.ambient_dim(), pts));
  }
}

}  // namespace

VirtualPolytope boundary(const VirtualPolytope& v) {
  const int m = static_cast<int>(v.ambient_dim());
  VirtualPolytope out(v.ambient_dim());
  for (const auto& t : v.terms()) {
    int dim = t.poly.dim();
    if (dim == m) {
      relative_boundary(t.poly, t.coef, out);
    } else if (dim == m - 1) {
      out.add(2 * t.coef, t.poly);
      relative_boundary(t.poly, -t.coef, out);
    }
  }
  return out;
}

VirtualPolytope pyramid(const VirtualPolytope& v) {
  const std::size_t m = v.ambient_dim();
  VirtualPolytope out(m);
  RatVec e(m, Rational(0));
  e[m - 1] = 1;
  RatVec origin(m, Rational(0));
  for (const auto& t : v.terms()) {
    if (t.poly.dim() != static_cast<int>(m) - 1)
      throw Error(ErrorCode::TermNotCodimOne, "pyramid needs codimension-one terms");
    for (int sign : {1, -1}) {
      auto ineqs = t.poly.inequalities();
      ineqs.push_back({scale(Rational(sign), e), 0});
      auto half = Polyhedron::from_constraints(m, ineqs, t.poly.equations());
      if (!half) continue;
      // a half lying entirely on the zero level belongs to both sides and cancels
      auto pts = half->vertices();
      bool flat = std::all_of(pts.begin(), pts.end(), [&](const RatVec& x) { return x[m - 1] == 0; });
      if (flat) continue;
      pts.push_back(origin);
      out.add(Rational(sign) * t.coef, Polyhedron::from_generators(m, pts));
    }
  }
  return out;
}

namespace {

Integer default_depth(const Polyhedron& box, const std::vector<AffinePiece>& pieces) {
  Rational lo = 0;
  for (const auto& u : box.vertices())
    for (const auto& a : pieces) lo = std::min(lo, a(u));
  return floor(lo);
}

std::vector<Halfspace> lift(const std::vector<Halfspace>& hs) {
  std::vector<Halfspace> out;
  for (auto h : hs) {
    h.normal.push_back(0);
    out.push_back(h);
  }
  return out;
}

Polyhedron slab(const Polyhedron& box, const Rational& lo, const Rational& hi) {
  std::vector<RatVec> pts;
  for (const auto& u : box.vertices())
    for (const auto& h : {lo, hi}) {
      RatVec x = u;
      x.push_back(h);
      pts.push_back(x);
    }
  return Polyhedron::from_generators(box.ambient_dim() + 1, pts);
}

}  // namespace

VirtualPolytope class_of_function(const Polyhedron& box, const std::vector<AffinePiece>& pieces,
                                  std::optional<Integer> R) {
  const std::size_t d = box.ambient_dim();
  Integer r = R ? *R : default_depth(box, pieces);
  if (r > 0) throw Error(ErrorCode::InconsistentInput, "slab depth must be ≤ 0");
  if (default_depth(box, pieces) < r) throw Error(ErrorCode::InconsistentInput, "slab depth above the function");
  auto ineqs = lift(box.inequalities());
  auto eqs = lift(box.equations());
  RatVec e(d + 1, Rational(0));
  e[d] = 1;
  ineqs.push_back({e, Rational(r)});
  for (const auto& a : pieces) {
    RatVec n = a.slope;  // x ≤ <u,s> + c
    n.push_back(-1);
    ineqs.push_back({n, -a.c});
  }
  VirtualPolytope v(d + 1);
  auto under = Polyhedron::from_constraints(d + 1, ineqs, eqs);
  if (under) v.add(1, *under);
  v.add(-1, slab(box, Rational(r), 0));
  return v;
}

VirtualPolytope class_of_divpolytope(const DivisorialPolytope& psi) {
  const std::size_t d = psi.rank();
  VirtualPolytope v(d + 1);
  v.add(1, slab(psi.box(), 0, 0));
  for (const auto& [p, list] : psi.pieces()) v += class_of_function(psi.box(), list);
  return v;
}

VirtualPolytope graph(const Polyhedron& box, const std::vector<AffinePiece>& pieces) {
  const std::size_t d = box.ambient_dim();
  DivisorialPolytope one(box, {{MarkedPoint::zero(), pieces}});
  VirtualPolytope v(d + 1);
  for (const auto& c : one.regions(MarkedPoint::zero()).cells()) {
    auto f = one.active_piece(MarkedPoint::zero(), c.relative_interior_point());
    std::vector<RatVec> pts;
    for (const auto& u : c.vertices()) {
      RatVec x = u;
      x.push_back(f(u));
      pts.push_back(x);
    }
    v.add(1, Polyhedron::from_generators(d + 1, pts));
  }
  return v;
}

VirtualPolytope walls(const DivisorialPolytope& psi) {
  const std::size_t d = psi.rank();
  VirtualPolytope v(d + 1);
  for (const auto& c : psi.refined().cells()) {
    auto f = psi.degree_piece(c.relative_interior_point());
    for (const auto& g : c.facets()) {
      bool on_boundary = false;
      for (const auto& h : psi.box().inequalities()) {
        bool all = std::all_of(g.vertices().begin(), g.vertices().end(),
                               [&](const RatVec& u) { return dot(h.normal, u) == h.rhs; });
        if (all) on_boundary = true;
      }
      if (!on_boundary) continue;
      std::vector<RatVec> pts;
      for (const auto& u : g.vertices()) {
        RatVec lo = u, hi = u;
        lo.push_back(0);
        hi.push_back(f(u));
        pts.push_back(lo);
        pts.push_back(hi);
      }
      Polyhedron w = Polyhedron::from_generators(d + 1, pts);
      if (w.dim() == static_cast<int>(d)) v.add(1, w);
    }
  }
  return v;
}

RatVec futaki_general(const DivisorialPolytope& psi) {
  VirtualPolytope cls = class_of_divpolytope(psi);
  auto whole = measures(cls);
  auto bd = measures(boundary(cls));
  if (whole.vol == 0) throw Error(ErrorCode::InconsistentInput, "vol Ψ = 0");
  // vol1·(bc1 − bc) = moment1 − (vol1/vol)·moment
  RatVec L = sub(bd.moment1, scale(bd.vol1 / whole.vol, whole.moment));
  return project(L);
}

RatVec degree_solid_moment(const DivisorialPolytope& psi) {
  RatVec m(psi.rank() + 1, Rational(0));
  for (const auto& p : degree_solid(psi)) {
    auto mu = volume_and_barycenter(p);
    m = add(m, scale(mu.vol, mu.bc));
  }
  return project(m);
}

RatVec futaki_fano(const DivisorialPolytope& psi, const FDivisor& s) {
  if (!anticanonical_check(psi, s)) throw Error(ErrorCode::NotAnticanonical, "Ψ is not anticanonical for S");
  return degree_solid_moment(psi);
}

RatVec futaki_toric(const Polyhedron& delta) {
  if (!delta.bounded()) throw Error(ErrorCode::Unbounded, "futaki_toric needs a polytope");
  if (!delta.full_dimensional()) throw Error(ErrorCode::IncompatibleDimension, "futaki_toric needs a full-dimensional polytope");
  auto mu = volume_and_barycenter(delta);
  auto mu1 = facet_volume_and_barycenter(delta);
  return scale(mu1.vol, sub(mu1.bc, mu.bc));
}

}  // namespace tfano
