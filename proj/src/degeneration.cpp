#include "tfano/degeneration.hpp"

#include "tfano/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tfano {

std::vector<Subdivision> MinkowskiDecomposition::summands() const {
  std::vector<Subdivision> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Polyhedron> cells;
    for (const auto& row : pieces)
      if (row[i].full_dimensional()) cells.push_back(row[i]);
    out.emplace_back(base.ambient_dim(), cells);
  }
  return out;
}

namespace {

Polyhedron sum_of(const std::vector<Polyhedron>& ps) {
  Polyhedron s = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) s = minkowski_sum(s, ps[i]);
  return s;
}

std::optional<Polyhedron> meet(const std::vector<const Polyhedron*>& ps) {
  std::optional<Polyhedron> r = *ps.front();
  for (std::size_t i = 1; i < ps.size() && r; ++i) r = intersection(*r, *ps[i]);
  return r;
}

// a linear functional minimized on p exactly at its vertex v
RatVec vertex_functional(const Polyhedron& p, const RatVec& v) {
  RatVec w(p.ambient_dim(), Rational(0));
  for (const auto& h : p.inequalities())
    if (dot(h.normal, v) == h.rhs) w = add(w, h.normal);
  for (const auto& e : p.equations()) w = add(w, e.normal);  // harmless: constant on p
  return w;
}

}  // namespace

AdmissibilityReport check_admissible(const MinkowskiDecomposition& dec) {
  AdmissibilityReport rep;
  auto bad = [&](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  const auto& cells = dec.base.cells();
  const std::size_t r = dec.points.size();
  if (dec.pieces.size() != cells.size()) {
    bad("one summand list per cell of Ξ is required");
    return rep;
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (dec.pieces[c].size() != r) {
      bad("cell " + std::to_string(c) + ": wrong number of summands");
      return rep;
    }
    if (!(sum_of(dec.pieces[c]) == cells[c])) bad("cell " + std::to_string(c) + " is not the sum of its summands");
  }
  // (i) intersections decompose summand-wise
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      auto ab = intersection(cells[a], cells[b]);
      if (!ab) continue;
      std::vector<Polyhedron> parts;
      for (std::size_t i = 0; i < r; ++i) {
        auto x = intersection(dec.pieces[a][i], dec.pieces[b][i]);
        if (!x) break;
        parts.push_back(*x);
      }
      if (parts.size() != r || !(sum_of(parts) == *ab))
        bad("cells " + std::to_string(a) + " and " + std::to_string(b) + " meet in a face that does not split summand-wise");
    }
  // (ii) face condition, for families of up to three cells and all summand subsets
  std::vector<std::vector<std::size_t>> families;
  for (std::size_t k = 2; k <= std::min<std::size_t>(3, cells.size()); ++k)
    for (auto& f : combinations(cells.size(), k)) families.push_back(f);
  for (const auto& fam : families) {
    std::vector<const Polyhedron*> cs;
    for (auto c : fam) cs.push_back(&cells[c]);
    if (!meet(cs)) continue;
    for (std::size_t drop = 0; drop < fam.size(); ++drop) {
      for (std::size_t mask = 1; mask < (std::size_t(1) << r); ++mask) {
        std::vector<Polyhedron> big, small;
        bool empty = false;
        for (std::size_t i = 0; i < r && !empty; ++i) {
          if (!(mask >> i & 1)) continue;
          std::vector<const Polyhedron*> all, sub;
          for (std::size_t k = 0; k < fam.size(); ++k) {
            all.push_back(&dec.pieces[fam[k]][i]);
            if (k != drop) sub.push_back(&dec.pieces[fam[k]][i]);
          }
          auto x = meet(all), y = meet(sub);
          if (!x || !y) {
            empty = true;
            break;
          }
          small.push_back(*x);
          big.push_back(*y);
        }
        if (empty) {
          bad("summands of meeting cells do not meet");
          continue;
        }
        if (!sum_of(small).is_face_of(sum_of(big))) bad("face condition fails for a family of cells");
      }
    }
  }
  // vertex condition
  for (const auto& v : dec.base.vertices()) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!cells[c].contains(v)) continue;
      RatVec w = vertex_functional(cells[c], v);
      int fractional = 0;
      for (std::size_t i = 0; i < r; ++i) {
        auto f = dec.pieces[c][i].face(w);
        if (!f || f->vertices().size() != 1) {
          bad("vertex " + to_string(v) + " has no unique summand vertex");
          continue;
        }
        if (!is_integral(f->vertices()[0])) ++fractional;
      }
      if (fractional > 1) bad("vertex " + to_string(v) + " splits into " + std::to_string(fractional) + " non-lattice summand vertices");
      break;
    }
  }
  return rep;
}

namespace {

std::vector<AffinePiece> summed_pieces(const DivisorialPolytope& psi, const std::vector<MarkedPoint>& points) {
  std::vector<AffinePiece> acc{{RatVec(psi.rank(), Rational(0)), 0}};
  for (const auto& p : points) {
    auto it = psi.pieces().find(p);
    if (it == psi.pieces().end()) continue;
    std::vector<AffinePiece> next;
    for (const auto& a : acc)
      for (const auto& b : it->second) next.push_back({add(a.slope, b.slope), a.c + b.c});
    acc = next;
  }
  // keep only pieces that are active on an open part of the box
  DivisorialPolytope tmp(psi.box(), {{MarkedPoint::zero(), acc}});
  std::vector<AffinePiece> kept;
  for (const auto& c : tmp.regions(MarkedPoint::zero()).cells())
    kept.push_back(tmp.active_piece(MarkedPoint::zero(), c.relative_interior_point()));
  return kept;
}

// C_P(w) = {v | <w,v> − Ψ_P(w) attains Ψ*_P(v)}
Polyhedron dual_cell(const SupportSlice& h, const AffinePiece& at) {
  std::vector<Halfspace> in;
  for (const auto& f : h.functions) in.push_back({sub(f.slope, at.slope), at.c - f.c});
  auto r = Polyhedron::from_constraints(at.slope.size(), in);
  if (!r) throw Error(ErrorCode::InconsistentInput, "empty dual cell");
  return *r;
}

}  // namespace

MinkowskiDecomposition decompose(const DivisorialPolytope& psi, const std::vector<MarkedPoint>& points) {
  MinkowskiDecomposition dec;
  dec.points = points;
  const MarkedPoint tag = MarkedPoint::parse("__sum");
  DivisorialPolytope sum(psi.box(), {{tag, summed_pieces(psi, points)}});
  auto total = support_function(sum, tag);
  dec.base = total.cells;
  std::vector<SupportSlice> hs;
  for (const auto& p : points) hs.push_back(support_function(psi, p));
  for (std::size_t c = 0; c < total.cells.cells().size(); ++c) {
    const RatVec& w = total.cell_function[c].slope;
    std::vector<Polyhedron> row;
    for (std::size_t i = 0; i < points.size(); ++i) row.push_back(dual_cell(hs[i], {w, -psi.value(points[i], w)}));
    dec.pieces.push_back(row);
  }
  return dec;
}

Degeneration add_slices(const FDivisor& s, const DivisorialPolytope& psi, const std::vector<MarkedPoint>& points,
                        const MarkedPoint& target) {
  if (points.empty()) throw Error(ErrorCode::InconsistentInput, "no slices selected");
  auto amp = check_ample_correspondence(psi, s);
  if (!amp.ok) throw Error(ErrorCode::InconsistentInput, "Ψ does not match S: " + amp.problems.front());
  std::set<MarkedPoint> chosen(points.begin(), points.end());
  if (s.slices().count(target) && !chosen.count(target))
    throw Error(ErrorCode::InconsistentInput, "target " + target.label() + " already carries a slice");
  Degeneration out;
  out.decomposition = decompose(psi, points);
  // the support functions must reproduce the stored slices
  auto parts = out.decomposition.summands();
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!(parts[i] == s.slice(points[i])))
      throw Error(ErrorCode::InconsistentInput, "summand for " + points[i].label() + " differs from S_" + points[i].label());
  auto adm = check_admissible(out.decomposition);
  if (!adm.ok) throw Error(ErrorCode::NotAdmissible, adm.violations.front());

  std::map<MarkedPoint, Subdivision> slices;
  for (const auto& [p, sub] : s.slices())
    if (!chosen.count(p)) slices.emplace(p, sub);
  slices[target] = out.decomposition.base;
  std::vector<Cone> marks(s.degree_marks().begin(), s.degree_marks().end());
  out.s = FDivisor(s.rank(), slices, s.tail_fan(), marks);
  require_valid(out.s);

  std::map<MarkedPoint, std::vector<AffinePiece>> pieces;
  for (const auto& [p, list] : psi.pieces())
    if (!chosen.count(p)) pieces[p] = list;
  pieces[target] = summed_pieces(psi, points);
  out.psi = DivisorialPolytope(psi.box(), pieces);
  return out;
}

FDivisor relabel_two_slices(const FDivisor& s, const MarkedPoint& keep, PointMap* used) {
  auto sup = s.support();
  if (sup.size() > 2) throw Error(ErrorCode::TooManySlices, std::to_string(sup.size()) + " stored slices");
  std::stable_partition(sup.begin(), sup.end(), [&](const MarkedPoint& p) { return p == keep; });
  PointMap phi;
  if (sup.size() >= 1) phi[sup[0]] = MarkedPoint::zero();
  if (sup.size() == 2) phi[sup[1]] = MarkedPoint::infinity();
  if (used) *used = phi;
  return transform(s, IntMatrix::identity(s.rank()), phi, {});
}

TwoSliceFan two_slice_fan(const FDivisor& s) {
  for (const auto& p : s.support())
    if (!(p == MarkedPoint::zero()) && !(p == MarkedPoint::infinity()))
      throw Error(ErrorCode::TooManySlices, "slice at " + p.label() + "; only 0 and ∞ may be non-trivial");
  require_valid(s);
  const std::size_t d = s.rank();
  TwoSliceFan out;
  auto cone_over = [&](const Polyhedron& cell, int h) {
    std::vector<RatVec> g;
    for (const auto& v : cell.vertices()) {
      RatVec x = v;
      x.push_back(h);
      g.push_back(x);
    }
    for (const auto& r : cell.rays()) {
      RatVec x = to_rat(r);
      x.push_back(0);
      g.push_back(x);
    }
    return g;
  };
  std::vector<Cone> cones;
  for (const auto& sigma : s.tail_fan().maximal()) {
    auto up = cone_over(s.delta(MarkedPoint::zero(), sigma), 1);
    auto down = cone_over(s.delta(MarkedPoint::infinity(), sigma), -1);
    out.upper.push_back(Cone::from_generators(d + 1, up));
    out.lower.push_back(Cone::from_generators(d + 1, down));
    if (s.flagged(sigma)) {
      up.insert(up.end(), down.begin(), down.end());
      cones.push_back(Cone::from_generators(d + 1, up));
    } else {
      cones.push_back(out.upper.back());
      cones.push_back(out.lower.back());
    }
  }
  // bounded cells have no tail cone of full dimension
  for (const auto& cell : s.slice(MarkedPoint::zero()).cells())
    if (cell.tail().dim() < static_cast<int>(d)) {
      out.upper.push_back(Cone::from_generators(d + 1, cone_over(cell, 1)));
      cones.push_back(out.upper.back());
    }
  for (const auto& cell : s.slice(MarkedPoint::infinity()).cells())
    if (cell.tail().dim() < static_cast<int>(d)) {
      out.lower.push_back(Cone::from_generators(d + 1, cone_over(cell, -1)));
      cones.push_back(out.lower.back());
    }
  std::sort(out.upper.begin(), out.upper.end());
  std::sort(out.lower.begin(), out.lower.end());
  out.fan = Fan(d + 1, cones);
  return out;
}

bool is_reflexive(const Polyhedron& p) {
  if (!p.bounded() || !p.full_dimensional()) return false;
  for (const auto& v : p.vertices())
    if (!is_integral(v)) return false;
  RatVec origin(p.ambient_dim(), Rational(0));
  if (!p.in_relative_interior(origin)) return false;
  for (const auto& h : p.inequalities()) {
    // h.normal·x ≥ h.rhs with h.rhs < 0; scale the normal to a primitive lattice vector
    IntVec n = primitive(h.normal);
    std::size_t i = 0;
    while (h.normal[i] == 0) ++i;
    Rational k = Rational(n[i]) / h.normal[i];
    if (h.rhs * k != -1) return false;
  }
  return true;
}

std::optional<Polyhedron> fan_to_reflexive_polytope(const Fan& f) {
  std::vector<RatVec> pts;
  for (const auto& r : f.rays()) pts.push_back(to_rat(r));
  if (pts.empty()) return std::nullopt;
  Polyhedron p = Polyhedron::from_generators(f.ambient_dim(), pts);
  if (!is_reflexive(p)) return std::nullopt;
  if (p.vertices().size() != pts.size()) return std::nullopt;  // some ray generator is not a vertex
  std::set<Cone> faces;
  for (const auto& fc : p.facets()) faces.insert(Cone::from_generators(f.ambient_dim(), fc.vertices()));
  std::set<Cone> maximal(f.maximal().begin(), f.maximal().end());
  if (faces != maximal) return std::nullopt;
  return p;
}

std::optional<IntMatrix> lattice_equivalent(const Polyhedron& a, const Polyhedron& b) {
  const std::size_t d = a.ambient_dim();
  if (b.ambient_dim() != d || a.vertices().size() != b.vertices().size()) return std::nullopt;
  const auto &va = a.vertices(), &vb = b.vertices();
  std::vector<std::size_t> frame;
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < va.size() && frame.size() < d; ++i) {
    rows.push_back(va[i]);
    if (rank(rows, d) == rows.size())
      frame.push_back(i);
    else
      rows.pop_back();
  }
  if (frame.size() < d) return std::nullopt;
  RatMatrix A(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) A(i, j) = va[frame[j]][i];
  RatMatrix Ainv = *inverse(A);
  std::set<RatVec> target(vb.begin(), vb.end());
  for (const auto& tuple : combinations(vb.size(), d)) {
    std::vector<std::size_t> perm = tuple;
    do {
      RatMatrix B(d, d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) B(i, j) = vb[perm[j]][i];
      RatMatrix F = B * Ainv;
      bool ok = true;
      IntMatrix Fi(d, d);
      for (std::size_t i = 0; i < d && ok; ++i)
        for (std::size_t j = 0; j < d && ok; ++j) {
          if (den(F(i, j)) != 1) ok = false;
          else Fi(i, j) = num(F(i, j));
        }
      if (!ok) continue;
      Integer det = determinant(Fi);
      if (det != 1 && det != -1) continue;
      for (const auto& v : va)
        if (!target.count(F * v)) {
          ok = false;
          break;
        }
      if (ok) return Fi;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace tfano
