#include "tfano/fdivisor.hpp"

#include <algorithm>
#include <numeric>

namespace tfano {

MarkedPoint MarkedPoint::parse(const std::string& label) {
  if (label == "0") return zero();
  if (label == "inf" || label == "∞") return infinity();
  if (label == "1") return one();
  if (label.empty()) throw Error(ErrorCode::Parse, "empty point label");
  MarkedPoint p{Kind::Named, label, {}};
  try {
    p.coordinate = parse_rational(label);
  } catch (const Error&) {
  }
  return p;
}

std::string MarkedPoint::label() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::One: return "1";
    case Kind::Named: return name;
  }
  return name;
}

std::optional<Rational> MarkedPoint::affine_coordinate() const {
  switch (kind) {
    case Kind::Zero: return Rational(0);
    case Kind::One: return Rational(1);
    case Kind::Infinity: return std::nullopt;
    case Kind::Named: return coordinate;
  }
  return std::nullopt;
}

FDivisor::FDivisor(std::size_t rank, std::map<MarkedPoint, Subdivision> slices, std::optional<Fan> tail_fan,
                   std::vector<Cone> degree_cones)
    : rank_(rank), slices_(std::move(slices)) {
  if (tail_fan) {
    tail_fan_ = *tail_fan;
  } else {
    if (slices_.empty()) throw Error(ErrorCode::Invalid, "no slices and no tail fan: nothing to derive the tail fan from");
    std::vector<Cone> full;
    for (auto& c : slices_.begin()->second.tail_cones())
      if (c.dim() == static_cast<int>(rank_)) full.push_back(c);
    tail_fan_ = Fan(rank_, full);
  }
  for (auto& c : degree_cones) marks_.insert(c);
}

std::vector<MarkedPoint> FDivisor::support() const {
  std::vector<MarkedPoint> s;
  for (const auto& [p, _] : slices_) s.push_back(p);
  return s;
}

Subdivision FDivisor::slice(const MarkedPoint& p) const {
  auto it = slices_.find(p);
  return it == slices_.end() ? trivial_slice() : it->second;
}

Polyhedron FDivisor::delta(const MarkedPoint& p, const Cone& sigma) const {
  auto it = slices_.find(p);
  if (it == slices_.end()) return sigma.as_polyhedron();
  const Polyhedron* c = it->second.cell_with_tail(sigma);
  if (!c) throw Error(ErrorCode::Invalid, "slice " + p.label() + " has no cell with the given tail cone");
  return *c;
}

Polyhedron FDivisor::delta_sum(const Cone& sigma) const {
  Polyhedron sum = sigma.as_polyhedron();
  for (const auto& [p, _] : slices_) sum = minkowski_sum(sum, delta(p, sigma));
  return sum;
}

std::optional<IntVec> FDivisor::trivial_shift(const MarkedPoint& p) const {
  auto it = slices_.find(p);
  if (it == slices_.end()) return IntVec(rank_, Integer(0));
  auto verts = it->second.vertices();
  if (verts.size() != 1 || !is_integral(verts[0])) return std::nullopt;
  if (!(it->second == trivial_slice().translated(verts[0]))) return std::nullopt;
  return to_int(verts[0]);
}

bool FDivisor::meets_degree(const Cone& c) const {
  Polyhedron cp = c.as_polyhedron();
  for (const auto& sigma : tail_fan_.maximal()) {
    if (!flagged(sigma)) continue;
    if (!sigma.as_polyhedron().contains(cp)) continue;
    if (intersection(delta_sum(sigma), cp)) return true;
  }
  return false;
}

ValidationReport validate(const FDivisor& s) {
  ValidationReport r;
  auto add = [&](const std::string& check, bool ok, const std::string& detail) {
    r.entries.push_back({check, ok, detail});
    if (!ok) r.valid = false;
  };
  try {
    const std::size_t d = s.rank();
    add("tail fan complete", s.tail_fan().complete(), "");
    for (const auto& c : s.tail_fan().maximal())
      if (c.dim() != static_cast<int>(d)) add("tail fan", false, "maximal cone is not full-dimensional");
    std::set<Cone> maxset(s.tail_fan().maximal().begin(), s.tail_fan().maximal().end());
    for (const auto& [p, sub] : s.slices()) {
      if (sub.ambient_dim() != d) {
        add("slice " + p.label(), false, "dimension differs from rank");
        continue;
      }
      auto probs = completeness_problems(sub);
      add("slice " + p.label() + " complete", probs.empty(), probs.empty() ? "" : probs[0].detail);
      std::set<Cone> tails;
      for (auto& c : sub.tail_cones())
        if (c.dim() == static_cast<int>(d)) tails.insert(c);
      add("slice " + p.label() + " tail fan", tails == maxset,
          tails == maxset ? "" : "tails of the full-dimensional cells differ from the tail fan");
      if (s.trivial_shift(p))
        r.entries.push_back({"slice " + p.label() + " non-trivial", true, "stored slice is a lattice translate of the tail fan"});
    }
    for (const auto& m : s.degree_marks())
      add("degree mark", maxset.count(m) > 0, maxset.count(m) ? "" : "marked cone is not a maximal tail cone");
    if (!r.valid) return r;
    for (const auto& sigma : s.tail_fan().maximal()) {
      Polyhedron sum = s.delta_sum(sigma);
      Polyhedron sp = sigma.as_polyhedron();
      std::string name = "degree piece over " + to_string(to_rat(sigma.rays()[0])) + "..";
      if (s.flagged(sigma)) {
        bool inside = sp.contains(sum);
        bool proper = !(sum == sp);
        add(name, inside && proper, !inside ? "sum of slice polyhedra leaves σ" : (!proper ? "sum equals σ" : ""));
      }
    }
  } catch (const Error& e) {
    add("structure", false, e.what());
  }
  return r;
}

void require_valid(const FDivisor& s) {
  auto r = validate(s);
  if (r.valid) return;
  for (const auto& e : r.entries)
    if (!e.ok) throw Error(ErrorCode::Invalid, e.check + (e.detail.empty() ? "" : ": " + e.detail));
}

Integer multiplicity(const RatVec& v) { return denominator_lcm(v); }

std::vector<VertexDatum> vertex_data(const FDivisor& s, const std::vector<MarkedPoint>& extra) {
  std::vector<MarkedPoint> pts = s.support();
  for (const auto& e : extra)
    if (!s.slices().count(e)) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  std::vector<VertexDatum> out;
  for (const auto& p : pts) {
    auto verts = s.slice(p).vertices();
    std::reverse(verts.begin(), verts.end());
    for (auto& v : verts) out.push_back({p, v, multiplicity(v)});
  }
  return out;
}

std::vector<IntVec> excluded_rays(const FDivisor& s) {
  std::vector<IntVec> out;
  for (const auto& r : s.tail_fan().rays())
    if (!s.meets_degree(Cone::from_generators(s.rank(), std::vector<IntVec>{r}))) out.push_back(r);
  return out;
}

Integer point_multiplicity(const FDivisor& s, const MarkedPoint& p) {
  Integer m = 1;
  for (const auto& v : s.slice(p).vertices()) m = std::max(m, multiplicity(v));
  return m;
}

namespace {

RatMatrix rat(const IntMatrix& m) { return to_rat(m); }

Cone map_cone(const Cone& c, const IntMatrix& F) {
  std::vector<RatVec> g;
  for (const auto& r : c.rays()) g.push_back(rat(F) * to_rat(r));
  return Cone::from_generators(F.rows(), g);
}

}  // namespace

FDivisor transform(const FDivisor& s, const IntMatrix& F, const PointMap& phi,
                   const std::map<MarkedPoint, IntVec>& v) {
  auto image = [&](const MarkedPoint& p) {
    auto it = phi.find(p);
    return it == phi.end() ? p : it->second;
  };
  RatMatrix f = rat(F);
  std::vector<Cone> fan;
  for (const auto& c : s.tail_fan().maximal()) fan.push_back(map_cone(c, F));
  Fan tf(s.rank(), fan);
  std::map<MarkedPoint, Subdivision> slices;
  std::set<MarkedPoint> labels;
  for (const auto& [p, _] : s.slices()) labels.insert(p);
  for (const auto& [p, _] : v) labels.insert(p);
  for (const auto& p : labels) {
    Subdivision sub = s.slice(p).linear_image(f);
    auto it = v.find(p);
    if (it != v.end()) sub = sub.translated(to_rat(it->second));
    MarkedPoint q = image(p);
    if (slices.count(q)) throw Error(ErrorCode::Invalid, "relabeling is not injective");
    slices.emplace(q, sub);
  }
  std::vector<Cone> marks;
  for (const auto& m : s.degree_marks()) marks.push_back(map_cone(m, F));
  return FDivisor(s.rank(), slices, tf, marks);
}

std::vector<IntMatrix> fan_automorphisms(const Fan& a, const Fan& b, const FDivisor* sa, const FDivisor* sb) {
  std::vector<IntMatrix> out;
  const std::size_t d = a.ambient_dim();
  auto ra = a.rays(), rb = b.rays();
  if (ra.size() != rb.size() || d != b.ambient_dim()) return out;
  // frame of linearly independent rays of a
  std::vector<std::size_t> frame;
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < ra.size() && frame.size() < d; ++i) {
    rows.push_back(to_rat(ra[i]));
    if (rank(rows, d) == rows.size())
      frame.push_back(i);
    else
      rows.pop_back();
  }
  if (frame.size() < d) return out;
  RatMatrix A(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) A(i, j) = ra[frame[j]][i];
  RatMatrix Ainv = *inverse(A);
  std::set<IntVec> rbset(rb.begin(), rb.end());
  std::set<Cone> bmax(b.maximal().begin(), b.maximal().end());
  std::vector<std::size_t> idx(rb.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::set<IntMatrix, bool (*)(const IntMatrix&, const IntMatrix&)> seen(
      [](const IntMatrix& x, const IntMatrix& y) {
        for (std::size_t i = 0; i < x.rows(); ++i)
          for (std::size_t j = 0; j < x.cols(); ++j)
            if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
        return false;
      });
  for (const auto& tuple : combinations(rb.size(), d)) {
    std::vector<std::size_t> perm = tuple;
    do {
      RatMatrix B(d, d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) B(i, j) = rb[perm[j]][i];
      RatMatrix Fq = B * Ainv;
      bool integral = true;
      IntMatrix F(d, d);
      for (std::size_t i = 0; i < d && integral; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (den(Fq(i, j)) != 1) {
            integral = false;
            break;
          }
          F(i, j) = num(Fq(i, j));
        }
      if (!integral) continue;
      Integer det = determinant(F);
      if (det != 1 && det != -1) continue;
      bool ok = true;
      for (const auto& r : ra)
        if (!rbset.count(to_int(Fq * to_rat(r)))) {
          ok = false;
          break;
        }
      for (const auto& c : a.maximal()) {
        if (!ok) break;
        Cone fc = map_cone(c, F);
        if (!bmax.count(fc)) ok = false;
        if (ok && sa && sb && sa->flagged(c) != sb->flagged(fc)) ok = false;
      }
      if (ok && seen.insert(F).second) out.push_back(F);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<MarkedPoint> essential_support(const FDivisor& s) {
  std::vector<MarkedPoint> e;
  for (const auto& [p, _] : s.slices())
    if (!s.trivial_shift(p)) e.push_back(p);
  return e;
}

namespace {

// projective coordinates (x : y) of a marked point
std::optional<std::pair<Rational, Rational>> proj(const MarkedPoint& p) {
  if (p.is_infinity()) return std::make_pair(Rational(1), Rational(0));
  auto c = p.affine_coordinate();
  if (!c) return std::nullopt;
  return std::make_pair(*c, Rational(1));
}

Rational bracket(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
  return a.first * b.second - a.second * b.first;
}

std::optional<Rational> cross_ratio(const MarkedPoint& a, const MarkedPoint& b, const MarkedPoint& c,
                                    const MarkedPoint& d) {
  auto pa = proj(a), pb = proj(b), pc = proj(c), pd = proj(d);
  if (!pa || !pb || !pc || !pd) return std::nullopt;
  Rational n = bracket(*pa, *pc) * bracket(*pb, *pd), m = bracket(*pa, *pd) * bracket(*pb, *pc);
  if (m == 0) return std::nullopt;
  return n / m;
}

}  // namespace

bool phi_realizable(const std::vector<MarkedPoint>& from, const std::vector<MarkedPoint>& to) {
  if (from.size() != to.size()) return false;
  if (from.size() <= 3) return true;
  if (from == to) return true;
  for (std::size_t i = 3; i < from.size(); ++i) {
    auto x = cross_ratio(from[0], from[1], from[2], from[i]);
    auto y = cross_ratio(to[0], to[1], to[2], to[i]);
    if (!x || !y || *x != *y) return false;
  }
  return true;
}

std::vector<Witness> all_equivalences(const FDivisor& a, const FDivisor& b) {
  std::vector<Witness> out;
  if (a.rank() != b.rank()) return out;
  const std::size_t d = a.rank();
  auto Ea = essential_support(a), Eb = essential_support(b);
  if (Ea.size() != Eb.size()) return out;
  IntVec Wa(d, Integer(0)), Wb(d, Integer(0));
  for (const auto& [p, _] : a.slices())
    if (auto w = a.trivial_shift(p))
      for (std::size_t i = 0; i < d; ++i) Wa[i] += (*w)[i];
  for (const auto& [p, _] : b.slices())
    if (auto w = b.trivial_shift(p))
      for (std::size_t i = 0; i < d; ++i) Wb[i] += (*w)[i];
  const bool few = Ea.size() <= 2;
  auto allowed = [&](const std::vector<MarkedPoint>& img) {
    if (!few) return phi_realizable(Ea, img);
    for (std::size_t i = 0; i < Ea.size(); ++i) {
      const auto &p = Ea[i], &q = img[i];
      bool swap = (p == MarkedPoint::zero() && q == MarkedPoint::infinity()) ||
                  (p == MarkedPoint::infinity() && q == MarkedPoint::zero());
      if (!(p == q) && !swap) return false;
    }
    return true;
  };
  for (const auto& F : fan_automorphisms(a.tail_fan(), b.tail_fan(), &a, &b)) {
    RatMatrix f = to_rat(F);
    std::vector<Subdivision> images;
    for (const auto& p : Ea) images.push_back(a.slice(p).linear_image(f));
    std::vector<MarkedPoint> img = Eb;
    std::sort(img.begin(), img.end());
    do {
      if (!allowed(img)) continue;
      Witness w{F, {}, {}, {}, few};
      IntVec total(d, Integer(0));
      bool ok = true;
      for (std::size_t i = 0; i < Ea.size() && ok; ++i) {
        Subdivision target = b.slice(img[i]);
        RatVec shift = sub(target.vertices()[0], images[i].vertices()[0]);
        if (!is_integral(shift) || !(images[i].translated(shift) == target)) {
          ok = false;
          break;
        }
        IntVec v = to_int(shift);
        w.phi[Ea[i]] = img[i];
        w.translations[Ea[i]] = v;
        for (std::size_t k = 0; k < d; ++k) total[k] += v[k];
      }
      if (!ok) continue;
      IntVec fw = to_int(f * to_rat(Wa));
      w.residual.resize(d);
      for (std::size_t k = 0; k < d; ++k) {
        w.residual[k] = Wb[k] - fw[k];
        if (total[k] + w.residual[k] != 0) ok = false;
      }
      if (ok) out.push_back(w);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  return out;
}

std::optional<Witness> equivalent(const FDivisor& a, const FDivisor& b) {
  auto all = all_equivalences(a, b);
  if (all.empty()) return std::nullopt;
  // prefer the identity relabeling and identity matrix when available
  for (const auto& w : all)
    if (w.F == IntMatrix::identity(a.rank())) return w;
  return all.front();
}

}  // namespace tfano
