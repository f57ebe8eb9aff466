#include "tfano/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tfano {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

namespace {

RatVec homog(const RatVec& x, const Rational& t) {
  RatVec h = x;
  h.push_back(t);
  return h;
}

// scale so that the first `n` entries form a primitive integer vector (positive factor)
RatVec normalize_prefix(const RatVec& v, std::size_t n) {
  RatVec head(v.begin(), v.begin() + n);
  if (is_zero(head)) {
    RatVec all = v;
    IntVec p = primitive(all);
    return to_rat(p);
  }
  Integer l = denominator_lcm(head);
  Integer g = 0;
  for (const auto& x : head) g = gcd(g, num(x * l));
  Rational f = Rational(l) / Rational(g);
  return scale(f, v);
}

}  // namespace

std::vector<RatVec> Polyhedron::rays_rat() const {
  std::vector<RatVec> r;
  for (const auto& x : rays_) r.push_back(to_rat(x));
  return r;
}

Polyhedron Polyhedron::from_generators(std::size_t dim, std::vector<RatVec> points, std::vector<RatVec> rays) {
  if (points.empty()) throw Error(ErrorCode::Invalid, "polyhedron needs at least one point");
  std::set<RatVec> pset;
  for (auto& p : points) {
    if (p.size() != dim) throw Error(ErrorCode::IncompatibleDimension, "point dimension");
    pset.insert(p);
  }
  std::set<IntVec> rset;
  for (auto& r : rays) {
    if (r.size() != dim) throw Error(ErrorCode::IncompatibleDimension, "ray dimension");
    if (!is_zero(r)) rset.insert(primitive(r));
  }
  std::vector<RatVec> gens;
  std::vector<bool> is_point;
  for (const auto& p : pset) {
    gens.push_back(homog(p, 1));
    is_point.push_back(true);
  }
  for (const auto& r : rset) {
    gens.push_back(homog(to_rat(r), 0));
    is_point.push_back(false);
  }
  const std::size_t n = gens.size(), D1 = dim + 1;
  RatMatrix g = RatMatrix::from_rows(gens, D1);
  std::vector<RatVec> perp = nullspace(g);
  const std::size_t D = D1 - perp.size();

  Polyhedron P;
  P.ambient_ = dim;
  P.dim_ = static_cast<int>(D) - 1;
  for (const auto& k : perp) {
    RatVec kk = normalize_prefix(k, dim);
    P.eqs_.push_back({RatVec(kk.begin(), kk.begin() + dim), -kk[dim]});
  }
  if (D == 1) {
    P.vertices_.assign(pset.begin(), pset.end());
    return P;
  }

  struct Facet {
    RatVec normal;
    std::vector<bool> tight;
  };
  std::vector<Facet> facets;
  std::set<std::vector<bool>> seen;
  for (const auto& sub : combinations(n, D - 1)) {
    std::vector<RatVec> rows;
    for (auto i : sub) rows.push_back(gens[i]);
    for (const auto& k : perp) rows.push_back(k);
    auto ns = nullspace(RatMatrix::from_rows(rows, D1));
    if (ns.size() != 1) continue;
    RatVec nv = ns[0];
    bool pos = false, neg = false;
    std::vector<Rational> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
      vals[i] = dot(nv, gens[i]);
      if (vals[i] > 0) pos = true;
      if (vals[i] < 0) neg = true;
    }
    if (pos && neg) continue;
    if (neg) nv = scale(-1, nv);
    std::vector<bool> tight(n);
    for (std::size_t i = 0; i < n; ++i) tight[i] = vals[i] == 0;
    if (!seen.insert(tight).second) continue;
    facets.push_back({nv, tight});
  }
  {
    std::vector<RatVec> normals;
    for (const auto& f : facets) normals.push_back(f.normal);
    if (rank(normals, D1) < D) throw Error(ErrorCode::NonPointed, "polyhedron contains a line");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RatVec> normals;
    for (const auto& f : facets)
      if (f.tight[i]) normals.push_back(f.normal);
    if (rank(normals, D1) + 1 < D) continue;  // not extreme
    if (is_point[i])
      P.vertices_.push_back(RatVec(gens[i].begin(), gens[i].end() - 1));
    else
      P.rays_.push_back(to_int(RatVec(gens[i].begin(), gens[i].end() - 1)));
  }
  for (const auto& f : facets) {
    bool at_infinity = true;
    for (std::size_t i = 0; i < n; ++i)
      if (f.tight[i] && is_point[i]) at_infinity = false;
    if (at_infinity) continue;
    RatVec nv = normalize_prefix(f.normal, dim);
    P.ineqs_.push_back({RatVec(nv.begin(), nv.begin() + dim), -nv[dim]});
  }
  std::sort(P.vertices_.begin(), P.vertices_.end());
  std::sort(P.rays_.begin(), P.rays_.end());
  std::sort(P.ineqs_.begin(), P.ineqs_.end(), [](const Halfspace& a, const Halfspace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.rhs < b.rhs;
  });
  return P;
}

std::optional<Polyhedron> Polyhedron::from_constraints(std::size_t dim, const std::vector<Halfspace>& ineqs,
                                                       const std::vector<Halfspace>& eqs) {
  std::vector<RatVec> hin, heq, lin;
  for (const auto& h : ineqs) {
    if (h.normal.size() != dim) throw Error(ErrorCode::IncompatibleDimension, "inequality dimension");
    hin.push_back(homog(h.normal, -h.rhs));
    lin.push_back(h.normal);
  }
  for (const auto& h : eqs) {
    if (h.normal.size() != dim) throw Error(ErrorCode::IncompatibleDimension, "equation dimension");
    heq.push_back(homog(h.normal, -h.rhs));
    lin.push_back(h.normal);
  }
  if (dim > 0 && rank(lin, dim) < dim) throw Error(ErrorCode::NonPointed, "constraints leave a lineality space");
  RatVec trow(dim + 1, Rational(0));
  trow[dim] = 1;
  hin.push_back(trow);
  const std::size_t D1 = dim + 1;
  const std::size_t m = D1 - rank(heq, D1);
  if (m == 0) return std::nullopt;
  std::set<RatVec> pts;
  std::set<IntVec> rys;
  for (const auto& sub : combinations(hin.size(), m - 1)) {
    std::vector<RatVec> rows = heq;
    for (auto i : sub) rows.push_back(hin[i]);
    auto ns = nullspace(RatMatrix::from_rows(rows, D1));
    if (ns.size() != 1) continue;
    RatVec y = ns[0];
    bool pos = false, neg = false;
    for (const auto& h : hin) {
      Rational v = dot(h, y);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) continue;
    if (neg) y = scale(-1, y);
    RatVec x(y.begin(), y.end() - 1);
    if (y[dim] > 0)
      pts.insert(scale(1 / y[dim], x));
    else if (!is_zero(x))
      rys.insert(primitive(x));
  }
  if (pts.empty()) return std::nullopt;
  std::vector<RatVec> rr;
  for (const auto& r : rys) rr.push_back(to_rat(r));
  return from_generators(dim, std::vector<RatVec>(pts.begin(), pts.end()), rr);
}

bool Polyhedron::contains(const RatVec& x) const {
  for (const auto& h : eqs_)
    if (dot(h.normal, x) != h.rhs) return false;
  for (const auto& h : ineqs_)
    if (dot(h.normal, x) < h.rhs) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& o) const {
  for (const auto& v : o.vertices_)
    if (!contains(v)) return false;
  for (const auto& r : o.rays_) {
    RatVec rr = to_rat(r);
    for (const auto& h : eqs_)
      if (dot(h.normal, rr) != 0) return false;
    for (const auto& h : ineqs_)
      if (dot(h.normal, rr) < 0) return false;
  }
  return true;
}

bool Polyhedron::in_relative_interior(const RatVec& x) const {
  for (const auto& h : eqs_)
    if (dot(h.normal, x) != h.rhs) return false;
  for (const auto& h : ineqs_)
    if (dot(h.normal, x) <= h.rhs) return false;
  return true;
}

RatVec Polyhedron::relative_interior_point() const {
  RatVec c(ambient_, Rational(0));
  for (const auto& v : vertices_) c = add(c, v);
  c = scale(Rational(1, static_cast<long>(vertices_.size())), c);
  for (const auto& r : rays_) c = add(c, to_rat(r));
  return c;
}

Polyhedron Polyhedron::tail() const {
  return from_generators(ambient_, {RatVec(ambient_, Rational(0))}, rays_rat());
}

Polyhedron Polyhedron::translated(const RatVec& v) const {
  std::vector<RatVec> pts;
  for (const auto& p : vertices_) pts.push_back(add(p, v));
  return from_generators(ambient_, pts, rays_rat());
}

Polyhedron Polyhedron::linear_image(const RatMatrix& f) const {
  if (f.cols() != ambient_) throw Error(ErrorCode::IncompatibleDimension, "linear image");
  std::vector<RatVec> pts, rs;
  for (const auto& p : vertices_) pts.push_back(f * p);
  for (const auto& r : rays_) rs.push_back(f * to_rat(r));
  return from_generators(f.rows(), pts, rs);
}

Polyhedron Polyhedron::scaled(const Rational& k) const {
  std::vector<RatVec> pts;
  for (const auto& p : vertices_) pts.push_back(scale(k, p));
  return from_generators(ambient_, pts, rays_rat());
}

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  for (const auto& h : ineqs_) {
    std::vector<RatVec> pts, rs;
    for (const auto& v : vertices_)
      if (dot(h.normal, v) == h.rhs) pts.push_back(v);
    for (const auto& r : rays_)
      if (dot(h.normal, to_rat(r)) == 0) rs.push_back(to_rat(r));
    out.push_back(from_generators(ambient_, pts, rs));
  }
  return out;
}

std::optional<Rational> Polyhedron::minimum(const RatVec& w) const {
  for (const auto& r : rays_)
    if (dot(w, to_rat(r)) < 0) return std::nullopt;
  Rational best = dot(w, vertices_[0]);
  for (const auto& v : vertices_) best = std::min(best, Rational(dot(w, v)));
  return best;
}

std::optional<Polyhedron> Polyhedron::face(const RatVec& w) const {
  auto m = minimum(w);
  if (!m) return std::nullopt;
  std::vector<RatVec> pts, rs;
  for (const auto& v : vertices_)
    if (dot(w, v) == *m) pts.push_back(v);
  for (const auto& r : rays_)
    if (dot(w, to_rat(r)) == 0) rs.push_back(to_rat(r));
  return from_generators(ambient_, pts, rs);
}

bool Polyhedron::is_face_of(const Polyhedron& big) const {
  if (!big.contains(*this)) return false;
  std::vector<RatVec> pts, rs;
  std::vector<const Halfspace*> tight;
  for (const auto& h : big.ineqs_) {
    bool all = true;
    for (const auto& v : vertices_)
      if (dot(h.normal, v) != h.rhs) all = false;
    for (const auto& r : rays_)
      if (dot(h.normal, to_rat(r)) != 0) all = false;
    if (all) tight.push_back(&h);
  }
  for (const auto& v : big.vertices_) {
    bool ok = true;
    for (auto* h : tight)
      if (dot(h->normal, v) != h->rhs) ok = false;
    if (ok) pts.push_back(v);
  }
  for (const auto& r : big.rays_) {
    bool ok = true;
    for (auto* h : tight)
      if (dot(h->normal, to_rat(r)) != 0) ok = false;
    if (ok) rs.push_back(to_rat(r));
  }
  return from_generators(ambient_, pts, rs) == *this;
}

std::strong_ordering Polyhedron::operator<=>(const Polyhedron& o) const {
  if (vertices_ != o.vertices_)
    return vertices_ < o.vertices_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (rays_ != o.rays_) return rays_ < o.rays_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::IncompatibleDimension, "Minkowski sum");
  std::vector<RatVec> pts;
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) pts.push_back(add(u, v));
  auto rs = a.rays_rat();
  for (const auto& r : b.rays_rat()) rs.push_back(r);
  return Polyhedron::from_generators(a.ambient_dim(), pts, rs);
}

std::optional<Polyhedron> intersection(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::IncompatibleDimension, "intersection");
  auto in = a.inequalities();
  in.insert(in.end(), b.inequalities().begin(), b.inequalities().end());
  auto eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Polyhedron::from_constraints(a.ambient_dim(), in, eq);
}

Polyhedron convex_hull(const std::vector<Polyhedron>& ps) {
  if (ps.empty()) throw Error(ErrorCode::Invalid, "hull of nothing");
  std::vector<RatVec> pts, rs;
  for (const auto& p : ps) {
    pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
    for (const auto& r : p.rays_rat()) rs.push_back(r);
  }
  return Polyhedron::from_generators(ps[0].ambient_dim(), pts, rs);
}

// ---- cones

Cone Cone::from_generators(std::size_t dim, const std::vector<RatVec>& gens) {
  Polyhedron p = Polyhedron::from_generators(dim, {RatVec(dim, Rational(0))}, gens);
  Cone c;
  c.ambient_ = dim;
  c.rays_ = p.rays();
  c.dim_ = p.dim();
  return c;
}

Cone Cone::from_generators(std::size_t dim, const std::vector<IntVec>& gens) {
  std::vector<RatVec> g;
  for (const auto& x : gens) g.push_back(to_rat(x));
  return from_generators(dim, g);
}

bool Cone::contains(const RatVec& x) const { return as_polyhedron().contains(x); }

Polyhedron Cone::as_polyhedron() const {
  std::vector<RatVec> g;
  for (const auto& r : rays_) g.push_back(to_rat(r));
  return Polyhedron::from_generators(ambient_, {RatVec(ambient_, Rational(0))}, g);
}

std::vector<Cone> Cone::faces() const {
  // faces are spanned by ray subsets that are faces of the cone
  std::set<std::vector<IntVec>> seen;
  std::vector<Cone> out;
  Polyhedron p = as_polyhedron();
  std::size_t n = rays_.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<RatVec> g;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) g.push_back(to_rat(rays_[i]));
    Cone f = from_generators(ambient_, g);
    if (seen.count(f.rays_)) continue;
    if (!f.as_polyhedron().is_face_of(p)) continue;
    seen.insert(f.rays_);
    out.push_back(f);
  }
  return out;
}

bool cone_is_regular(const Cone& c) {
  const auto& r = c.rays();
  if (r.empty()) return true;
  if (static_cast<int>(r.size()) != c.dim()) return false;
  IntMatrix m(r.size(), c.ambient_dim());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.ambient_dim(); ++j) m(i, j) = r[i][j];
  SmithForm s = smith_normal_form(m);
  if (s.rank != r.size()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

// ---- measures

namespace {

void triangulate_points(const std::vector<RatVec>& pts, std::size_t dim, std::vector<std::vector<RatVec>>& out) {
  Polyhedron p = Polyhedron::from_generators(dim, pts);
  if (p.dim() == 0) {
    out.push_back({p.vertices()[0]});
    return;
  }
  const RatVec& v0 = p.vertices()[0];  // lexicographically smallest
  for (const auto& h : p.inequalities()) {
    if (dot(h.normal, v0) == h.rhs) continue;
    std::vector<RatVec> f;
    for (const auto& v : p.vertices())
      if (dot(h.normal, v) == h.rhs) f.push_back(v);
    std::vector<std::vector<RatVec>> sub;
    triangulate_points(f, dim, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), v0);
      out.push_back(std::move(s));
    }
  }
}

struct Frame {
  std::vector<std::size_t> cols;
  Rational covolume;  // |det| of the lattice basis on the chosen columns
};

Frame lattice_frame(const Polyhedron& p) {
  std::vector<RatVec> diffs;
  for (const auto& v : p.vertices()) diffs.push_back(sub(v, p.vertices()[0]));
  auto basis = saturated_lattice_basis(diffs, p.ambient_dim());
  Frame f;
  if (basis.empty()) {
    f.covolume = 1;
    return f;
  }
  std::vector<RatVec> rows;
  for (const auto& b : basis) rows.push_back(to_rat(b));
  rref(RatMatrix::from_rows(rows, p.ambient_dim()), &f.cols);
  RatMatrix bc(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < f.cols.size(); ++j) bc(i, j) = rows[i][f.cols[j]];
  f.covolume = abs(determinant(bc));
  return f;
}

Rational factorial(std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<long>(i);
  return r;
}

Rational simplex_volume(const std::vector<RatVec>& s, const Frame& f) {
  std::size_t k = s.size() - 1;
  if (k == 0) return 1;
  RatMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = s[i + 1][f.cols[j]] - s[0][f.cols[j]];
  return abs(determinant(m)) / (factorial(k) * f.covolume);
}

}  // namespace

std::vector<std::vector<RatVec>> triangulate(const Polyhedron& p) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "triangulation of an unbounded polyhedron");
  std::vector<std::vector<RatVec>> out;
  triangulate_points(p.vertices(), p.ambient_dim(), out);
  return out;
}

Measure volume_and_barycenter(const Polyhedron& p) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "volume of an unbounded polyhedron");
  Frame f = lattice_frame(p);
  Measure m{0, RatVec(p.ambient_dim(), Rational(0))};
  for (const auto& s : triangulate(p)) {
    Rational v = simplex_volume(s, f);
    RatVec c(p.ambient_dim(), Rational(0));
    for (const auto& x : s) c = add(c, x);
    c = scale(Rational(1, static_cast<long>(s.size())), c);
    m.vol += v;
    m.bc = add(m.bc, scale(v, c));
  }
  m.bc = scale(1 / m.vol, m.bc);
  return m;
}

Measure facet_volume_and_barycenter(const Polyhedron& p) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "facet volume of an unbounded polyhedron");
  int d = static_cast<int>(p.ambient_dim());
  if (p.dim() == d - 1) return volume_and_barycenter(p);
  if (p.dim() != d) throw Error(ErrorCode::IncompatibleDimension, "facet measure needs codimension 0 or 1");
  Measure m{0, RatVec(p.ambient_dim(), Rational(0))};
  for (const auto& f : p.facets()) {
    Measure fm = volume_and_barycenter(f);
    m.vol += fm.vol;
    m.bc = add(m.bc, scale(fm.vol, fm.bc));
  }
  m.bc = scale(1 / m.vol, m.bc);
  return m;
}

Rational integrate_affine(const Polyhedron& p, const RatVec& a, const Rational& c) {
  Measure m = volume_and_barycenter(p);
  return m.vol * (dot(a, m.bc) + c);
}

namespace {

// integers t with prefix-fixed constraints; returns [lo, hi] (possibly empty)
std::pair<Integer, Integer> last_interval(const Polyhedron& p, const RatVec& x, std::size_t k) {
  // x holds the first k coordinates; the polytope must then pin the rest to one free coordinate
  std::optional<Rational> lo, hi;
  bool fixed = false;
  Rational fix;
  auto apply = [&](const Halfspace& h, bool eq) -> bool {
    Rational rest = h.rhs;
    for (std::size_t j = 0; j < k; ++j) rest -= h.normal[j] * x[j];
    const Rational& a = h.normal[k];
    if (a == 0) return eq ? rest == 0 : rest <= 0;
    Rational t = rest / a;
    if (eq) {
      if (fixed && fix != t) return false;
      fixed = true;
      fix = t;
    } else if (a > 0) {
      if (!lo || t > *lo) lo = t;
    } else {
      if (!hi || t < *hi) hi = t;
    }
    return true;
  };
  Integer none_lo = 1, none_hi = 0;
  for (const auto& h : p.equations())
    if (!apply(h, true)) return {none_lo, none_hi};
  for (const auto& h : p.inequalities())
    if (!apply(h, false)) return {none_lo, none_hi};
  if (fixed) {
    if (den(fix) != 1) return {none_lo, none_hi};
    if ((lo && fix < *lo) || (hi && fix > *hi)) return {none_lo, none_hi};
    return {num(fix), num(fix)};
  }
  if (!lo || !hi) throw Error(ErrorCode::Unbounded, "lattice count of unbounded fiber");
  return {ceil(*lo), floor(*hi)};
}

template <class Fn>
void for_each_prefix(const std::vector<Integer>& lo, const std::vector<Integer>& hi, Fn&& fn) {
  std::size_t k = lo.size();
  for (std::size_t i = 0; i < k; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<Integer> cur = lo;
  for (;;) {
    fn(cur);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

Integer count_fiber_points(const Polyhedron& p, const IntVec& prefix) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "lattice count");
  std::size_t d = p.ambient_dim();
  if (prefix.size() >= d) {
    RatVec x = to_rat(prefix);
    x.resize(d);
    return p.contains(x) ? 1 : 0;
  }
  std::vector<Integer> lo, hi;
  for (std::size_t i = prefix.size(); i + 1 < d; ++i) {
    Rational a = p.vertices()[0][i], b = a;
    for (const auto& v : p.vertices()) {
      a = std::min(a, v[i]);
      b = std::max(b, v[i]);
    }
    lo.push_back(ceil(a));
    hi.push_back(floor(b));
  }
  Integer total = 0;
  for_each_prefix(lo, hi, [&](const std::vector<Integer>& tail) {
    RatVec x = to_rat(prefix);
    for (const auto& t : tail) x.emplace_back(t);
    auto [a, b] = last_interval(p, x, d - 1);
    if (b >= a) total += b - a + 1;
  });
  return total;
}

Integer count_lattice_points(const Polyhedron& p) { return count_fiber_points(p, {}); }

std::vector<IntVec> lattice_points(const Polyhedron& p) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "lattice points");
  std::size_t d = p.ambient_dim();
  std::vector<Integer> lo, hi;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Rational a = p.vertices()[0][i], b = a;
    for (const auto& v : p.vertices()) {
      a = std::min(a, v[i]);
      b = std::max(b, v[i]);
    }
    lo.push_back(ceil(a));
    hi.push_back(floor(b));
  }
  std::vector<IntVec> out;
  for_each_prefix(lo, hi, [&](const std::vector<Integer>& pre) {
    RatVec x = to_rat(pre);
    auto [a, b] = last_interval(p, x, d - 1);
    for (Integer t = a; t <= b; ++t) {
      IntVec q = pre;
      q.push_back(t);
      out.push_back(q);
    }
  });
  return out;
}

}  // namespace tfano
