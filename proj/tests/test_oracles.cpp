#include "tfano/virtual.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

using namespace tfano;

namespace {

std::mt19937 rng(20261016);

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Integer gcd(Integer a, Integer b) {
  a = abs(Rational(a)).convert_to<Integer>();
  b = abs(Rational(b)).convert_to<Integer>();
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

// d_1 ··· d_k = gcd of the k×k minors
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    for (const auto& r : combinations(m.rows(), k))
      for (const auto& c : combinations(m.cols(), k)) g = gcd(g, determinant(submatrix(m, r, c)));
    out.push_back(g == 0 ? Integer(0) : Integer(g / prev));
    if (g != 0) prev = g;
  }
  return out;
}

using V3 = std::array<long, 3>;

long lgcd(long a, long b) { return std::gcd(a, b); }

bool primitive_vec(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = lgcd(g, x);
  return g == 1;
}

// lattice points x = Σ λ_i g_i with 0 ≤ λ_i < 1; generators are the columns
long parallelepiped_points(const std::vector<std::vector<long>>& g) {
  const std::size_t d = g.size();
  std::vector<long> lo(d, 0), hi(d, 0);
  for (const auto& v : g)
    for (std::size_t i = 0; i < d; ++i) (v[i] < 0 ? lo[i] : hi[i]) += v[i];
  // adjugate of the matrix with columns g
  long det;
  std::vector<std::vector<long>> adj(d, std::vector<long>(d));
  if (d == 1) {
    det = g[0][0];
    adj[0][0] = 1;
  } else if (d == 2) {
    long a = g[0][0], b = g[1][0], c = g[0][1], e = g[1][1];  // rows (a b; c e)
    det = a * e - b * c;
    adj = {{e, -b}, {-c, a}};
  } else {
    auto m = [&](int r, int c) { return g[c][r]; };
    det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
          m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        adj[i][j] = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      }
  }
  long n = 0;
  std::vector<long> x(lo);
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      long num = 0;
      for (std::size_t j = 0; j < d; ++j) num += adj[i][j] * x[j];
      // 0 ≤ num/det < 1
      if (det > 0) inside = num >= 0 && num < det;
      else inside = num <= 0 && num > det;
    }
    n += inside;
    std::size_t k = 0;
    while (k < d && ++x[k] > hi[k]) x[k] = lo[k], ++k;
    if (k == d) break;
  }
  return n;
}

bool regular_by_oracle(const std::vector<std::vector<long>>& g) { return parallelepiped_points(g) == 1; }

Cone cone_of(const std::vector<std::vector<long>>& g) {
  std::vector<IntVec> gens;
  for (const auto& v : g) gens.push_back(IntVec(v.begin(), v.end()));
  return Cone::from_generators(g.size(), gens);
}

RatVec q(std::initializer_list<Rational> xs) { return RatVec(xs); }

RatVec random_point(std::size_t d, long r) {
  RatVec v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(uniform(-r, r));
  return v;
}

Polyhedron random_full_polytope(std::size_t d, long r, std::size_t npts) {
  while (true) {
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < npts; ++i) pts.push_back(random_point(d, r));
    auto p = Polyhedron::from_generators(d, pts);
    if (p.full_dimensional()) return p;
  }
}

Rational random_rational(long r, long den) { return Rational(uniform(-r * den, r * den), den); }

}  // namespace

TEST_CASE("smith normal form against gcds of minors") {
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = uniform(1, 4), c = uniform(1, 5);
    if (trial < 50) r = 3, c = 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(-9, 9);
    auto s = smith_normal_form(m);
    CAPTURE(trial);
    REQUIRE(s.P * m * s.Q == s.D);
    CHECK(abs(Rational(determinant(s.P))) == 1);
    CHECK(abs(Rational(determinant(s.Q))) == 1);
    auto oracle = invariant_factors_by_minors(m);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      CHECK(s.D(k, k) == oracle[k]);
      CHECK(s.D(k, k) >= 0);
      if (k + 1 < oracle.size() && s.D(k, k) != 0) CHECK(s.D(k + 1, k + 1) % s.D(k, k) == 0);
    }
  }
}

TEST_CASE("cone regularity against parallelepiped enumeration, dimensions 1 and 2") {
  int checked = 0;
  for (long a = -3; a <= 3; ++a)
    if (a != 0) {
      std::vector<std::vector<long>> g{{a / std::abs(a)}};
      CHECK(cone_is_regular(cone_of(g)) == regular_by_oracle(g));
      ++checked;
    }
  std::vector<std::vector<long>> prim;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      if (primitive_vec({a, b})) prim.push_back({a, b});
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (std::size_t j = i + 1; j < prim.size(); ++j) {
      if (prim[i][0] * prim[j][1] - prim[i][1] * prim[j][0] == 0) continue;
      std::vector<std::vector<long>> g{prim[i], prim[j]};
      CHECK(cone_is_regular(cone_of(g)) == regular_by_oracle(g));
      ++checked;
    }
  MESSAGE(checked << " cones in dimension ≤ 2");
}

TEST_CASE("cone regularity against parallelepiped enumeration, dimension 3") {
  // every simplicial cone with primitive generators in [-3,3]^3, one per orbit of the
  // signed coordinate permutations (which preserve regularity and the oracle alike)
  std::vector<V3> prim;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        if (primitive_vec({a, b, c})) prim.push_back({a, b, c});
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto canonical = [&](std::array<V3, 3> t) {
    std::array<V3, 3> best{};
    bool first = true;
    for (const auto& p : perms)
      for (int s = 0; s < 8; ++s) {
        std::array<V3, 3> u;
        for (int k = 0; k < 3; ++k)
          for (int i = 0; i < 3; ++i) u[k][i] = ((s >> i) & 1 ? -1 : 1) * t[k][p[i]];
        std::sort(u.begin(), u.end());
        if (first || u < best) best = u, first = false;
      }
    return best;
  };
  std::set<std::array<V3, 3>> reps;
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (std::size_t j = i + 1; j < prim.size(); ++j)
      for (std::size_t k = j + 1; k < prim.size(); ++k) {
        const V3 &a = prim[i], &b = prim[j], &c = prim[k];
        long det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
        if (det == 0) continue;
        reps.insert(canonical({a, b, c}));
      }
  std::size_t mismatches = 0, regular = 0;
  for (const auto& t : reps) {
    std::vector<std::vector<long>> g;
    for (const auto& v : t) g.push_back({v[0], v[1], v[2]});
    bool oracle = regular_by_oracle(g);
    regular += oracle;
    if (cone_is_regular(cone_of(g)) != oracle) ++mismatches;
  }
  MESSAGE(reps.size() << " orbit representatives, " << regular << " regular");
  CHECK(mismatches == 0);
}

TEST_CASE("polygon area against Pick's formula") {
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_full_polytope(2, 6, uniform(3, 8));
    Integer interior = 0, boundary = 0;
    for (const auto& x : lattice_points(p)) {
      bool on_edge = false;
      for (const auto& h : p.inequalities())
        if (dot(h.normal, to_rat(x)) == h.rhs) on_edge = true;
      (on_edge ? boundary : interior) += 1;
    }
    CAPTURE(trial);
    CHECK(volume_and_barycenter(p).vol == Rational(interior) + Rational(boundary) / 2 - 1);
  }
}

TEST_CASE("evaluations respect [Δ]+[∇] = [Δ∪∇]+[Δ∩∇]") {
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = trial % 2 ? 3 : 2;
    auto p = random_full_polytope(d, 4, uniform(d + 1, d + 5));
    RatVec h;
    do h = random_point(d, 2);
    while (is_zero(h));
    auto lo = *p.minimum(h), hi = -*p.minimum(scale(-1, h));
    // two overlapping slabs cover p; their union is p again
    Rational t1 = lo + (hi - lo) * Rational(uniform(0, 4), 8), t2 = lo + (hi - lo) * Rational(uniform(4, 8), 8);
    auto cut = [&](std::vector<Halfspace> extra) {
      auto in = p.inequalities();
      for (auto& e : extra) in.push_back(e);
      return *Polyhedron::from_constraints(d, in);
    };
    Polyhedron below = cut({{scale(-1, h), -t2}}), above = cut({{h, t1}}), both = cut({{scale(-1, h), -t2}, {h, t1}});
    VirtualPolytope v(d);
    v.add(1, below);
    v.add(1, above);
    v.add(-1, p);
    v.add(-1, both);
    auto m = measures(v);
    CAPTURE(trial);
    CHECK(m.vol == 0);
    CHECK(is_zero(m.moment));
    CHECK(lattice_count(v) == 0);
    CHECK(lattice_count(v.dilated(2)) == 0);
    CHECK(lattice_count(v.dilated(3)) == 0);
  }
}

TEST_CASE("codim-1 polytopes at lattice distance 1") {
  int used = 0;
  for (int trial = 0; used < 50; ++trial) {
    REQUIRE(trial < 500);
    VirtualPolytope c(3);
    std::size_t nterms = uniform(1, 3);
    while (c.terms().size() < nterms) {
      // primitive normal n with a point p, ⟨n,p⟩ = 1; the term lives on that plane with t ≥ 0
      std::vector<long> nl;
      do nl = {uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
      while (!primitive_vec(nl));
      IntMatrix n = IntMatrix::from_rows({IntVec(nl.begin(), nl.end())}, 3);
      auto basis = integer_kernel(n);
      // n primitive: P·n·Q = (1 0 0) with P = ±1, so Q·(P,0,0) solves ⟨n,x⟩ = 1
      auto s = smith_normal_form(n);
      IntVec base = s.Q * IntVec{s.P(0, 0), 0, 0};
      std::vector<RatVec> pts;
      for (int k = 0; k < 5; ++k) {
        long a = uniform(-2, 2), b = uniform(-2, 2);
        IntVec x{base[0] + a * basis[0][0] + b * basis[1][0], base[1] + a * basis[0][1] + b * basis[1][1],
                 base[2] + a * basis[0][2] + b * basis[1][2]};
        if (x[2] >= 0) pts.push_back(to_rat(x));
      }
      if (pts.size() < 3) continue;
      auto poly = Polyhedron::from_generators(3, pts);
      if (poly.dim() != 2) continue;
      Rational coef = random_rational(3, 4);
      if (coef == 0) continue;
      c.add(coef, poly);
    }
    auto pyr = pyramid(c);
    auto mc = measures(c), mp = measures(pyr);
    if (mp.vol == 0) continue;
    ++used;
    // vol1(C)·(bc1(C) − bc(pyr C)) = vol(pyr C)·bc(pyr C), multiplied through by vol(pyr C)
    RatVec lhs = sub(scale(mp.vol, mc.moment1), scale(mc.vol1, mp.moment));
    RatVec rhs = scale(mp.vol, mp.moment);
    CAPTURE(trial);
    CHECK(lhs == rhs);
  }
}
