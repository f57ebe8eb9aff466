#include "common.hpp"
#include "tfano/degeneration.hpp"

#include <doctest.h>
#include <set>

using namespace tfano;

namespace {

const MarkedPoint kZero = MarkedPoint::zero(), kInf = MarkedPoint::infinity(), kOne = MarkedPoint::one();

std::set<Cone> cones(const std::vector<Cone>& v) { return {v.begin(), v.end()}; }

Cone cone3(std::vector<IntVec> g) { return Cone::from_generators(3, g); }

}  // namespace

TEST_CASE("quadric decomposition S_0 + S_inf is admissible") {
  auto dec = decompose(testdata::divpolytope("Q"), {kZero, kInf});
  CHECK(check_admissible(dec).ok);
  CHECK(dec.summands().size() == 2);
}

TEST_CASE("adding a trivial summand stays admissible") {
  auto dec = decompose(testdata::divpolytope("Q"), {kZero, MarkedPoint::parse("2")});
  CHECK(check_admissible(dec).ok);
}

TEST_CASE("two non-lattice summand vertices are rejected") {
  Fan f(2, testdata::fdivisor("Q").tail_fan().maximal());
  RatVec half{Rational(1, 2), Rational(1, 2)}, one{Rational(1), Rational(1)};
  MinkowskiDecomposition dec;
  dec.points = {kZero, kInf};
  std::vector<Polyhedron> base;
  for (const auto& c : f.maximal()) {
    base.push_back(c.as_polyhedron().translated(one));
    dec.pieces.push_back({c.as_polyhedron().translated(half), c.as_polyhedron().translated(half)});
  }
  dec.base = Subdivision(2, base);
  CHECK_FALSE(check_admissible(dec).ok);
}

TEST_CASE("quadric degenerates to the printed two-slice datum") {
  auto d = add_slices(testdata::fdivisor("Q"), testdata::divpolytope("Q"), {kZero, kInf}, kZero);
  auto two = relabel_two_slices(d.s, kZero);
  CHECK(equivalent(two, testdata::fdivisor("Q-two-slice")));
  auto other = add_slices(testdata::fdivisor("Q"), testdata::divpolytope("Q"), {kZero, kOne}, kZero);
  CHECK(validate(other.s).valid);
}

TEST_CASE("adding a trivial slice changes nothing") {
  auto q = testdata::fdivisor("Q");
  auto d = add_slices(q, testdata::divpolytope("Q"), {kOne, MarkedPoint::parse("2")}, kOne);
  CHECK(equivalent(d.s, q));
}

TEST_CASE("fan of the two-slice datum") {
  auto tf = two_slice_fan(testdata::fdivisor("Q-two-slice"));
  std::set<Cone> delta{cone3({{0, 0, 1}, {-1, 0, 1}, {-1, -1, 1}, {0, -1, 1}}),
                       cone3({{0, 0, 1}, {-1, 0, 1}, {1, 1, -2}}),
                       cone3({{0, 0, 1}, {0, -1, 1}, {1, 1, -2}}),
                       cone3({{-1, 0, 1}, {-1, -1, 1}, {1, 1, -2}}),
                       cone3({{-1, -1, 1}, {0, -1, 1}, {1, 1, -2}})};
  CHECK(cones(tf.fan.maximal()) == delta);
  CHECK(tf.upper.size() == 5);
  CHECK(tf.lower.size() == 4);
  std::set<Cone> tau{cone3({{-1, -1, 0}, {-1, 1, 0}, {1, 1, -2}}), cone3({{-1, -1, 0}, {1, -1, 0}, {1, 1, -2}}),
                     cone3({{-1, 1, 0}, {1, 1, 0}, {1, 1, -2}}), cone3({{1, -1, 0}, {1, 1, 0}, {1, 1, -2}})};
  CHECK(cones(tf.lower) == tau);
  auto p = fan_to_reflexive_polytope(tf.fan);
  REQUIRE(p);
  CHECK(is_reflexive(*p));
  auto want = Polyhedron::from_generators(3, {to_rat(IntVec{0, 0, 1}), to_rat(IntVec{-1, 0, 1}), to_rat(IntVec{-1, -1, 1}),
                                              to_rat(IntVec{0, -1, 1}), to_rat(IntVec{1, 1, -2})});
  CHECK(lattice_equivalent(*p, want));
}

TEST_CASE("reflexive polytopes from fans") {
  Fan p3(3, {cone3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), cone3({{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}}),
             cone3({{1, 0, 0}, {0, 0, 1}, {-1, -1, -1}}), cone3({{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}})});
  auto p = fan_to_reflexive_polytope(p3);
  REQUIRE(p);
  CHECK(p->vertices().size() == 4);
  auto c2 = [](std::vector<IntVec> g) { return Cone::from_generators(2, g); };
  Fan bad(2, {c2({{1, 0}, {0, 1}}), c2({{0, 1}, {-1, -3}}), c2({{-1, -3}, {1, 0}})});
  CHECK_FALSE(fan_to_reflexive_polytope(bad));
}

TEST_CASE("lattice equivalence recovers a unimodular map") {
  auto a = Polyhedron::from_generators(3, {to_rat(IntVec{1, 0, 0}), to_rat(IntVec{0, 1, 0}), to_rat(IntVec{0, 0, 1}),
                                           to_rat(IntVec{-1, -1, -1}), to_rat(IntVec{1, 1, 0})});
  CHECK(lattice_equivalent(a, a));
  RatMatrix g = RatMatrix::from_rows({{1, 2, 0}, {0, 1, 0}, {3, 1, 1}}, 3);
  auto b = a.linear_image(g);
  auto m = lattice_equivalent(a, b);
  REQUIRE(m);
  CHECK(a.linear_image(to_rat(*m)) == b);
  auto scaled = a.scaled(2);
  CHECK_FALSE(lattice_equivalent(a, scaled));
}
