#include "common.hpp"
#include "tfano/fdivisor.hpp"

#include <doctest.h>

using namespace tfano;

namespace {

// 3.10 with one vertex of S_0 replaced
Json moved_vertex(const Json& to) {
  Json j = read_json_file(testdata::path("3.10", "fdivisor.json"));
  for (auto& cell : j["slices"]["0"]["cells"])
    for (auto& v : cell["vertices"])
      if (point_from_json(v, "") == RatVec{Rational(-1, 2), Rational(0)}) v = to;
  return j;
}

FDivisor toric_p2() {
  std::vector<Cone> cones{Cone::from_generators(2, std::vector<IntVec>{{1, 0}, {0, 1}}),
                          Cone::from_generators(2, std::vector<IntVec>{{0, 1}, {-1, -1}}),
                          Cone::from_generators(2, std::vector<IntVec>{{-1, -1}, {1, 0}})};
  Fan f(2, cones);
  return FDivisor(2, {{MarkedPoint::zero(), f.as_subdivision()}, {MarkedPoint::infinity(), f.as_subdivision()}}, f, {});
}

}  // namespace

TEST_CASE("marked points") {
  CHECK(MarkedPoint::parse("0") == MarkedPoint::zero());
  CHECK(MarkedPoint::parse("inf").is_infinity());
  CHECK(MarkedPoint::parse("1") == MarkedPoint::one());
  CHECK(MarkedPoint::parse("3/2").affine_coordinate() == Rational(3, 2));
}

TEST_CASE("3.10 is a valid f-divisor") {
  auto s = testdata::fdivisor("3.10");
  CHECK(validate(s).valid);
  CHECK(s.tail_fan().maximal().size() == 8);
  CHECK(s.degree_marks().size() == 8);
}

TEST_CASE("toric f-divisor without degree marks is valid") { CHECK(validate(toric_p2()).valid); }

TEST_CASE("moving a vertex off the degree invalidates 3.10") {
  auto s = fdivisor_from_json(moved_vertex(Json::array({"-1/2", 1})));
  CHECK_FALSE(validate(s).valid);
}

TEST_CASE("empty slice list is a parse error") {
  CHECK_THROWS_AS(fdivisor_from_json(Json::parse(R"({"rank":2,"slices":{}})")), Error);
}

TEST_CASE("vertex data and multiplicities of 3.10") {
  auto s = testdata::fdivisor("3.10");
  auto vd = vertex_data(s);
  REQUIRE(vd.size() == 7);
  std::vector<Integer> mu;
  for (const auto& v : vd) mu.push_back(v.multiplicity);
  CHECK(mu == std::vector<Integer>{1, 2, 1, 1, 2, 1, 2});
  CHECK(vd[6].vertex == RatVec{Rational(1, 2), Rational(1, 2)});
  CHECK(excluded_rays(s).empty());
  CHECK(multiplicity({Rational(1, 3), Rational(0)}) == 3);
}

TEST_CASE("equivalence witnesses") {
  auto s = testdata::fdivisor("3.10");
  auto self = equivalent(s, s);
  REQUIRE(self);
  IntMatrix minus = IntMatrix::from_rows({{-1, 0}, {0, -1}}, 2);
  auto neg = transform(s, minus, {}, {});
  auto w = equivalent(s, neg);
  REQUIRE(w);
  IntVec sum{0, 0};
  for (const auto& [p, v] : w->translations) sum = IntVec{sum[0] + v[0], sum[1] + v[1]};
  CHECK(sum == IntVec{0, 0});
  auto shifted = transform(s, IntMatrix::identity(2), {},
                           {{MarkedPoint::one(), IntVec{1, 0}}, {MarkedPoint::zero(), IntVec{-1, 0}}});
  auto w2 = equivalent(s, shifted);
  REQUIRE(w2);
  CHECK(w2->F == IntMatrix::identity(2));
}
