#include "common.hpp"
#include "tfano/invariants.hpp"

#include <doctest.h>

using namespace tfano;

TEST_CASE("3.10 is smooth and the printed cone is checked") {
  auto r = smoothness(testdata::fdivisor("3.10"));
  CHECK(r.smooth);
  auto want = Cone::from_generators(3, std::vector<IntVec>{{-1, 1, 2}, {0, 0, -1}, {0, -1, -2}});
  bool seen = false;
  for (const auto& c : r.checks)
    if (c.cone == want) seen = c.regular;
  CHECK(seen);
}

TEST_CASE("a vertex of multiplicity 3 breaks smoothness") {
  Json j = read_json_file(testdata::path("3.10", "fdivisor.json"));
  for (auto& cell : j["slices"]["0"]["cells"])
    for (auto& v : cell["vertices"])
      if (point_from_json(v, "") == RatVec{Rational(-1, 2), Rational(0)}) v = Json::array({"-1/3", 0});
  auto s = fdivisor_from_json(j);
  if (validate(s).valid) CHECK_FALSE(smoothness(s).smooth);
}

TEST_CASE("class group of 3.10") {
  auto s = testdata::fdivisor("3.10");
  auto cg = class_group(s);
  CHECK(cg.free_rank == 3);
  CHECK(cg.torsion.empty());
  IntMatrix printed = IntMatrix::from_rows({{1, 2, 1, 0, 0, 0, -2},
                                            {0, 0, 0, 1, 2, 1, -2},
                                            {-1, -1, 0, 0, 0, 0, 1},
                                            {0, 0, 0, 0, -1, -1, 1}},
                                           7);
  CHECK(same_row_lattice(cg.relation_matrix, printed));
  CHECK(picard_rank(s) == 3);
  // printed degrees of D_1..D_7, one column per divisor
  IntMatrix degrees = IntMatrix::from_rows({{-1, 1, -1, 0, 0, 0, 0}, {1, 0, 1, 0, 1, 0, 1}, {1, 0, 1, 1, 0, 1, 1}}, 7);
  IntMatrix ours(3, 7);
  for (std::size_t j = 0; j < 7; ++j)
    for (std::size_t i = 0; i < 3; ++i) ours(i, j) = cg.degree_map[j][i];
  CHECK(grading_equivalent(ours, degrees));
}

TEST_CASE("Cox ring of 3.10") {
  auto c = cox_ring(testdata::fdivisor("3.10"));
  CHECK(c.variables.size() == 7);
  CHECK(to_text(c) == "C[T_1,T_2,T_3,T_4,T_5,T_6,T_7]/<T_1T_2^2T_3 + T_4T_5^2T_6 + T_7^2>");
  CHECK(homogeneous(c));
  IntMatrix printed = IntMatrix::from_rows({{-1, 1, -1, 0, 0, 0, 0}, {1, 0, 1, 0, 1, 0, 1}, {1, 0, 1, 1, 0, 1, 1}}, 7);
  CHECK(grading_equivalent(c.grading, printed));
}

TEST_CASE("Cox ring of the quadric") {
  auto c = cox_ring(testdata::fdivisor("Q"));
  CHECK(to_text(c) == "C[T_1,T_2,T_3,T_4,T_5]/<T_1T_2 + T_3T_4 + T_5^2>");
  CHECK(grading_equivalent(c.grading, IntMatrix::from_rows({{1, 1, 1, 1, 1}}, 5)));
  CHECK(picard_rank(testdata::fdivisor("Q")) == 1);
}

TEST_CASE("two slices give a polynomial ring") {
  auto c = cox_ring(testdata::fdivisor("Q-two-slice"));
  CHECK(c.relations.empty());
}

TEST_CASE("negative Picard rank formula is flagged") {
  Fan f(2, {Cone::from_generators(2, std::vector<IntVec>{{1, 0}, {0, 1}}),
            Cone::from_generators(2, std::vector<IntVec>{{0, 1}, {-1, -1}}),
            Cone::from_generators(2, std::vector<IntVec>{{-1, -1}, {1, 0}})});
  std::vector<Cone> marks(f.maximal().begin(), f.maximal().end());
  FDivisor s(2, {{MarkedPoint::zero(), f.as_subdivision()}}, f, marks);
  if (validate(s).valid) CHECK_THROWS_AS(picard_rank(s), Error);
}
