#include "common.hpp"
#include "tfano/catalog.hpp"
#include "tfano/cli.hpp"
#include "tfano/svg.hpp"

#include <doctest.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tfano;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("JSON round trips") {
  for (std::string e : {"3.10", "Q", "Q-two-slice"}) {
    auto s = testdata::fdivisor(e);
    CHECK(fdivisor_from_json(to_json(s)).slices() == s.slices());
    auto psi = testdata::divpolytope(e);
    auto back = divpolytope_from_json(to_json(psi));
    CHECK(back.box() == psi.box());
    CHECK(back.pieces() == psi.pieces());
  }
  CHECK(rational_from_json(to_json(Rational(-7, 3)), "") == Rational(-7, 3));
}

TEST_CASE("parse errors name the offending field") {
  try {
    fdivisor_from_json(Json::parse(R"({"rank":2,"slices":{"0":{"cells":[{"vertices":[["a",0]]}]}}})"));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("/slices/0/cells/0") != std::string::npos);
  }
  auto bad = temp_file("tfano_bad.json", "{\n  \"rank\": 2,\n  oops\n}");
  try {
    read_json_file(bad);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("relation shapes ignore variable names") {
  CHECK(relation_shapes({"T_1T_2^2T_3 + T_4T_5^2T_6 + T_7^2"}) == relation_shapes({"T_7^2 + T_3T_1^2T_2 + T_4T_6T_5^2"}));
  CHECK(relation_shapes({"T_1T_2 + T_3"}) != relation_shapes({"T_1T_2 + T_3^2"}));
}

TEST_CASE("cli exit codes") {
  auto empty = temp_file("tfano_empty.json", R"({"rank":2,"slices":{}})");
  auto r = cli({"validate", empty});
  CHECK(r.code == 2);
  CHECK(r.err.find("slice") != std::string::npos);
  CHECK(cli({"validate", "catalog:3.10"}).code == 0);
  CHECK(cli({"validate", "/nonexistent/file.json"}).code == 2);
  CHECK(cli({"report", "catalog:no-such-entry"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli prints exact rationals") {
  auto r = cli({"degree", "catalog:3.10"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["volume"] == "13/3");
  CHECK(j["degree"] == "26");
  auto f = Json::parse(cli({"futaki", "--method", "fano", "catalog:3.10", "catalog:3.10"}).out);
  CHECK(f["futaki"] == Json::array({"0", "0"}));
  auto g = Json::parse(cli({"futaki", "catalog:3.10"}).out);
  CHECK(g["futaki"] == f["futaki"]);
  auto poly = temp_file("tfano_square.json", R"({"vertices":[[1,0],[0,1],[-1,0],[0,-1]]})");
  CHECK(Json::parse(cli({"futaki", "--method", "toric", poly}).out)["vanishes"] == true);
}

TEST_CASE("cli subcommands on 3.10") {
  CHECK(Json::parse(cli({"smooth", "catalog:3.10"}).out)["smooth"] == true);
  CHECK(Json::parse(cli({"classgroup", "catalog:3.10"}).out)["picard_rank"] == 3);
  CHECK(Json::parse(cli({"cox", "catalog:3.10"}).out)["homogeneous"] == true);
  CHECK(Json::parse(cli({"ample-check", "catalog:3.10", "catalog:3.10"}).out)["ample"] == true);
  CHECK(Json::parse(cli({"anticanonical", "catalog:3.10", "catalog:3.10"}).out)["coefficients"]["1"] == "-2");
  CHECK(Json::parse(cli({"sections", "catalog:3.10"}).out)["h0"] == "16");
  CHECK(Json::parse(cli({"symmetric", "catalog:3.10"}).out)["symmetric"] == true);
  CHECK(Json::parse(cli({"ke", "catalog:3.10", "catalog:3.10"}).out)["ke"] == "yes");
}

TEST_CASE("cli degeneration and downgrade") {
  auto d = cli({"degenerate", "catalog:Q", "catalog:Q", "--add", "0,inf", "--target", "0"});
  REQUIRE(d.code == 0);
  auto j = Json::parse(d.out);
  CHECK(j["relabeled"]["points"]["1"] == "inf");
  auto two = temp_file("tfano_two.json", j["relabeled"]["fdivisor"].dump());
  auto fan = cli({"downgrade-fan", two, "--reference-fan", testdata::path("Q-two-slice", "reference_fan.json"),
                  "--reference-polytope", testdata::path("Q-two-slice", "reference_polytope.json")});
  CHECK(fan.code == 0);
  auto k = Json::parse(fan.out);
  CHECK(k["fan_matches_reference"] == true);
  CHECK(k["polytope_equivalent"] == true);
  CHECK(cli({"downgrade-fan", "catalog:Q-two-slice"}).code == 0);
}

TEST_CASE("report on the catalog") {
  auto r = cli({"report", "catalog:3.10"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["result"] == "PASS");
  for (const auto& c : j["checks"]) CHECK(c["status"] != "FAIL");
  auto all = cli({"report", "--all"});
  CHECK(all.code == 0);
  CHECK(Json::parse(all.out).size() == catalog_names().size());
}

TEST_CASE("report flags data that contradicts expectations") {
  auto r = cli({"report", "Q", "--fdivisor", testdata::path("3.10", "fdivisor.json"), "--divpolytope",
                testdata::path("3.10", "divpolytope.json")});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["result"] == "FAIL");
}

TEST_CASE("catalog directory can be overridden") {
  auto dir = std::filesystem::temp_directory_path() / "tfano_catalog";
  std::filesystem::create_directories(dir / "mine");
  std::filesystem::copy_file(testdata::path("3.10", "fdivisor.json"), dir / "mine" / "f.json",
                             std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "mine" / "entry.json") << R"({"name":"mine","fdivisor":"f.json","expected":{"picard_rank":{"value":3,"source":"test"}}})";
  setenv("TFANO_CATALOG_DIR", dir.c_str(), 1);
  auto names = catalog_names();
  auto r = cli({"report", "catalog:mine"});
  unsetenv("TFANO_CATALOG_DIR");
  CHECK(names == std::vector<std::string>{"mine"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["checks"][2]["status"] == "PASS");
}

TEST_CASE("svg output") {
  std::string svg = render_svg(testdata::fdivisor("3.10"));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<rect") == 4);
  CHECK(count(svg, "<polygon") >= 3 * 8 + 8);
  CHECK(svg.find("(-1/2,0)") != std::string::npos);
  CHECK(count(svg, "<svg") == count(svg, "</svg>"));
  CHECK(count(svg, "<circle class=\"vertex\"") >= 7);
  Fan f(2, testdata::fdivisor("Q").tail_fan().maximal());
  FDivisor toric(2, {{MarkedPoint::zero(), f.as_subdivision()}}, f, {});
  CHECK(count(render_svg(toric), "<rect") == 1);
  CHECK(render_svg(testdata::divpolytope("3.10")).find("<polygon") != std::string::npos);
  Fan f3(3, {Cone::from_generators(3, std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
             Cone::from_generators(3, std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}}),
             Cone::from_generators(3, std::vector<IntVec>{{1, 0, 0}, {0, 0, 1}, {-1, -1, -1}}),
             Cone::from_generators(3, std::vector<IntVec>{{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}})});
  FDivisor three(3, {{MarkedPoint::zero(), f3.as_subdivision()}}, f3, {});
  try {
    render_svg(three);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedRank);
  }
}
