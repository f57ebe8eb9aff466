#include "tfano/io.hpp"

#include <fstream>
#include <sstream>

namespace tfano {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.is_zero() || (x > -(Integer(1) << 62) && x < (Integer(1) << 62)))
      a.push_back(x.convert_to<long long>());
    else
      a.push_back(x.str());
  }
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const Polyhedron& p) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(to_json(v));
  j["tail"] = Json::array();
  for (const auto& r : p.rays()) j["tail"].push_back(to_json(r));
  return j;
}

Json to_json(const Cone& c) {
  Json a = Json::array();
  for (const auto& r : c.rays()) a.push_back(to_json(r));
  return a;
}

Json to_json(const Fan& f) {
  Json a = Json::array();
  for (const auto& c : f.maximal()) a.push_back(to_json(c));
  return a;
}

Json to_json(const Subdivision& s) {
  Json j;
  j["cells"] = Json::array();
  for (const auto& c : s.cells()) j["cells"].push_back(to_json(c));
  return j;
}

Json to_json(const FDivisor& s) {
  Json j;
  j["rank"] = s.rank();
  j["slices"] = Json::object();
  for (const auto& [p, sub] : s.slices()) j["slices"][p.label()] = to_json(sub);
  j["tail_fan"] = to_json(s.tail_fan());
  j["degree_cones"] = Json::array();
  for (const auto& c : s.degree_marks()) j["degree_cones"].push_back(to_json(c));
  return j;
}

Json to_json(const DivisorialPolytope& psi) {
  Json j;
  j["box"] = Json::object();
  j["box"]["vertices"] = Json::array();
  for (const auto& v : psi.box().vertices()) j["box"]["vertices"].push_back(to_json(v));
  j["pieces"] = Json::object();
  for (const auto& [p, list] : psi.pieces()) {
    Json a = Json::array();
    for (const auto& pc : list) a.push_back({{"slope", to_json(pc.slope)}, {"c", to_string(pc.c)}});
    j["pieces"][p.label()] = a;
  }
  return j;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::Parse, where + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational as \"p/q\" string or an integer");
}

RatVec point_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of coordinates");
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
  return v;
}

IntVec lattice_point_from_json(const Json& j, const std::string& where) {
  RatVec v = point_from_json(j, where);
  if (!is_integral(v)) fail(where, "expected integer coordinates");
  return to_int(v);
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(lattice_point_from_json(j[i], where + "/" + std::to_string(i)));
  return IntMatrix::from_rows(rows, rows[0].size());
}

Polyhedron polyhedron_from_json(const Json& j, std::size_t dim, const std::string& where) {
  const Json& vs = field(j, "vertices", where);
  if (!vs.is_array() || vs.empty()) fail(where + "/vertices", "expected a nonempty array");
  std::vector<RatVec> pts, rays;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    pts.push_back(point_from_json(vs[i], where + "/vertices/" + std::to_string(i)));
    if (pts.back().size() != dim) fail(where + "/vertices/" + std::to_string(i), "wrong dimension");
  }
  if (j.contains("tail")) {
    const Json& ts = j["tail"];
    if (!ts.is_array()) fail(where + "/tail", "expected an array");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      rays.push_back(to_rat(lattice_point_from_json(ts[i], where + "/tail/" + std::to_string(i))));
      if (rays.back().size() != dim) fail(where + "/tail/" + std::to_string(i), "wrong dimension");
    }
  }
  try {
    return Polyhedron::from_generators(dim, pts, rays);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Subdivision subdivision_from_json(const Json& j, std::size_t dim, const std::string& where) {
  const Json& cs = field(j, "cells", where);
  if (!cs.is_array() || cs.empty()) fail(where + "/cells", "expected a nonempty array of cells");
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i < cs.size(); ++i)
    cells.push_back(polyhedron_from_json(cs[i], dim, where + "/cells/" + std::to_string(i)));
  return Subdivision(dim, cells);
}

Fan fan_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of cones");
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::vector<IntVec> g;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      g.push_back(lattice_point_from_json(j[i][k], where + "/" + std::to_string(i) + "/" + std::to_string(k)));
    cones.push_back(Cone::from_generators(dim, g));
  }
  return Fan(dim, cones);
}

FDivisor fdivisor_from_json(const Json& j) {
  const Json& rk = field(j, "rank", "");
  if (!rk.is_number_integer() || rk.get<long long>() < 1) fail("/rank", "expected a positive integer");
  std::size_t dim = rk.get<std::size_t>();
  const Json& sl = field(j, "slices", "");
  if (!sl.is_object()) fail("/slices", "expected an object keyed by point labels");
  std::map<MarkedPoint, Subdivision> slices;
  for (auto it = sl.begin(); it != sl.end(); ++it) {
    MarkedPoint p = MarkedPoint::parse(it.key());
    if (slices.count(p)) fail("/slices/" + it.key(), "duplicate label");
    slices.emplace(p, subdivision_from_json(it.value(), dim, "/slices/" + it.key()));
  }
  std::optional<Fan> tf;
  if (j.contains("tail_fan")) tf = fan_from_json(j["tail_fan"], dim, "/tail_fan");
  if (slices.empty() && !tf) fail("/slices", "empty slice list and no tail_fan given");
  std::vector<Cone> marks;
  if (j.contains("degree_cones")) marks = fan_from_json(j["degree_cones"], dim, "/degree_cones").maximal();
  return FDivisor(dim, slices, tf, marks);
}

DivisorialPolytope divpolytope_from_json(const Json& j) {
  const Json& b = field(j, "box", "");
  RatVec first = point_from_json(field(b, "vertices", "/box").at(0), "/box/vertices/0");
  Polyhedron box = polyhedron_from_json(b, first.size(), "/box");
  std::map<MarkedPoint, std::vector<AffinePiece>> pieces;
  if (j.contains("pieces")) {
    const Json& ps = j["pieces"];
    if (!ps.is_object()) fail("/pieces", "expected an object keyed by point labels");
    for (auto it = ps.begin(); it != ps.end(); ++it) {
      std::string w = "/pieces/" + it.key();
      if (!it.value().is_array() || it.value().empty()) fail(w, "expected a nonempty array of pieces");
      auto& list = pieces[MarkedPoint::parse(it.key())];
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        const Json& pc = it.value()[i];
        std::string wi = w + "/" + std::to_string(i);
        RatVec slope = point_from_json(field(pc, "slope", wi), wi + "/slope");
        if (slope.size() != box.ambient_dim()) fail(wi + "/slope", "wrong dimension");
        list.push_back({slope, rational_from_json(field(pc, "c", wi), wi + "/c")});
      }
    }
  }
  return DivisorialPolytope(box, pieces);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

}  // namespace tfano
