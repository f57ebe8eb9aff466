#include "tfano/catalog.hpp"

#include "tfano/degeneration.hpp"
#include "tfano/invariants.hpp"
#include "tfano/symmetry.hpp"
#include "tfano/virtual.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <regex>
#include <set>

namespace fs = std::filesystem;

namespace tfano {

std::string catalog_dir() {
  if (const char* env = std::getenv("TFANO_CATALOG_DIR"); env && *env) return env;
  return TFANO_CATALOG_DEFAULT;
}

namespace {

std::optional<std::string> file_in(const CatalogEntry& e, const std::string& key) {
  if (!e.meta.contains(key) || !e.meta[key].is_string()) return std::nullopt;
  return (fs::path(e.dir) / e.meta[key].get<std::string>()).string();
}

}  // namespace

std::optional<std::string> CatalogEntry::fdivisor_path() const { return file_in(*this, "fdivisor"); }
std::optional<std::string> CatalogEntry::divpolytope_path() const { return file_in(*this, "divpolytope"); }
std::optional<std::string> CatalogEntry::reference_path(const std::string& key) const {
  if (!meta.contains("references") || !meta["references"].contains(key)) return std::nullopt;
  return (fs::path(dir) / meta["references"][key].get<std::string>()).string();
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  fs::path root(catalog_dir());
  if (!fs::is_directory(root)) return out;
  for (const auto& d : fs::directory_iterator(root))
    if (d.is_directory() && fs::exists(d.path() / "entry.json")) out.push_back(d.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  fs::path dir = fs::path(catalog_dir()) / name;
  if (!fs::exists(dir / "entry.json"))
    throw Error(ErrorCode::Parse, "no catalog entry '" + name + "' in " + catalog_dir());
  return {name, dir.string(), read_json_file((dir / "entry.json").string())};
}

bool is_catalog_ref(const std::string& ref) { return ref.rfind("catalog:", 0) == 0; }

std::string resolve(const std::string& ref, const std::string& kind) {
  if (!is_catalog_ref(ref)) return ref;
  CatalogEntry e = catalog_entry(ref.substr(8));
  auto p = file_in(e, kind);
  if (!p) throw Error(ErrorCode::Parse, "catalog entry " + e.name + " ships no " + kind + " data");
  return *p;
}

std::vector<std::vector<std::vector<long>>> relation_shapes(const std::vector<std::string>& relations) {
  std::vector<std::vector<std::vector<long>>> out;
  static const std::regex var(R"(([TS])_(\d+)(\^(\d+))?)");
  for (const auto& r : relations) {
    std::vector<std::vector<long>> monos;
    std::size_t start = 0;
    while (start <= r.size()) {
      std::size_t plus = r.find('+', start);
      std::string m = r.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
      std::vector<long> ex;
      for (auto it = std::sregex_iterator(m.begin(), m.end(), var); it != std::sregex_iterator(); ++it)
        ex.push_back((*it)[4].matched ? std::stol((*it)[4].str()) : 1);
      std::sort(ex.begin(), ex.end());
      if (!ex.empty()) monos.push_back(ex);
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    std::sort(monos.begin(), monos.end());
    out.push_back(monos);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Report::failed() const {
  return std::any_of(lines.begin(), lines.end(),
                     [](const ReportLine& l) { return l.status == "FAIL" || l.status == "ERROR"; });
}

Json Report::to_json() const {
  Json j;
  j["entry"] = entry;
  j["checks"] = Json::array();
  for (const auto& l : lines) {
    Json x;
    x["field"] = l.field;
    x["status"] = l.status;
    x["computed"] = l.computed;
    if (!l.expected.is_null()) x["expected"] = l.expected;
    if (!l.note.empty()) x["note"] = l.note;
    j["checks"].push_back(x);
  }
  j["result"] = failed() ? "FAIL" : "PASS";
  return j;
}

namespace {

std::vector<std::string> shape_text(const CoxPresentation& c) {
  std::vector<std::string> out;
  auto mono = [&](const IntVec& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) s += c.variables[i] + (e[i] == 1 ? "" : "^" + e[i].str());
    return s;
  };
  for (const auto& t : c.relations) out.push_back(mono(t.zero) + " + " + mono(t.infinity) + " + " + mono(t.third));
  return out;
}

Json rational_vec(const RatVec& v) { return tfano::to_json(v); }

}  // namespace

Report report(const CatalogEntry& e, const std::optional<std::string>& fd_over, const std::optional<std::string>& dp_over) {
  Report rep;
  rep.entry = e.name;
  const Json ex = e.meta.value("expected", Json::object());
  auto expected = [&](const std::string& key) -> Json {
    if (!ex.contains(key)) return Json();
    return ex[key].is_object() && ex[key].contains("value") ? ex[key]["value"] : ex[key];
  };
  auto source = [&](const std::string& key) -> std::string {
    if (ex.contains(key) && ex[key].is_object() && ex[key].contains("source")) return ex[key]["source"].get<std::string>();
    return "";
  };
  auto line = [&](const std::string& field, Json computed, bool match) {
    Json x = expected(field);
    ReportLine l{field, x.is_null() ? "INFO" : (match ? "PASS" : "FAIL"), computed, x, source(field)};
    rep.lines.push_back(l);
  };
  auto guarded = [&](const std::string& field, auto&& f) {
    try {
      f();
    } catch (const std::exception& err) {
      rep.lines.push_back({field, "ERROR", Json(err.what()), expected(field), source(field)});
    }
  };

  auto fpath = fd_over ? fd_over : e.fdivisor_path();
  auto dpath = dp_over ? dp_over : e.divpolytope_path();
  if (!fpath) {
    rep.lines.push_back({"data", "INFO", Json("no f-divisor shipped; supply one with --fdivisor"), Json(),
                         e.meta.value("note", "")});
    return rep;
  }
  FDivisor s = fdivisor_from_json(read_json_file(*fpath));
  auto vr = validate(s);
  rep.lines.push_back({"valid", vr.valid ? "PASS" : "FAIL", vr.valid, true, ""});
  if (!vr.valid) return rep;
  std::optional<DivisorialPolytope> psi;
  if (dpath) psi = divpolytope_from_json(read_json_file(*dpath));

  guarded("smooth", [&] {
    bool sm = smoothness(s).smooth;
    Json x = expected("smooth");
    line("smooth", sm, x.is_null() || x.get<bool>() == sm);
  });
  guarded("picard_rank", [&] {
    int r = picard_rank(s);
    auto cg = class_group(s);
    if (static_cast<std::size_t>(r) != cg.free_rank || !cg.torsion.empty())
      throw Error(ErrorCode::InconsistentInput, "rank formula and class group disagree");
    Json x = expected("picard_rank");
    line("picard_rank", r, x.is_null() || x.get<int>() == r);
  });
  guarded("cox", [&] {
    auto cox = cox_ring(s);
    std::size_t nt = 0, ns = 0;
    for (const auto& v : cox.variables) (v[0] == 'T' ? nt : ns)++;
    Json computed = {{"ring", to_text(cox)}, {"relations", shape_text(cox)}, {"T", nt}, {"S", ns},
                     {"grading", tfano::to_json(cox.grading)}, {"homogeneous", homogeneous(cox)}};
    Json x = expected("cox");
    bool ok = homogeneous(cox);
    if (!x.is_null()) {
      auto want = x["relations"].get<std::vector<std::string>>();
      ok = ok && relation_shapes(want) == relation_shapes(shape_text(cox));
      if (x.contains("T")) ok = ok && x["T"].get<std::size_t>() == nt;
      if (x.contains("S")) ok = ok && x["S"].get<std::size_t>() == ns;
      if (x.contains("grading")) ok = ok && grading_equivalent(cox.grading, matrix_from_json(x["grading"], "/expected/cox/grading"));
    }
    line("cox", computed, ok);
  });
  guarded("symmetric", [&] {
    bool sym = is_symmetric(s);
    Json x = expected("symmetric");
    line("symmetric", sym, x.is_null() || x.get<bool>() == sym);
  });
  if (psi) {
    guarded("ample", [&] {
      auto a = check_ample_correspondence(*psi, s);
      rep.lines.push_back({"ample", a.ok ? "PASS" : "FAIL", a.ok, true, a.ok ? "" : a.problems.front()});
    });
    guarded("anticanonical", [&] {
      auto a = anticanonical_check(*psi, s);
      Json c = Json();
      if (a) {
        c = Json::object();
        for (const auto& [p, v] : *a)
          if (v != 0) c[p.label()] = v.convert_to<long long>();
      }
      Json x = expected("anticanonical");
      line("anticanonical", c, x.is_null() ? !c.is_null() : x == c);
    });
    guarded("volume", [&] {
      Rational v = volume(*psi);
      Json x = expected("volume");
      line("volume", to_string(v), x.is_null() || parse_rational(x.get<std::string>()) == v);
    });
    guarded("fano_degree", [&] {
      Integer d = fano_degree(*psi);
      Json x = expected("fano_degree");
      line("fano_degree", d.convert_to<long long>(), x.is_null() || Integer(x.get<long long>()) == d);
    });
    guarded("sections", [&] {
      Integer h = total_sections(*psi);
      Integer n = lattice_count(class_of_divpolytope(*psi));
      if (h != n) throw Error(ErrorCode::InconsistentInput, "fiber count and virtual count disagree");
      Json x = expected("sections");
      line("sections", h.convert_to<long long>(), x.is_null() || Integer(x.get<long long>()) == h);
    });
    guarded("futaki", [&] {
      RatVec g = futaki_general(*psi);
      RatVec f = futaki_fano(*psi, s);
      if (g != f) throw Error(ErrorCode::InconsistentInput, "general " + to_string(g) + " and Fano " + to_string(f) + " forms disagree");
      Json x = expected("futaki");
      line("futaki", rational_vec(f), x.is_null() || point_from_json(x, "/expected/futaki") == f);
    });
    guarded("ke", [&] {
      if (!smoothness(s).smooth) {
        rep.lines.push_back({"ke", "INFO", Json("not applicable"), expected("ke"), "the criteria need a smooth variety"});
        return;
      }
      auto k = ke_status(s, *psi);
      Json x = expected("ke");
      std::string got = to_string(k.status);
      std::string want = x.is_null() ? "" : x.get<std::string>();
      ReportLine l{"ke", "PASS", got, x, source("ke") + (source("ke").empty() ? "" : "; ") + k.reason};
      if (want.empty()) l.status = "INFO";
      else if (want == "?") l.status = got == "unknown" ? "PASS" : "INFO";
      else if (got == want) l.status = "PASS";
      else if (got == "unknown" && want == "yes") l.status = "UNDECIDED";  // the criteria are only sufficient
      else l.status = "FAIL";
      if (k.criterion) l.computed = got + " (criterion " + std::to_string(k.criterion) + ")";
      rep.lines.push_back(l);
    });
  }
  if (auto rf = e.reference_path("fan"); rf && !fd_over) {
    guarded("downgrade_fan", [&] {
      auto tf = two_slice_fan(s);
      Fan ref = fan_from_json(read_json_file(*rf), s.rank() + 1, "/reference_fan");
      std::set<Cone> a(tf.fan.maximal().begin(), tf.fan.maximal().end()), b(ref.maximal().begin(), ref.maximal().end());
      rep.lines.push_back({"downgrade_fan", a == b ? "PASS" : "FAIL", tfano::to_json(tf.fan), tfano::to_json(ref), ""});
      if (auto rp = e.reference_path("polytope")) {
        auto p = fan_to_reflexive_polytope(tf.fan);
        Polyhedron want = polyhedron_from_json(read_json_file(*rp), s.rank() + 1, "/reference_polytope");
        bool ok = p && lattice_equivalent(*p, want).has_value();
        rep.lines.push_back({"reflexive_polytope", ok ? "PASS" : "FAIL", p ? tfano::to_json(*p) : Json(),
                             tfano::to_json(want), e.meta["references"].value("grdb_id", "")});
      }
    });
  }
  return rep;
}

}  // namespace tfano
