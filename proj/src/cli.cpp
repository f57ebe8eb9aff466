#include "tfano/cli.hpp"

#include "tfano/catalog.hpp"
#include "tfano/degeneration.hpp"
#include "tfano/invariants.hpp"
#include "tfano/svg.hpp"
#include "tfano/symmetry.hpp"
#include "tfano/virtual.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <set>
#include <sstream>

namespace tfano {

namespace {

struct Failure {
  Json body;
};

FDivisor load_fdivisor(const std::string& ref) { return fdivisor_from_json(read_json_file(resolve(ref, "fdivisor"))); }
DivisorialPolytope load_divpolytope(const std::string& ref) {
  return divpolytope_from_json(read_json_file(resolve(ref, "divpolytope")));
}

std::vector<MarkedPoint> parse_labels(const std::string& list) {
  std::vector<MarkedPoint> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(MarkedPoint::parse(item));
  if (out.empty()) throw Error(ErrorCode::Parse, "--add: empty label list");
  return out;
}

Json approx(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.convert_to<double>());
  return a;
}

Json points_json(const PointMap& m) {
  Json j = Json::object();
  for (const auto& [a, b] : m) j[a.label()] = b.label();
  return j;
}

Json witness_json(const Witness& w) {
  Json j;
  j["F"] = to_json(w.F);
  j["phi"] = points_json(w.phi);
  j["translations"] = Json::object();
  for (const auto& [p, v] : w.translations) j["translations"][p.label()] = to_json(v);
  if (!w.residual.empty()) j["residual"] = to_json(w.residual);
  if (w.caveat_non_maximal_torus) j["caveat"] = "torus may not be maximal";
  return j;
}

Json check_json(const SmoothnessCheck& c) {
  return {{"kind", c.kind}, {"tail", to_json(c.tail)}, {"detail", c.detail}, {"cone", to_json(c.cone)}, {"regular", c.regular}};
}

Json cox_json(const CoxPresentation& c) {
  Json rel = Json::array();
  for (const auto& t : c.relations)
    rel.push_back({{"point", t.point.label()}, {"coefficient", t.coefficient}, {"zero", to_json(t.zero)},
                   {"infinity", to_json(t.infinity)}, {"third", to_json(t.third)}});
  return {{"ring", to_text(c)}, {"variables", c.variables}, {"origin", c.origin}, {"relations", rel},
          {"grading", to_json(c.grading)}, {"homogeneous", homogeneous(c)}};
}

std::optional<Polyhedron> lattice_polytope_from_json(const Json& j, const std::string& where) {
  const Json& v = j.contains("vertices") ? j["vertices"] : j;
  if (!v.is_array() || v.empty() || !v[0].is_array()) throw Error(ErrorCode::Parse, where + ": expected a vertex list");
  return polyhedron_from_json(j.is_array() ? Json{{"vertices", j}} : j, v[0].size(), where);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano threefolds with 2-torus action: f-divisors, divisorial polytopes and their invariants", "tfano"};
  app.require_subcommand(1);
  bool pretty = false, use_approx = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--approx", use_approx, "add decimal approximations next to exact rationals");

  std::string fd, dp, file, method = "general", add, target, output, fd_over, dp_over, ref_fan, ref_poly;
  std::vector<long> at;
  bool all = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the f-divisor axioms");
  validate_cmd->add_option("fdivisor", fd, "f-divisor JSON or catalog:NAME")->required();
  auto* smooth_cmd = app.add_subcommand("smooth", "smoothness with the checked cones");
  smooth_cmd->add_option("fdivisor", fd)->required();
  auto* cg_cmd = app.add_subcommand("classgroup", "divisor class group and Picard rank");
  cg_cmd->add_option("fdivisor", fd)->required();
  auto* cox_cmd = app.add_subcommand("cox", "Cox ring presentation");
  cox_cmd->add_option("fdivisor", fd)->required();
  auto* ample_cmd = app.add_subcommand("ample-check", "does Ψ correspond to an ample divisor on X(S)");
  ample_cmd->add_option("fdivisor", fd)->required();
  ample_cmd->add_option("divpolytope", dp)->required();
  auto* anti_cmd = app.add_subcommand("anticanonical", "anticanonical coefficients a_P");
  anti_cmd->add_option("fdivisor", fd)->required();
  anti_cmd->add_option("divpolytope", dp)->required();
  auto* degree_cmd = app.add_subcommand("degree", "volume and Fano degree of Ψ");
  degree_cmd->add_option("divpolytope", dp)->required();
  auto* sections_cmd = app.add_subcommand("sections", "global sections h^0 and their fibers");
  sections_cmd->add_option("divpolytope", dp)->required();
  sections_cmd->add_option("--at", at, "only the weight space of this lattice point")->expected(1, -1);
  auto* futaki_cmd = app.add_subcommand("futaki", "Futaki character");
  futaki_cmd->add_option("files", file, "general: Ψ; fano: S then Ψ; toric: lattice polytope")->required();
  futaki_cmd->add_option("divpolytope", dp, "Ψ for --method fano");
  futaki_cmd->add_option("--method", method)->check(CLI::IsMember({"general", "fano", "toric"}));
  auto* sym_cmd = app.add_subcommand("symmetric", "automorphisms of S and the symmetry test");
  sym_cmd->add_option("fdivisor", fd)->required();
  auto* ke_cmd = app.add_subcommand("ke", "Kähler-Einstein verdict");
  ke_cmd->add_option("fdivisor", fd)->required();
  ke_cmd->add_option("divpolytope", dp)->required();
  auto* degen_cmd = app.add_subcommand("degenerate", "add slices to obtain a degeneration");
  degen_cmd->add_option("fdivisor", fd)->required();
  degen_cmd->add_option("divpolytope", dp)->required();
  degen_cmd->add_option("--add", add, "comma separated labels, e.g. 0,inf")->required();
  degen_cmd->add_option("--target", target, "label receiving the sum")->required();
  auto* down_cmd = app.add_subcommand("downgrade-fan", "fan and reflexive polytope of a two-slice f-divisor");
  down_cmd->add_option("fdivisor", fd)->required();
  down_cmd->add_option("--reference-fan", ref_fan);
  down_cmd->add_option("--reference-polytope", ref_poly);
  auto* report_cmd = app.add_subcommand("report", "compute every invariant of a catalog entry and compare");
  report_cmd->add_option("entry", file, "catalog:NAME or NAME");
  report_cmd->add_flag("--all", all, "every catalog entry");
  report_cmd->add_option("--fdivisor", fd_over, "user-supplied f-divisor for the entry");
  report_cmd->add_option("--divpolytope", dp_over, "user-supplied divisorial polytope for the entry");
  auto* svg_cmd = app.add_subcommand("render-svg", "SVG of the slices of S or of Ψ");
  svg_cmd->add_option("file", file, "f-divisor or divisorial polytope (catalog:NAME picks the f-divisor)")->required();
  svg_cmd->add_flag("--divpolytope", all, "render the divisorial polytope of a catalog entry");
  svg_cmd->add_option("-o,--output", output, "write to a file instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& j) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; };
  int status = 0;
  try {
    if (*validate_cmd) {
      auto r = validate(load_fdivisor(fd));
      Json checks = Json::array();
      for (const auto& c : r.entries) checks.push_back({{"check", c.check}, {"ok", c.ok}, {"detail", c.detail}});
      emit({{"valid", r.valid}, {"checks", checks}});
      if (!r.valid) status = 2;
    } else if (*smooth_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      auto r = smoothness(s);
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back(check_json(c));
      Json j{{"smooth", r.smooth}, {"checks", checks}};
      if (r.witness) j["witness"] = check_json(*r.witness);
      emit(j);
    } else if (*cg_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      auto c = class_group(s);
      Json dm = Json::array();
      for (const auto& d : c.degree_map) dm.push_back(to_json(d));
      Json tor = Json::array();
      for (const auto& t : c.torsion) tor.push_back(t.str());
      emit({{"generators", c.generators}, {"relation_matrix", to_json(c.relation_matrix)}, {"free_rank", c.free_rank},
            {"torsion", tor}, {"degree_map", dm}, {"picard_rank", picard_rank(s)}});
    } else if (*cox_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      emit(cox_json(cox_ring(s)));
    } else if (*ample_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      auto r = check_ample_correspondence(load_divpolytope(dp), s);
      emit({{"ample", r.ok}, {"problems", r.problems}});
    } else if (*anti_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      auto a = anticanonical_check(load_divpolytope(dp), s);
      Json j{{"anticanonical", a.has_value()}};
      if (a) {
        j["coefficients"] = Json::object();
        for (const auto& [p, v] : *a) j["coefficients"][p.label()] = v.str();
      }
      emit(j);
    } else if (*degree_cmd) {
      auto psi = load_divpolytope(dp);
      auto problems = well_formed_problems(psi);
      if (!problems.empty()) {
        Json pj = Json::array();
        for (const auto& p : problems) pj.push_back({{"check", p.check}, {"detail", p.detail}});
        throw Failure{{{"error", "Invalid"}, {"problems", pj}}};
      }
      Rational v = volume(psi);
      Json j{{"volume", to_json(v)}, {"degree", fano_degree(psi).str()}};
      if (use_approx) j["volume_approx"] = v.convert_to<double>();
      emit(j);
    } else if (*sections_cmd) {
      auto psi = load_divpolytope(dp);
      if (!at.empty()) {
        IntVec u(at.begin(), at.end());
        if (u.size() != psi.rank()) throw Error(ErrorCode::IncompatibleDimension, "--at needs " + std::to_string(psi.rank()) + " entries");
        emit({{"u", to_json(u)}, {"h0", section_dim(psi, u).str()}});
      } else {
        Integer total = total_sections(psi);
        Integer virt = lattice_count(class_of_divpolytope(psi));
        emit({{"h0", total.str()}, {"virtual_count", virt.str()}, {"agree", total == virt}});
      }
    } else if (*futaki_cmd) {
      RatVec f;
      if (method == "general") {
        f = futaki_general(load_divpolytope(file));
      } else if (method == "fano") {
        if (dp.empty()) throw Error(ErrorCode::Parse, "--method fano needs an f-divisor and a divisorial polytope");
        auto s = load_fdivisor(file);
        require_valid(s);
        f = futaki_fano(load_divpolytope(dp), s);
      } else {
        auto p = lattice_polytope_from_json(read_json_file(file), file);
        f = futaki_toric(*p);
      }
      Json j{{"method", method}, {"futaki", to_json(f)}, {"vanishes", is_zero(f)}};
      if (use_approx) j["futaki_approx"] = approx(f);
      emit(j);
    } else if (*sym_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      auto g = automorphism_group(s);
      Json el = Json::array();
      for (const auto& w : g) el.push_back(witness_json(w));
      emit({{"symmetric", is_symmetric(g, s.rank())}, {"order", g.size()}, {"elements", el}});
    } else if (*ke_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      auto k = ke_status(s, load_divpolytope(dp));
      Json j{{"ke", to_string(k.status)}, {"reason", k.reason}, {"futaki", to_json(k.futaki)}, {"symmetric", k.symmetric}};
      if (k.criterion) j["criterion"] = k.criterion;
      emit(j);
    } else if (*degen_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      auto psi = load_divpolytope(dp);
      auto points = parse_labels(add);
      auto tgt = MarkedPoint::parse(target);
      auto rep = check_admissible(decompose(psi, points));
      if (!rep.ok) throw Failure{{{"error", "NotAdmissible"}, {"violations", rep.violations}}};
      auto d = add_slices(s, psi, points, tgt);
      Json j{{"admissible", true}, {"fdivisor", to_json(d.s)}, {"divpolytope", to_json(d.psi)}};
      if (d.s.support().size() <= 2) {
        PointMap used;
        auto r = relabel_two_slices(d.s, tgt, &used);
        j["relabeled"] = {{"points", points_json(used)}, {"fdivisor", to_json(r)}};
      }
      emit(j);
    } else if (*down_cmd) {
      auto s = load_fdivisor(fd);
      require_valid(s);
      if (is_catalog_ref(fd)) {
        auto e = catalog_entry(fd.substr(8));
        if (ref_fan.empty()) ref_fan = e.reference_path("fan").value_or("");
        if (ref_poly.empty()) ref_poly = e.reference_path("polytope").value_or("");
      }
      auto tf = two_slice_fan(s);
      Json up = Json::array(), lo = Json::array();
      for (const auto& c : tf.upper) up.push_back(to_json(c));
      for (const auto& c : tf.lower) lo.push_back(to_json(c));
      Json j{{"upper", up}, {"lower", lo}, {"fan", to_json(tf.fan)}};
      auto p = fan_to_reflexive_polytope(tf.fan);
      j["reflexive"] = p.has_value();
      if (p) j["polytope"] = to_json(*p);
      if (!ref_fan.empty()) {
        Fan ref = fan_from_json(read_json_file(ref_fan), s.rank() + 1, ref_fan);
        std::set<Cone> a(tf.fan.maximal().begin(), tf.fan.maximal().end()), b(ref.maximal().begin(), ref.maximal().end());
        j["fan_matches_reference"] = a == b;
        if (a != b) status = 2;
      }
      if (!ref_poly.empty()) {
        Polyhedron want = polyhedron_from_json(read_json_file(ref_poly), s.rank() + 1, ref_poly);
        auto eq = p ? lattice_equivalent(*p, want) : std::nullopt;
        j["polytope_equivalent"] = eq.has_value();
        if (eq) j["equivalence"] = to_json(*eq);
        else status = 2;
      }
      emit(j);
    } else if (*report_cmd) {
      std::vector<std::string> names;
      if (all) names = catalog_names();
      else if (!file.empty()) names.push_back(is_catalog_ref(file) ? file.substr(8) : file);
      else throw Error(ErrorCode::Parse, "report needs an entry or --all");
      Json list = Json::array();
      for (const auto& n : names) {
        auto r = report(catalog_entry(n), fd_over.empty() ? std::nullopt : std::optional(fd_over),
                        dp_over.empty() ? std::nullopt : std::optional(dp_over));
        if (r.failed()) status = 2;
        list.push_back(r.to_json());
      }
      emit(all ? list : list[0]);
    } else if (*svg_cmd) {
      std::string text;
      if (is_catalog_ref(file)) {
        text = all ? render_svg(load_divpolytope(file)) : render_svg(load_fdivisor(file));
      } else {
        Json j = read_json_file(file);
        text = j.contains("pieces") ? render_svg(divpolytope_from_json(j)) : render_svg(fdivisor_from_json(j));
      }
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output);
        if (!(f << text)) throw Error(ErrorCode::Parse, "cannot write " + output);
        emit({{"written", output}});
      }
    }
  } catch (const Failure& f) {
    err << f.body.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    err << Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return e.code() == ErrorCode::InconsistentInput ? 1 : 2;
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return status;
}

}  // namespace tfano
