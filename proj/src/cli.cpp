#include "logkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "logkit/abelian.hpp"
#include "logkit/coset_enum.hpp"
#include "logkit/diagram.hpp"
#include "logkit/link_graph.hpp"
#include "logkit/log_graph.hpp"
#include "logkit/presentation.hpp"
#include "logkit/search.hpp"

namespace logkit {

namespace {

constexpr const char* kExceededWording = "exceeded limit (consistent with infinite)";

struct PowerFlag {
  std::string gen;
  int exponent;
};

PowerFlag parse_power(const std::string& spec) {
  size_t colon = spec.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
    fail(Errc::invalid_parameter, "--power expects generator:exponent, got " + spec);
  PowerFlag f;
  f.gen = spec.substr(0, colon);
  try {
    f.exponent = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    fail(Errc::invalid_parameter, "--power exponent is not a number in " + spec);
  }
  return f;
}

LabeledOrientedGraph load_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_parameter, "cannot open " + path);
  return parse_log(in);
}

Presentation presentation_for(const std::string& path, const std::vector<std::string>& powers) {
  Presentation p = log_presentation(load_log(path));
  for (const std::string& spec : powers) {
    PowerFlag f = parse_power(spec);
    p = with_power(p, f.gen, f.exponent);
  }
  return p;
}

long default_max_cosets() {
  if (const char* env = std::getenv("LOGKIT_MAX_COSETS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << "\n"; }

std::ostream& open_output(std::ofstream& file, const std::string& path, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) fail(Errc::invalid_parameter, "cannot write " + path);
  return file;
}

struct OrderOptions {
  std::vector<std::string> powers;
  long max_cosets = 0;
  std::uint64_t max_steps = 2'000'000'000;
  std::string strategy = "hlt";
  bool json = false;
  bool strict = false;
  bool table = false;
};

int run_order(const Presentation& p, const OrderOptions& opt, std::ostream& out) {
  EnumerationLimits limits;
  limits.max_cosets = opt.max_cosets > 0 ? opt.max_cosets : default_max_cosets();
  limits.max_steps = opt.max_steps;
  Strategy strat = opt.strategy == "felsch" ? Strategy::Felsch : Strategy::Hlt;
  EnumerationResult r = todd_coxeter(p, limits, strat);
  if (opt.json) {
    nlohmann::json j{{"max_cosets", limits.max_cosets},
                     {"strategy", opt.strategy},
                     {"cosets_defined", r.stats.cosets_defined},
                     {"collapses", r.stats.collapses}};
    if (r.finite()) {
      j["outcome"] = "finite";
      j["order"] = r.order;
      if (opt.table) j["table"] = to_json(r.table);
    } else {
      j["outcome"] = "exceeded";
      j["wording"] = "consistent with infinite";
    }
    emit(out, j);
  } else if (r.finite()) {
    out << "order: " << r.order << "\n";
    if (opt.table) out << dump_plain(r.table);
  } else {
    out << kExceededWording << "\n";
  }
  return (opt.strict && !r.finite()) ? 1 : 0;
}

nlohmann::json curvature_json(const CurvatureReport& rep) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : rep.per_vertex) {
    nlohmann::json line{{"vertex", v.vertex},
                        {"valency", v.valency},
                        {"interior", v.interior},
                        {"power_faces", v.power_faces},
                        {"kappa", v.kappa.str()}};
    if (v.kappa_tilde) line["kappa_tilde"] = v.kappa_tilde->str();
    vertices.push_back(line);
  }
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : rep.per_face)
    faces.push_back({{"face", f.face}, {"sides", f.sides}, {"kappa", f.kappa.str()}});
  return {{"vertices", vertices},
          {"faces", faces},
          {"vertex_total", rep.vertex_total.str()},
          {"face_total", rep.face_total.str()},
          {"total", rep.total.str()},
          {"chi", rep.chi},
          {"gauss_bonnet_holds", rep.gauss_bonnet_holds}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"logkit: labeled oriented graphs, their group presentations, and quotients"};
  app.require_subcommand(1);

  // check
  std::string check_file;
  bool check_json = false, check_strict = false;
  auto* check = app.add_subcommand("check", "validate a LOG and report the hypothesis verdict");
  check->add_option("file", check_file, "LOG text file")->required();
  check->add_flag("--json", check_json, "machine-readable report");
  check->add_flag("--strict", check_strict, "exit 1 when the hypotheses fail");

  // present
  std::string present_file, present_format = "plain";
  std::vector<std::string> present_powers;
  auto* present = app.add_subcommand("present", "print the group presentation");
  present->add_option("file", present_file, "LOG text file")->required();
  present->add_option("--format", present_format, "plain or algebra")
      ->check(CLI::IsMember({"plain", "algebra"}));
  present->add_option("--power", present_powers, "append a power relator generator:exponent");

  // order
  std::string order_file;
  OrderOptions order_opt;
  auto* order = app.add_subcommand("order", "Todd-Coxeter coset enumeration");
  order->add_option("file", order_file, "LOG text file")->required();
  order->add_option("--power", order_opt.powers, "append a power relator generator:exponent");
  order->add_option("--max-cosets", order_opt.max_cosets,
                    "coset ceiling (default LOGKIT_MAX_COSETS or 100000)");
  order->add_option("--max-steps", order_opt.max_steps, "step budget");
  order->add_option("--strategy", order_opt.strategy, "hlt or felsch")
      ->check(CLI::IsMember({"hlt", "felsch"}));
  order->add_flag("--table", order_opt.table, "dump the closed coset table");
  order->add_flag("--json", order_opt.json, "machine-readable report");
  order->add_flag("--strict", order_opt.strict, "exit 1 when the enumeration exceeds its limits");

  // abelianize
  std::string ab_file;
  std::vector<std::string> ab_powers;
  bool ab_json = false;
  auto* ab = app.add_subcommand("abelianize", "abelian invariants via Smith normal form");
  ab->add_option("file", ab_file, "LOG text file")->required();
  ab->add_option("--power", ab_powers, "append a power relator generator:exponent");
  ab->add_flag("--json", ab_json, "machine-readable report");

  // kernel
  std::string kernel_file;
  std::vector<std::string> kernel_powers;
  int kernel_n = 0;
  bool kernel_order = false, kernel_json = false;
  OrderOptions kernel_opt;
  auto* kernel = app.add_subcommand(
      "kernel", "Reidemeister-Schreier presentation of the kernel of the map onto Z_n");
  kernel->add_option("file", kernel_file, "LOG text file")->required();
  kernel->add_option("--n", kernel_n, "index of the cyclic quotient")->required();
  kernel->add_option("--power", kernel_powers, "append a power relator generator:exponent");
  kernel->add_flag("--order", kernel_order, "also enumerate the kernel's order");
  kernel->add_option("--max-cosets", kernel_opt.max_cosets, "coset ceiling for --order");
  kernel->add_option("--strategy", kernel_opt.strategy, "hlt or felsch")
      ->check(CLI::IsMember({"hlt", "felsch"}));
  kernel->add_flag("--json", kernel_json, "machine-readable report");

  // family
  auto* family = app.add_subcommand("family", "generate named LOG families");
  family->require_subcommand(1);
  int family_n = 0;
  std::string family_out;
  auto* cyclic = family->add_subcommand(
      "cyclic-shift", "interval on 0..n-1 with the edge at i labeled (i+3) mod n");
  cyclic->add_option("--n", family_n, "number of vertices")->required();
  cyclic->add_option("-o,--output", family_out, "output file (default stdout)");

  // sphere
  auto* sphere = app.add_subcommand("sphere", "emit canonical spherical diagrams as JSON");
  sphere->require_subcommand(1);
  std::string sp_gen, sp_out;
  int sp_n = 0;
  auto* sp_power = sphere->add_subcommand("power", "two mirror faces reading g^n");
  sp_power->add_option("--gen", sp_gen, "generator label")->required();
  sp_power->add_option("--n", sp_n, "exponent")->required();
  sp_power->add_option("-o,--output", sp_out, "output file (default stdout)");
  std::string se_edge, se_out;
  int se_n = 0;
  auto* sp_edge = sphere->add_subcommand("edge", "power cells a^n, c^n and a square gallery");
  sp_edge->add_option("--edge", se_edge, "edge as source|label|target")->required();
  sp_edge->add_option("--n", se_n, "exponent")->required();
  sp_edge->add_option("-o,--output", se_out, "output file (default stdout)");

  // audit-diagram
  std::string audit_file, audit_log;
  std::vector<std::string> audit_powers;
  bool audit_json = false, audit_strict = false;
  auto* audit = app.add_subcommand("audit-diagram",
                                   "validate a diagram and audit its curvature exactly");
  audit->add_option("file", audit_file, "diagram JSON file")->required();
  audit->add_option("--log", audit_log, "LOG file providing the presentation")->required();
  audit->add_option("--power", audit_powers, "append a power relator generator:exponent");
  audit->add_flag("--json", audit_json, "machine-readable report");
  audit->add_flag("--strict", audit_strict, "exit 1 when invalid or curvature is off");

  // search
  int search_max = 0;
  bool search_json = false;
  auto* search = app.add_subcommand(
      "search",
      "exhaustive sweep over small LOIs with the link-girth cross-check. Vertex renaming "
      "is quotiented out by fixing the path 0..k-1, and each labeling is counted once per "
      "orbit of the path-reversal symmetry; multiply symmetric counts by two (less the "
      "self-mirrored labelings) to recover raw labeling counts");
  search->add_option("--max-vertices", search_max, "largest path size (<= 7)")->required();
  search->add_flag("--json", search_json, "machine-readable report");

  std::vector<const char*> argv;
  argv.push_back("logkit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*check) {
      LabeledOrientedGraph g = load_log(check_file);
      ValidationReport vr = validate(g);
      Verdict v = verdict(g);
      if (check_json) {
        nlohmann::json j = to_json(v);
        j["compressed"] = vr.compressed;
        j["injective"] = vr.injective;
        j["shape"] = to_string(vr.shape);
        j["connected"] = vr.connected;
        emit(out, j);
      } else {
        out << "compressed: " << (vr.compressed ? "yes" : "no") << "\n";
        out << "injective: " << (vr.injective ? "yes" : "no") << "\n";
        out << "shape: " << to_string(vr.shape) << "\n";
        out << "npc: " << (v.npc ? "yes" : "no") << "\n";
        out << "theorem2_applicable: " << (v.theorem2_applicable ? "yes" : "no") << "\n";
        for (const auto& r : v.reasons) out << "reason: " << r.clause << " " << r.witness << "\n";
      }
      return (check_strict && !v.theorem2_applicable) ? 1 : 0;
    }
    if (*present) {
      Presentation p = presentation_for(present_file, present_powers);
      out << (present_format == "algebra" ? to_algebra(p) : to_plain(p));
      return 0;
    }
    if (*order) {
      return run_order(presentation_for(order_file, order_opt.powers), order_opt, out);
    }
    if (*ab) {
      AbelianInvariants inv = abelianization(presentation_for(ab_file, ab_powers));
      if (ab_json) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const Int& d : inv.torsion) torsion.push_back(d.str());
        emit(out, {{"free_rank", inv.free_rank}, {"torsion", torsion}});
      } else {
        out << "abelianization: " << to_string(inv) << "\n";
      }
      return 0;
    }
    if (*kernel) {
      Presentation p = presentation_for(kernel_file, kernel_powers);
      Presentation h = reidemeister_schreier_kernel(p, kernel_n);
      if (kernel_json) {
        nlohmann::json rels = nlohmann::json::array();
        for (const Word& r : h.relators()) rels.push_back(to_string(r));
        nlohmann::json j{{"generators", h.generators()}, {"relators", rels}};
        if (kernel_order) {
          EnumerationLimits limits;
          limits.max_cosets = kernel_opt.max_cosets > 0 ? kernel_opt.max_cosets
                                                        : default_max_cosets();
          EnumerationResult r = todd_coxeter(
              h, limits,
              kernel_opt.strategy == "felsch" ? Strategy::Felsch : Strategy::Hlt);
          if (r.finite())
            j["order"] = r.order;
          else
            j["order"] = "exceeded";
        }
        emit(out, j);
      } else {
        out << to_plain(h);
        if (kernel_order) {
          kernel_opt.json = false;
          return run_order(h, kernel_opt, out);
        }
      }
      return 0;
    }
    if (*family) {
      std::ofstream file;
      std::ostream& o = open_output(file, family_out, out);
      o << serialize(cyclic_shift_family(family_n));
      return 0;
    }
    if (*sphere) {
      if (*sp_power) {
        std::ofstream file;
        std::ostream& o = open_output(file, sp_out, out);
        o << to_json(canonical_power_sphere(sp_gen, sp_n)).dump() << "\n";
        return 0;
      }
      std::istringstream edge_in(se_edge + "\n");
      LabeledOrientedGraph g = parse_log(edge_in);
      std::ofstream file;
      std::ostream& o = open_output(file, se_out, out);
      o << to_json(canonical_edge_sphere(g.edges().front(), se_n)).dump() << "\n";
      return 0;
    }
    if (*audit) {
      std::ifstream in(audit_file);
      if (!in) fail(Errc::invalid_parameter, "cannot open " + audit_file);
      nlohmann::json j = nlohmann::json::parse(in);
      SurfaceDiagram s = diagram_from_json(j);
      Presentation p = presentation_for(audit_log, audit_powers);
      DiagramValidity dv = validate_diagram(s, p);
      bool negative = !dv.ok;
      if (audit_json) {
        nlohmann::json rep{{"valid", dv.ok}, {"closed", dv.closed}, {"failures", dv.failures}};
        if (dv.ok) {
          CurvatureReport cr = curvature_report(s);
          rep["curvature"] = curvature_json(cr);
          negative = !cr.gauss_bonnet_holds;
        }
        emit(out, rep);
      } else {
        out << "valid: " << (dv.ok ? "yes" : "no") << "\n";
        for (const std::string& f : dv.failures) out << "failure: " << f << "\n";
        if (dv.ok) {
          int squares = 0, powers = 0;
          for (FaceClass c : dv.face_classes) {
            squares += c == FaceClass::Square;
            powers += c == FaceClass::Power;
          }
          CurvatureReport rep = curvature_report(s);
          out << "closed: " << (dv.closed ? "yes" : "no") << "\n";
          out << "faces: " << s.faces.size() << " (squares: " << squares
              << ", power cells: " << powers << ")\n";
          out << "chi: " << rep.chi << "\n";
          out << "total curvature: " << rep.total << "\n";
          out << "gauss_bonnet: " << (rep.gauss_bonnet_holds ? "yes" : "no") << "\n";
          for (const auto& v : rep.per_vertex) {
            out << "vertex " << v.vertex << ": valency " << v.valency << ", "
                << (v.interior ? "interior" : "boundary") << ", k=" << v.power_faces
                << ", kappa=" << v.kappa;
            if (v.kappa_tilde) out << ", kappa_tilde=" << *v.kappa_tilde;
            out << "\n";
          }
          negative = !rep.gauss_bonnet_holds;
        }
      }
      return (audit_strict && negative) ? 1 : 0;
    }
    if (*search) {
      SearchResult r = search_small_lois(search_max);
      if (search_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const SearchRow& row : r.rows)
          rows.push_back({{"vertices", row.vertices},
                          {"canonical", row.canonical},
                          {"compressed_injective", row.compressed_injective},
                          {"npc", row.npc},
                          {"theorem2_applicable", row.theorem2},
                          {"oracle_checked", row.oracle_checked},
                          {"oracle_disagreements", row.oracle_disagreements}});
        emit(out, {{"rows", rows}, {"consistent", r.consistent()}});
      } else {
        out << "vertices\tcanonical\tcompressed-injective\tnpc\ttheorem2\toracle-checked\t"
               "disagreements\n";
        for (const SearchRow& row : r.rows)
          out << row.vertices << "\t" << row.canonical << "\t" << row.compressed_injective
              << "\t" << row.npc << "\t" << row.theorem2 << "\t" << row.oracle_checked << "\t"
              << row.oracle_disagreements << "\n";
      }
      return r.consistent() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace logkit
