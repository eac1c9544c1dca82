#include "cmcb/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmcb/config.hpp"
#include "cmcb/mesh.hpp"
#include "cmcb/oracles.hpp"
#include "cmcb/parse.hpp"
#include "cmcb/report.hpp"
#include "cmcb/structure.hpp"

namespace cmcb {

namespace {

struct Common {
  std::map<std::string, std::string> params;  // flag name -> text
  std::string format = "table";
  std::string out_path;
  std::string config_path;
};

void add_common(CLI::App* sub, Common& c) {
  for (const char* key : {"I", "r0", "K0", "H0", "Cs", "A1", "c"}) {
    sub->add_option_function<std::string>(
        std::string("--") + key, [&c, key](const std::string& v) { c.params[key] = v; },
        std::string("override ") + key);
  }
  sub->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--out", c.out_path, "write the report to this file");
  sub->add_option("--config", c.config_path,
                  std::string("YAML config (default: $") + kConfigEnv + ")");
}

Config resolve(const Common& c, const std::string& extra_file = {}) {
  Config cfg;
  std::string path = c.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
  }
  if (!path.empty()) cfg = load_config(path, cfg);
  if (!extra_file.empty()) cfg = load_config(extra_file, cfg);
  for (const auto& [key, value] : c.params) {
    set_param(cfg.params, key, value);
    cfg.params_given.insert(key);
  }
  return cfg;
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) throw InputError("cannot write '" + c.out_path + "'");
  file << text;
}

struct Observed {
  std::string area, diameter, extrinsic, H, index;
  bool noncompact = false;
  bool disconnected = false;
  bool any() const {
    return !area.empty() || !diameter.empty() || !extrinsic.empty() || !H.empty() ||
           !index.empty() || noncompact || disconnected;
  }
};

int cmd_bounds(const Common& c, const std::string& genus_text, const Observed& obs,
               std::ostream& out) {
  Config cfg = resolve(c);
  if (!genus_text.empty()) cfg.genus = parse_integer(genus_text, "--g");
  if (!cfg.genus && cfg.observed) cfg.genus = cfg.observed->genus;
  if (!cfg.genus) throw InputError("bounds: --g is required");
  std::optional<SurfaceSummary> summary = cfg.observed;
  if (obs.any()) {
    SurfaceSummary s = summary.value_or(SurfaceSummary{});
    s.compact = !obs.noncompact;
    s.connected = !obs.disconnected;
    if (!s.compact) {
      s.area = s.diameter = std::numeric_limits<double>::infinity();
    }
    if (!obs.area.empty()) s.area = parse_double(obs.area, "--area");
    if (!obs.diameter.empty()) s.diameter = parse_double(obs.diameter, "--diameter");
    if (!obs.extrinsic.empty()) s.extrinsic_diameter = parse_double(obs.extrinsic, "--extrinsic-diameter");
    if (!obs.H.empty()) s.H = parse_double(obs.H, "--H");
    if (!obs.index.empty()) s.index = parse_integer(obs.index, "--index");
    summary = s;
  }
  BoundsReport report;
  if (summary) {
    summary->genus = *cfg.genus;
    report = check_surface(*summary, cfg.params);
  } else {
    report = bounds_report(cfg.params, *cfg.genus);
  }
  std::ostringstream text;
  if (c.format == "json") text << to_json(report) << '\n';
  else write_table(text, report);
  emit(c, out, text.str());
  return report.exit_code();
}

int cmd_mesh_check(const Common& c, const std::string& path, std::ostream& out) {
  Config cfg = resolve(c);
  std::vector<std::string> warnings;
  const mesh::TriangulatedSurface surface = mesh::read_mesh(path, &warnings);
  mesh::MeshSummary ms = mesh::summarize(surface);
  ms.warnings.insert(ms.warnings.begin(), warnings.begin(), warnings.end());

  // flat ambient: K0 = 0; I and H0 default to what the mesh shows
  if (!cfg.params_given.count("K0")) cfg.params.K0 = 0;
  if (!cfg.params_given.count("I")) cfg.params.I = ms.summary.index;
  if (!cfg.params_given.count("H0")) cfg.params.H0 = std::max(1.0, ms.summary.H);

  BoundsReport report = check_surface(ms.summary, cfg.params);
  report.advisory = ms.non_cmc;
  for (const auto& w : ms.warnings) report.notes.push_back(w);

  std::ostringstream text;
  if (c.format == "json") {
    nlohmann::json j;
    j["mesh"] = nlohmann::json::parse(mesh::to_json(ms));
    j["bounds"] = nlohmann::json::parse(to_json(report));
    text << j.dump(2) << '\n';
  } else {
    const auto& s = ms.summary;
    text << "mesh: " << path << "\n  V=" << ms.euler.V << " E=" << ms.euler.E << " F=" << ms.euler.F
         << " chi=" << ms.euler.chi << " genus=" << s.genus << "\n  area=" << s.area
         << " diameter=" << s.diameter << " extrinsic_diameter=" << s.extrinsic_diameter.value_or(0)
         << "\n  mean|H|=" << ms.H_mean << " stddev/mean=" << ms.H_rel_std
         << (ms.non_cmc ? " (not CMC)" : "") << "\n  index=" << ms.spectrum.index
         << " nullity=" << ms.spectrum.nullity << " lowest eigenvalue=" << ms.spectrum.eigenvalues(0)
         << "\n\n";
    write_table(text, report);
  }
  emit(c, out, text.str());
  return report.exit_code();
}

int cmd_structure_check(const Common& c, const std::string& path, std::ostream& out) {
  Config cfg = resolve(c, path);
  // flags beat the structure file
  for (const auto& [key, value] : c.params) set_param(cfg.params, key, value);
  if (!cfg.structure) throw InputError(path + ": missing 'structure' section");
  const StructureReport report = validate_structure(*cfg.structure, cfg.params);
  std::ostringstream text;
  if (c.format == "json") text << to_json(report, *cfg.structure, cfg.params) << '\n';
  else write_table(text, report);
  emit(c, out, text.str());
  return report.exit_code();
}

int cmd_verify(const Common& c, const oracle::SuiteOptions& options, std::ostream& out) {
  const auto reports = oracle::run_verification_suite(options);
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.pass ? 0 : 1;
  std::ostringstream text;
  if (c.format == "json") {
    text << oracle::to_json(reports) << '\n';
  } else {
    for (const auto& r : reports) {
      if (!r.pass) {
        text << "FAIL " << r.id << " closed=" << r.closed_form << " oracle=" << r.oracle
             << " err=" << (r.relative ? r.rel_error : r.abs_error) << " tol=" << r.tolerance
             << (r.inconclusive ? " (inconclusive)" : "") << '\n';
      }
    }
    text << reports.size() - failed << " of " << reports.size() << " oracle cases pass\n";
  }
  emit(c, out, text.str());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Area, diameter and genus bounds for finite-index CMC surfaces", "cmcb"};
  app.require_subcommand(1);

  Common common;
  std::string genus_text, mesh_path, structure_path;
  Observed obs;
  oracle::SuiteOptions suite;

  auto* bounds = app.add_subcommand("bounds", "evaluate constants and bounds, optionally against an observed surface");
  add_common(bounds, common);
  bounds->add_option("--g", genus_text, "genus (of the orientable cover)");
  bounds->add_option("--area", obs.area, "observed area");
  bounds->add_option("--diameter", obs.diameter, "observed intrinsic diameter");
  bounds->add_option("--extrinsic-diameter", obs.extrinsic, "observed extrinsic diameter");
  bounds->add_option("--H", obs.H, "observed mean curvature");
  bounds->add_option("--index", obs.index, "observed index");
  bounds->add_flag("--noncompact", obs.noncompact, "the observed surface is not compact");
  bounds->add_flag("--disconnected", obs.disconnected, "the observed surface is not connected");

  auto* mesh_check = app.add_subcommand("mesh-check", "summarize a closed mesh and check it against the bounds");
  add_common(mesh_check, common);
  mesh_check->add_option("mesh", mesh_path, "OFF or OBJ file")->required();

  auto* structure = app.add_subcommand("structure-check", "validate concentration-region data");
  add_common(structure, common);
  structure->add_option("file", structure_path, "YAML document with a 'structure' section")->required();

  auto* verify = app.add_subcommand("verify", "run the oracle suite");
  add_common(verify, common);
  verify->add_option("--seed", suite.seed, "seed for the random curves");
  verify->add_option("--curves", suite.random_curves, "number of random curves")->check(CLI::Range(0, 100000));
  common.format = "table";

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*bounds) return cmd_bounds(common, genus_text, obs, out);
    if (*mesh_check) return cmd_mesh_check(common, mesh_path, out);
    if (*structure) return cmd_structure_check(common, structure_path, out);
    if (*verify) {
      if (!verify->count("--format")) common.format = "json";
      return cmd_verify(common, suite, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cmcb
