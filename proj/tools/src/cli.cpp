#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "config.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/json_value.hpp"
#include "fuzzy/matrix_io.hpp"
#include "fuzzy/regularize.hpp"
#include "fuzzy/verifier.hpp"

namespace fuzzy::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string config;
  std::string out = "out";
  int n = 0;
  int delta = -1;
  double threshold = -1.0;
  bool seedless = false;
  std::vector<std::string> formats;
  std::vector<std::string> inputs;
};

std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')
      s += c;
    else if (c == '\'')
      s += "_prime";
    else
      s += '_';
  }
  return s.empty() ? "matrix" : s;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + p.string());
  os << text;
}

JobConfig require_config(const Options& o) {
  if (o.config.empty()) throw ConfigError("--config is required for this subcommand");
  return load_config(o.config);
}

std::vector<std::string> formats_of(const Options& o, const JobConfig& c) {
  return o.formats.empty() ? c.outputs.formats : o.formats;
}

RenderOptions render_of(const Options& o, const JobConfig& c) {
  RenderOptions r = c.render;
  if (o.threshold >= 0) r.threshold = o.threshold;
  return r;
}

BuiltSpace build_from(const Options& o, const JobConfig& c, bool with_transforms) {
  BuiltSpace b;
  if (c.space)
    b = build_space(*c.space, o.n);
  else if (c.interpolation)
    b = build_vertex(*c.interpolation, o.n);
  else
    throw ConfigError("config needs a space or an interpolation section");
  if (with_transforms && !c.transforms.empty()) b = apply_transforms(std::move(b), c.transforms);
  return b;
}

// Matrix dumps and SVGs for the selected coordinates plus a metadata sidecar.
void emit(const Options& o, const JobConfig& c, const BuiltSpace& b, std::ostream& out) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  const auto formats = formats_of(o, c);
  const auto render = render_of(o, c);
  json files = json::array();
  for (int i = 0; i < b.space.dimension(); ++i) {
    const auto& name = b.space.names()[i];
    const auto& sel = c.outputs.coordinates;
    if (!sel.empty() && std::find(sel.begin(), sel.end(), name) == sel.end()) continue;
    const auto& m = b.space.coordinate(i);
    const std::string stem = file_stem(b.space.name()) + "_" + file_stem(name);
    for (const auto& f : formats) {
      const fs::path p = dir / (stem + "." + f);
      if (f == "svg")
        write_text(p, render_dot_matrix(m, render));
      else
        save_matrix(p.string(), m);
      files.push_back(p.filename().string());
      out << p.string() << '\n';
    }
  }
  json meta = b.meta;
  meta["space"] = b.space.name();
  meta["coordinates"] = b.space.names();
  meta["files"] = files;
  meta["render"] = {{"threshold", render.threshold}, {"cell", render.cell}};
  meta["phase_policy"] = kPhaseFixPolicy;
  const fs::path mp = dir / (file_stem(b.space.name()) + ".meta.json");
  write_text(mp, meta.dump(2) + "\n");
}

int cmd_build(const Options& o, bool transforms, std::ostream& out) {
  const auto c = require_config(o);
  emit(o, c, build_from(o, c, transforms), out);
  return 0;
}

int cmd_vertex(const Options& o, std::ostream& out) {
  const auto c = require_config(o);
  if (!c.interpolation) throw ConfigError("vertex needs an interpolation section");
  auto b = build_vertex(*c.interpolation, o.n);
  if (!c.transforms.empty()) b = apply_transforms(std::move(b), c.transforms);
  emit(o, c, b, out);
  return 0;
}

SweepReport run_sweep(const Options& o, const JobConfig& c) {
  SweepSpec s = *c.sweep;
  if (o.delta >= 0) s.delta = o.delta;
  const auto& crit = s.criterion;
  if (crit == "commutator_decay" || crit == "norm_convergence") {
    std::string id;
    SpaceBuilder builder;
    if (c.space) {
      id = c.space->at("builder").get<std::string>();
      builder = [&c](int n) { return apply_transforms(build_space(*c.space, n), c.transforms).space; };
    } else if (c.interpolation) {
      id = "string_vertex";
      builder = [&c](int n) { return build_vertex(*c.interpolation, n).space; };
    } else {
      throw ConfigError("sweep needs a space or an interpolation section");
    }
    if (crit == "commutator_decay") return check_commutator_decay(builder, s.schedule, s.delta, id);
    if (s.coordinate.empty()) throw ConfigError("norm_convergence needs a coordinate");
    const std::string coord = s.coordinate;
    return check_norm_convergence([builder, coord](int n) { return builder(n).coordinate(coord).data(); },
                                  s.schedule, s.delta, id + ":" + coord);
  }
  if (s.pair.is_null()) throw ConfigError("criterion '" + crit + "' needs a pair section");
  const auto f = fourier_from_json_value(s.pair.at("f"));
  const auto g = fourier_from_json_value(s.pair.at("g"));
  const auto rule = grid_rule_from_string(s.pair.value("rule", std::string("symmetric")));
  const auto grid = make_grid(s.schedule.front(), f.interval(), rule);
  if (crit == "product_convergence") return check_product_convergence(f, g, grid, s.schedule, s.delta);
  if (crit == "poisson_convergence") return check_poisson_convergence(f, g, grid, s.schedule, s.delta);
  if (crit == "semiclassical") return check_semiclassical(f, g, grid, s.schedule, s.delta);
  throw ConfigError("unknown sweep criterion '" + crit + "'");
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto c = require_config(o);
  if (!c.sweep) throw ConfigError("sweep needs a sweep section");
  const auto r = run_sweep(o, c);
  out << r.table();
  fs::create_directories(o.out);
  const fs::path p = fs::path(o.out) / "sweep_report.json";
  write_text(p, r.to_json() + "\n");
  out << "report: " << p.string() << '\n';
  return r.pass() ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.inputs.empty()) {
    Options only_svg = o;
    only_svg.formats = {"svg"};
    return cmd_build(only_svg, true, out);
  }
  RenderOptions r;
  if (!o.config.empty()) r = load_config(o.config).render;
  if (o.threshold >= 0) r.threshold = o.threshold;
  fs::create_directories(o.out);
  for (const auto& in : o.inputs) {
    const fs::path p = fs::path(o.out) / (fs::path(in).stem().string() + ".svg");
    write_text(p, render_dot_matrix(load_matrix(in), r));
    out << p.string() << '\n';
  }
  return 0;
}

int cmd_surface(const Options& o, std::ostream& out) {
  const auto c = require_config(o);
  const auto b = build_from(o, c, true);
  const auto& gens = b.space.generators();
  if (gens.size() != static_cast<std::size_t>(b.space.dimension()))
    throw CapabilityError("space '" + b.space.name() + "' carries no matrix valued functions to export");
  SurfaceOptions so = c.surface;
  so.names = b.space.names();
  const auto pc = export_classical_surface(gens, so);
  fs::create_directories(o.out);
  const fs::path p = fs::path(o.out) / (file_stem(b.space.name()) + "_surface.csv");
  std::ofstream os(p, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + p.string());
  pc.write_csv(os);
  json meta = b.meta;
  meta["surface"] = {{"q_samples", so.q_samples},
                     {"phi_samples", so.phi_samples},
                     {"commutator_bound", so.commutator_bound},
                     {"commutator_sup", pc.commutator_sup},
                     {"points", pc.points.size()}};
  write_text(fs::path(o.out) / (file_stem(b.space.name()) + "_surface.meta.json"), meta.dump(2) + "\n");
  out << p.string() << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fuzzyspace: matrix regularizations of surfaces", "fuzzyspace"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* s) {
    s->add_option("--config", o.config, "JSON job configuration");
    s->add_option("--out", o.out, "output directory")->capture_default_str();
    s->add_option("--n", o.n, "matrix size parameter N (blocks for block spaces)")->check(CLI::PositiveNumber);
    s->add_option("--delta", o.delta, "border width for sweeps")->check(CLI::NonNegativeNumber);
    s->add_option("--threshold", o.threshold, "dot-matrix threshold")->check(CLI::NonNegativeNumber);
    s->add_flag("--seedless", o.seedless, "deterministic run (all computations are deterministic)");
    s->add_option("--format", o.formats, "output formats")->check(CLI::IsMember({"csv", "bin", "svg"}));
  };
  auto* build = app.add_subcommand("build", "build a space and dump its coordinate matrices");
  auto* transform = app.add_subcommand("transform", "build a space and apply the transform list");
  auto* vertex = app.add_subcommand("vertex", "build the string vertex from the interpolation section");
  auto* sweep = app.add_subcommand("sweep", "run a verifier sweep; exit 1 when a verdict fails");
  auto* render = app.add_subcommand("render", "dot-matrix SVGs from matrix dumps or from a config");
  auto* surface = app.add_subcommand("surface", "classical-limit point cloud of the generators");
  for (auto* s : {build, transform, vertex, sweep, render, surface}) common(s);
  render->add_option("inputs", o.inputs, "matrix dumps (.csv or .bin)");

  if (argc > 1 && argv[1][0] != '-' && !app.get_subcommand_no_throw(argv[1])) {
    err << "error: unknown subcommand '" << argv[1] << "'\n\n" << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*build) return cmd_build(o, false, out);
    if (*transform) return cmd_build(o, true, out);
    if (*vertex) return cmd_vertex(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*render) return cmd_render(o, out);
    if (*surface) return cmd_surface(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  err << app.help();
  return 2;
}

}  // namespace fuzzy::cli
