#include "config.hpp"

#include <fstream>
#include <numbers>

#include "fuzzy/catalog.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/json_value.hpp"
#include "fuzzy/regularize.hpp"

namespace fuzzy::cli {

using nlohmann::json;

namespace {

ProfileFunction profile_or(const json& j, const char* key, ProfileFunction fallback) {
  return j.contains(key) ? profile_from_json_value(j.at(key)) : std::move(fallback);
}

GridRule rule_of(const json& j, GridRule fallback) {
  return j.contains("rule") ? grid_rule_from_string(j.at("rule").get<std::string>()) : fallback;
}

AffineRule affine_of(const json& j) {
  AffineRule a;
  if (j.contains("affine")) {
    const auto& x = j.at("affine");
    a.c_n = x.value("c_n", a.c_n);
    a.c_m = x.value("c_m", a.c_m);
    a.c_0 = x.value("c_0", a.c_0);
  }
  return a;
}

int size_of(const json& j, const char* key, int fallback, int override_n) {
  if (override_n > 0) return override_n;
  return j.value(key, fallback);
}

BandValues band_from(const json& j) {
  BandValues b;
  if (j.contains("upper")) b.upper = complex_from(j.at("upper"));
  if (j.contains("junction")) b.junction = complex_from(j.at("junction"));
  if (j.contains("lower")) b.lower = complex_from(j.at("lower"));
  if (j.contains("split")) b.split = complex_from(j.at("split"));
  return b;
}

FuzzySpace rename(const FuzzySpace& s, const std::string& name) {
  return FuzzySpace(name, s.names(), s.coordinates(), s.generators(), s.grid());
}

TransformRecipe recipe_from(const json& j) {
  if (j.contains("name")) {
    const auto name = j.at("name").get<std::string>();
    if (name == "cylinder_to_u") return cylinder_to_u_recipe(j.value("alpha", 5.0 / 8.0));
    if (name == "clifford_projection") {
      std::array<std::string, 4> mapping{"X1", "Y1", "X2", "Y2"};
      if (j.contains("mapping")) {
        const auto m = j.at("mapping").get<std::vector<std::string>>();
        if (m.size() != 4) throw ConfigError("clifford mapping needs four coordinate names");
        std::copy(m.begin(), m.end(), mapping.begin());
      }
      return clifford_projection_recipe(mapping);
    }
    throw ConfigError("unknown recipe '" + name + "'");
  }
  TransformRecipe r;
  for (const auto& st : j.at("steps")) {
    if (st.contains("poly")) {
      const auto& p = st.at("poly");
      PolyStep ps{p.at("target").get<std::string>(), {}};
      for (const auto& t : p.at("terms"))
        ps.terms.push_back({t.contains("coeff") ? complex_from(t.at("coeff")) : cplx(1.0),
                            t.value("factors", std::vector<std::string>{}), t.value("symmetrized", false)});
      r.steps.emplace_back(std::move(ps));
    } else if (st.contains("diagonal_map")) {
      const auto& d = st.at("diagonal_map");
      r.steps.emplace_back(DiagonalMapStep{d.at("target").get<std::string>(), d.at("source").get<std::string>(),
                                           d.value("shift", 1.0), d.value("scale", 1.0),
                                           d.value("near_singular", 0.1)});
    } else if (st.contains("diagonalize")) {
      r.steps.emplace_back(DiagonalizeStep{st.at("diagonalize").get<std::string>()});
    } else {
      throw ConfigError("recipe step needs one of poly, diagonal_map, diagonalize");
    }
  }
  r.outputs = j.at("outputs").get<std::vector<std::string>>();
  return r;
}

json diag_report(const DiagonalizationReport& r) {
  return {{"policy", r.policy},
          {"residual", r.residual},
          {"degenerate_clusters", r.degenerate_clusters},
          {"real_path", r.real_path}};
}

}  // namespace

Interval interval_from(const json& j, Interval fallback) {
  if (!j.contains("interval")) return fallback;
  const auto v = j.at("interval").get<std::vector<double>>();
  if (v.size() != 2) throw ConfigError("interval must be [lo, hi]");
  return make_interval(v[0], v[1]);
}

cplx complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("complex value must be a number or [re, im]");
}

Eigen::MatrixXcd matrix_from(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "interlacing") return interlacing_unitary();
    throw ConfigError("unknown named unitary '" + j.get<std::string>() + "'");
  }
  const auto rows = j.size();
  Eigen::MatrixXcd m(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != rows) throw ConfigError("unitary must be square");
    for (std::size_t c = 0; c < rows; ++c) m(r, c) = complex_from(j[r][c]);
  }
  return m;
}

JobConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known{"space", "transforms", "interpolation", "sweep",
                                              "render", "surface", "outputs", "description"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) throw ConfigError("unknown config section '" + k + "'");
  JobConfig c;
  c.raw = j;
  if (j.contains("space")) c.space = j.at("space");
  if (j.contains("transforms")) c.transforms = j.at("transforms");
  if (!c.transforms.is_array()) throw ConfigError("transforms must be a list");
  if (j.contains("interpolation")) c.interpolation = j.at("interpolation");
  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    SweepSpec sp;
    sp.criterion = s.value("criterion", sp.criterion);
    sp.schedule = s.value("schedule", std::vector<int>{});
    sp.delta = s.value("delta", sp.delta);
    sp.coordinate = s.value("coordinate", std::string{});
    if (s.contains("pair")) sp.pair = s.at("pair");
    if (sp.schedule.empty()) throw ConfigError("sweep schedule must not be empty");
    c.sweep = sp;
  }
  if (j.contains("render")) {
    const auto& r = j.at("render");
    c.render.threshold = r.value("threshold", c.render.threshold);
    c.render.cell = r.value("cell", c.render.cell);
  }
  if (j.contains("surface")) {
    const auto& s = j.at("surface");
    c.surface.q_samples = s.value("q_samples", c.surface.q_samples);
    c.surface.phi_samples = s.value("phi_samples", c.surface.phi_samples);
    c.surface.commutator_bound = s.value("commutator_bound", c.surface.commutator_bound);
    c.surface.scalar_tolerance = s.value("scalar_tolerance", c.surface.scalar_tolerance);
  }
  if (j.contains("outputs")) {
    const auto& o = j.at("outputs");
    c.outputs.formats = o.value("formats", c.outputs.formats);
    c.outputs.coordinates = o.value("coordinates", c.outputs.coordinates);
  }
  for (const auto& f : c.outputs.formats)
    if (f != "csv" && f != "bin" && f != "svg") throw ConfigError("unknown output format '" + f + "'");
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config " + path);
  json j;
  try {
    j = json::parse(is, nullptr, true, true);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_config(j);
}

BuiltSpace build_space(const json& sp, int n_override) {
  const auto builder = sp.at("builder").get<std::string>();
  const json p = sp.value("params", json::object());
  BuiltSpace out;
  out.meta = {{"builder", builder}, {"params", p}};
  try {
    if (builder == "fuzzy_cylinder") {
      const int n = size_of(p, "n", 40, n_override);
      out.space = build_fuzzy_cylinder(n, p.value("radius", 1.0), interval_from(p, {-1.0, 1.0}),
                                       p.value("z_scale", 1.0), rule_of(p, GridRule::symmetric));
    } else if (builder == "circle_to_eight") {
      CircleToEightParams c;
      c.r1 = profile_or(p, "r1", c.r1);
      c.r2 = profile_or(p, "r2", c.r2);
      c.interval = interval_from(p, c.interval);
      c.z_offset = p.value("z_offset", c.z_offset);
      c.z_scale = p.value("z_scale", c.z_scale);
      out.space = build_circle_to_eight(c, size_of(p, "n", 30, n_override), rule_of(p, GridRule::lower));
    } else if (builder == "generalized_cylinder") {
      CurveSpec c{fourier_from_json_value(p.at("x")), fourier_from_json_value(p.at("y")), p.value("beta", 1.0)};
      out.space = build_generalized_cylinder(c, size_of(p, "n", 64, n_override));
    } else if (builder == "immersed_cylinder") {
      const auto x = fourier_from_json_value(p.at("x"));
      const auto grid = make_grid(size_of(p, "n", 40, n_override), x.interval(), rule_of(p, GridRule::symmetric),
                                  affine_of(p));
      out.space = build_immersed_cylinder(x, fourier_from_json_value(p.at("y")),
                                          profile_or(p, "z", ProfileFunction::affine(1, 0)), grid);
    } else if (builder == "double_cylinder") {
      DoubleCylinderSpec d;
      d.interval = interval_from(p, d.interval);
      d.rule = rule_of(p, d.rule);
      if (p.contains("cylinders")) {
        const auto& cs = p.at("cylinders");
        if (cs.size() != 2) throw ConfigError("double cylinder needs two cylinder entries");
        for (int i = 0; i < 2; ++i) {
          d.x0[i] = profile_or(cs[i], "x0", d.x0[i]);
          d.y0[i] = profile_or(cs[i], "y0", d.y0[i]);
          d.rx[i] = profile_or(cs[i], "rx", d.rx[i]);
          d.ry[i] = profile_or(cs[i], "ry", d.ry[i]);
        }
      }
      auto [a, b] = build_double_cylinder(d, size_of(p, "n", 30, n_override));
      const auto combine = p.value("combine", std::string("direct_sum"));
      if (combine == "direct_sum")
        out.space = direct_sum(a, b);
      else if (combine == "interlaced")
        out.space = interlace(direct_sum(a, b));
      else
        throw ConfigError("double cylinder combine must be direct_sum or interlaced");
    } else if (builder == "clifford_torus") {
      out.space = build_clifford_torus(p.value("a", 1.0), p.value("b", 2.0), size_of(p, "n", 40, n_override));
    } else if (builder == "graph_vertex") {
      GraphVertexSpec g;
      g.upper_rows = p.value("upper_rows", g.upper_rows);
      g.lower_blocks = p.value("lower_blocks", g.lower_blocks);
      if (n_override > 0) {
        g.upper_rows = n_override;
        g.lower_blocks = n_override;
      }
      g.z_step = p.value("z_step", g.z_step);
      if (p.contains("coordinates")) {
        g.coordinates.clear();
        for (const auto& [name, v] : p.at("coordinates").items()) g.coordinates.emplace_back(name, band_from(v));
      }
      out.space = build_graph_vertex(g);
    } else if (builder == "matrix_function") {
      const int n = size_of(p, "n", 32, n_override);
      std::vector<std::string> names;
      std::vector<MatrixFourierFunction> gens;
      for (const auto& [name, v] : p.at("generators").items()) {
        names.push_back(name);
        gens.push_back(matrix_fourier_from_json_value(v));
      }
      if (gens.empty()) throw ConfigError("matrix_function needs at least one generator");
      const auto grid = make_grid(n, gens.front().interval(), rule_of(p, GridRule::symmetric), affine_of(p));
      std::vector<FuzzyMatrix> coords;
      for (const auto& g : gens) coords.push_back(regularize_matrix(g, grid));
      out.space = FuzzySpace("matrix_function", names, std::move(coords), gens, grid);
    } else if (builder == "string_vertex") {
      return build_vertex(p, n_override);
    } else {
      throw ConfigError("unknown builder '" + builder + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError("builder '" + builder + "': " + e.what());
  }
  out.space = rename(out.space, sp.value("name", builder));
  out.meta["dim"] = out.space.dim();
  return out;
}

VertexParams vertex_params(const json& j, int blocks_override) {
  VertexParams p;
  try {
    p.r1 = j.value("r1", 1.0);
    p.r2 = profile_or(j, "r2", p.r2);
    p.r = j.value("r", p.r);
    p.x0 = profile_or(j, "x0", p.x0);
    p.interval = interval_from(j, p.interval);
    p.blocks = blocks_override > 0 ? blocks_override : j.value("blocks", p.blocks);
    p.delta_tilde = j.value("delta_tilde", p.delta_tilde);
    p.rule = rule_of(j, p.rule);
    p.y_scale = j.value("y_scale", p.y_scale);
    p.z1 = profile_or(j, "z1", p.z1);
    p.z2 = profile_or(j, "z2", p.z2);
    const auto mode_name = j.value("profile_mode", std::string("explicit"));
    ProfileMode mode;
    if (mode_name == "explicit")
      mode = ProfileMode::explicit_spline;
    else if (mode_name == "derived")
      mode = ProfileMode::derived_lambda;
    else
      throw ConfigError("profile_mode must be explicit or derived");
    p.profile = make_profile(mode, profile_or(j, "h", spline_h()), j.value("q2", 1.0), j.value("q3", 2.0));
    if (j.contains("gamma")) p.profile.gamma = profile_from_json_value(j.at("gamma"));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("interpolation section: ") + e.what());
  }
  return p;
}

BuiltSpace build_vertex(const json& j, int blocks_override) {
  const auto p = vertex_params(j, blocks_override);
  auto v = build_string_vertex(p);
  BuiltSpace out;
  out.space = std::move(v.space);
  out.meta = {{"builder", "string_vertex"},
              {"params", j},
              {"blocks", p.blocks},
              {"dim", out.space.dim()},
              {"delta", v.tables.delta},
              {"delta_tilde", v.delta_tilde}};
  return out;
}

BuiltSpace apply_transforms(BuiltSpace in, const json& steps) {
  json log = json::array();
  for (const auto& st : steps) {
    const auto op = st.at("op").get<std::string>();
    json entry{{"op", op}};
    if (op == "z_order") {
      in.space = z_order(in.space);
    } else if (op == "interlace") {
      in.space = interlace(in.space);
    } else if (op == "block_transform") {
      in.space = block_transform(in.space, matrix_from(st.value("unitary", json("interlacing"))),
                                 st.at("first_row").get<int>());
    } else if (op == "diagonalize") {
      const auto name = st.at("coordinate").get<std::string>();
      auto d = diagonalize_coordinate(in.space, in.space.index_of(name));
      entry["report"] = diag_report(d.report);
      in.space = std::move(d.space);
    } else if (op == "recipe") {
      TransformReport rep;
      in.space = matrix_poly_transform(in.space, recipe_from(st), &rep);
      entry["near_singular_rows"] = rep.near_singular_rows;
      entry["diagonalizations"] = json::array();
      for (const auto& d : rep.diagonalizations) entry["diagonalizations"].push_back(diag_report(d));
    } else if (op == "mirror_concat") {
      const int h = st.contains("height") ? in.space.index_of(st.at("height").get<std::string>()) : -1;
      in.space = mirror_concat(in.space, st.at("q_e").get<double>(), h);
    } else if (op == "close_caps") {
      in.space = close_caps(in.space, profile_from_json_value(st.at("window")));
    } else {
      throw ConfigError("unknown transform op '" + op + "'");
    }
    log.push_back(entry);
  }
  in.meta["transforms"] = log;
  in.meta["dim"] = in.space.dim();
  return in;
}

}  // namespace fuzzy::cli
