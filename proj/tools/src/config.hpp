#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fuzzy/interpolator.hpp"
#include "fuzzy/render.hpp"
#include "fuzzy/surface.hpp"
#include "fuzzy/transforms.hpp"

namespace fuzzy::cli {

struct BuiltSpace {
  FuzzySpace space;
  nlohmann::json meta;  // builder, parameters, derived quantities
};

struct SweepSpec {
  std::string criterion = "commutator_decay";
  std::vector<int> schedule;
  int delta = 5;
  std::string coordinate;  // norm_convergence
  nlohmann::json pair;     // f, g, interval, rule for the scalar-pair criteria
};

struct OutputSpec {
  std::vector<std::string> formats{"csv", "svg"};
  std::vector<std::string> coordinates;  // empty: all
};

struct JobConfig {
  nlohmann::json raw;
  std::optional<nlohmann::json> space;
  nlohmann::json transforms = nlohmann::json::array();
  std::optional<nlohmann::json> interpolation;
  std::optional<SweepSpec> sweep;
  RenderOptions render;
  SurfaceOptions surface;
  OutputSpec outputs;
};

JobConfig load_config(const std::string& path);
JobConfig parse_config(const nlohmann::json& j);

// n_override > 0 replaces the size parameter of the builder.
BuiltSpace build_space(const nlohmann::json& space, int n_override = 0);
VertexParams vertex_params(const nlohmann::json& interpolation, int blocks_override = 0);
BuiltSpace build_vertex(const nlohmann::json& interpolation, int blocks_override = 0);
// Applies the transform list in order; reports are appended to meta["transforms"].
BuiltSpace apply_transforms(BuiltSpace in, const nlohmann::json& steps);

Interval interval_from(const nlohmann::json& j, Interval fallback);
cplx complex_from(const nlohmann::json& j);
Eigen::MatrixXcd matrix_from(const nlohmann::json& j);

}  // namespace fuzzy::cli
