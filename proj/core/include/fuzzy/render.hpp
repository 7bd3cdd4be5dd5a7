#pragma once

#include <string>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

struct RenderOptions {
  double threshold = 0.1;  // entries with smaller modulus become minimal points
  double cell = 10.0;      // side of one entry cell in SVG units
};

// SVG 1.1 dot-matrix diagram: one circle per entry centred in its cell, radius
// proportional to sqrt|entry| with the largest entry filling its cell.
std::string render_dot_matrix(const FuzzyMatrix& m, const RenderOptions& opt = {});
std::string render_dot_matrix(const Eigen::MatrixXcd& m, const RenderOptions& opt = {});

}  // namespace fuzzy
