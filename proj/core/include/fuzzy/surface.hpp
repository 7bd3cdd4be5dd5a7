#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

struct SurfaceOptions {
  int q_samples = 64;
  int phi_samples = 64;
  double commutator_bound = 0.1;  // refuse when matrix_fn_commutator_sup exceeds this
  double scalar_tolerance = -1;   // eigenvalue spread below which a generator counts as scalar; < 0: bound
  std::vector<std::string> names; // column names, default x1..xd
};

struct SurfacePoint {
  int sheet = 0;
  double q = 0.0;
  double phi = 0.0;
  std::vector<double> x;
  double offdiag_residual = 0.0;  // largest off-diagonal modulus of any coordinate in the reference eigenbasis
};

struct PointCloud {
  std::vector<std::string> names;
  double commutator_sup = 0.0;
  std::vector<SurfacePoint> points;

  void write_csv(std::ostream& os) const;
};

// Samples the generators on a q x phi grid, diagonalizes the first non-scalar
// one at each point and reads every coordinate on the diagonal of that basis;
// one point per eigenvalue branch (sheet).
PointCloud export_classical_surface(const std::vector<MatrixFourierFunction>& generators,
                                    const SurfaceOptions& opt = {});

}  // namespace fuzzy
