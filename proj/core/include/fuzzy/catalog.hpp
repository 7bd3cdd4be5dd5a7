#pragma once

#include <utility>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

// Closed curve (x(phi), y(phi)) swept along z in [0, beta].
struct CurveSpec {
  FourierFunction x;
  FourierFunction y;
  double beta = 1.0;
};

// x_hat = Q(x), y_hat = Q(y) are Toeplitz, z_hat = diag(beta n / N).
FuzzySpace build_generalized_cylinder(const CurveSpec& curve, int n);

// x, y real valued Fourier functions, z a profile; z_hat = diag z(q(n, n)).
FuzzySpace build_immersed_cylinder(const FourierFunction& x, const FourierFunction& y, const ProfileFunction& z,
                                   const DiscretizingGrid& grid);

// Plain fuzzy cylinder: x = radius cos phi, y = radius sin phi, z = z_scale q.
FuzzySpace build_fuzzy_cylinder(int n, double radius = 1.0, Interval interval = {-1.0, 1.0}, double z_scale = 1.0,
                                GridRule rule = GridRule::symmetric);

struct CircleToEightParams {
  ProfileFunction r1 = 1.0;
  ProfileFunction r2 = spline_h();
  Interval interval{-1.0, 1.0};
  double z_offset = 0.5;
  double z_scale = 0.5;
};

struct CircleToEightFunctions {
  FourierFunction x;
  FourierFunction y;
  ProfileFunction z;
};

// Polar curve with radius r1 + r2 cos 2 phi:
// x = (r1 + r2/2) cos phi + r2/2 cos 3 phi, y = (r1 - r2/2) sin phi + r2/2 sin 3 phi.
CircleToEightFunctions circle_to_eight_functions(const CircleToEightParams& p);
FuzzySpace build_circle_to_eight(const CircleToEightParams& p, int n, GridRule rule = GridRule::lower);

struct DoubleCylinderSpec {
  Interval interval{-1.0, 1.0};
  // Per cylinder i = 0, 1: centre (x_i0, y_i0) and radii r_ix, r_iy.
  ProfileFunction x0[2] = {0.0, 0.0};
  ProfileFunction y0[2] = {0.0, 0.0};
  ProfileFunction rx[2] = {1.0, 1.0};
  ProfileFunction ry[2] = {1.0, 1.0};
  GridRule rule = GridRule::symmetric;
};

std::pair<FuzzySpace, FuzzySpace> build_double_cylinder(const DoubleCylinderSpec& spec, int n);

// Four coordinates X1, Y1 (Toeplitz bands a/2) and X2, Y2 (diagonal
// b cos, b sin of 2 pi n / N).
FuzzySpace build_clifford_torus(double a, double b, int n);

struct BandValues {
  cplx upper = 1.0;     // r^A on the first superdiagonal above the junction
  cplx junction = 1.0;  // r, coupling the last upper row to both lower rows
  cplx lower = 1.0;     // r^B on the second superdiagonal below the junction
  cplx split = 0.0;     // x^B, alternating -x^B, x^B on the lower diagonal
};

struct GraphVertexSpec {
  int upper_rows = 10;    // n0
  int lower_blocks = 10;  // lower part has 2 * lower_blocks rows
  std::vector<std::pair<std::string, BandValues>> coordinates{{"X", {}}, {"Y", {}}};
  double z_step = 0.1;
};

// Band matrices of a cylinder splitting into two; z_hat is diagonal and
// constant on the 2x2 blocks below the junction.
FuzzySpace build_graph_vertex(const GraphVertexSpec& spec);

}  // namespace fuzzy
