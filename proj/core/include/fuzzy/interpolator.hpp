#pragma once

#include <memory>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

using CoefficientTable = FourierFunction::Table;

// Profile functions of an interpolation between a half-angle (double
// anti-periodic) series f1 for q <= q2 and a periodic series f2 for q >= q3.
struct InterpolationProfile {
  ProfileFunction alpha;   // -1/2 .. 0
  ProfileFunction theta1;  // 1 .. 0
  ProfileFunction theta2;  // 0 .. 1
  ProfileFunction lambda;  // 1 / (cos pi alpha - sin pi alpha)
  ProfileFunction gamma;   // phase; -pi alpha keeps the closed form below unchanged
  ProfileFunction beta;    // shift of the angle, equal to alpha
  double q2 = 1.0;
  double q3 = 2.0;
};

enum class ProfileMode {
  derived_lambda,   // theta1 = -lambda sin pi alpha, theta2 = lambda cos pi alpha
  explicit_spline,  // theta2 = h(s), theta1 = 1 - theta2
};

// alpha = (h(s) - 1) / 2 with s = -1 + 2 (q - q2) / (q3 - q2); q2 == q3 gives
// step profiles (hard concatenation).
InterpolationProfile make_profile(ProfileMode mode, const ProfileFunction& h, double q2, double q3);

// f_m(q) = e^{i(pi alpha + gamma)} / pi * sum_n [
//     theta1 cos(pi alpha) f1_n e^{i pi (1/2 + alpha) n} / (n - m + 1/2 + alpha)
//   + theta2 sin(pi alpha) f2_n e^{i pi alpha n} / (n - m + alpha) ],
// with the analytic limit when a denominator is below 1e-9.
cplx interp_fourier_coeff(const CoefficientTable& f1, const CoefficientTable& f2, const InterpolationProfile& p,
                          int m, double q);

struct VertexParams {
  double r1 = 1.0;                         // circle-to-eight base radius
  ProfileFunction r2 = spline_h();         // circle-to-eight deformation
  double r = 1.0;                          // cylinder radius
  ProfileFunction x0 = ProfileFunction::affine(0.3, 0.7);  // cylinder centres at -x0, +x0
  InterpolationProfile profile = make_profile(ProfileMode::explicit_spline, spline_h(), 1.0, 2.0);
  Interval interval{-1.0, 3.0};
  int blocks = 30;        // N; the matrices have size 2N
  int delta_tilde = -1;   // mode cutoff, negative: max(delta, min(3 delta, N / 6))
  GridRule rule = GridRule::symmetric;
  double y_scale = 1.0;   // extra factor on the y coefficients
  ProfileFunction z1 = ProfileFunction::affine(1.0, 0.0);
  ProfileFunction z2 = ProfileFunction::affine(1.0, 0.0);
};

struct VertexTables {
  CoefficientTable x1, y1;  // half-angle series of the circle-to-eight, shifted by a quarter step
  CoefficientTable x2, y2;  // off-diagonal series of the interlaced cylinders
  int delta = 0;
};

VertexTables vertex_tables(const VertexParams& p);
int default_delta_tilde(int delta, int blocks);

struct StringVertex {
  FuzzySpace space;  // X, Y, Z with 2x2 generators and the block grid
  VertexTables tables;
  int delta_tilde = 0;
  DiscretizingGrid scalar_grid;  // grid of size 2N on the same interval
};

// Off-diagonal X, Y with the interpolated series in the lower-left entry,
// Z = theta1 Z1 + theta2 diag(z2, z2) with Z1 the cell form of z1.
StringVertex build_string_vertex(const VertexParams& p);

struct DecayCheck {
  double worst_ratio = 0.0;  // |f_m| / (C (2 delta + 1) / m^2)
  int worst_m = 0;
  double worst_q = 0.0;
  bool pass = true;
};

// |f_m(q)| <= C (2 delta + 1) / m^2, C = (2/pi) max_{i,n} |f_{i,n}(q)|, for
// delta < m <= m_max (and -m when both_signs) at `samples` points of [q2, q3].
DecayCheck check_decay_bound(const CoefficientTable& f1, const CoefficientTable& f2, const InterpolationProfile& p,
                             int delta, int m_max, int samples = 33, bool both_signs = false);

}  // namespace fuzzy
