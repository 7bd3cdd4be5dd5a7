#include "fuzzy/catalog.hpp"

#include <cmath>
#include <numbers>

#include "fuzzy/errors.hpp"
#include "fuzzy/regularize.hpp"

namespace fuzzy {

namespace {

const cplx kI{0.0, 1.0};

FourierFunction cos_series(const Interval& iv, const ProfileFunction& offset, const ProfileFunction& r) {
  const ComplexProfile half(0.5 * r);
  return {iv, {{0, ComplexProfile(offset)}, {1, half}, {-1, half}}};
}

// offset + r sin phi
FourierFunction sin_series(const Interval& iv, const ProfileFunction& offset, const ProfileFunction& r) {
  return {iv, {{0, ComplexProfile(offset)}, {1, ComplexProfile(0.0, -0.5 * r)}, {-1, ComplexProfile(0.0, 0.5 * r)}}};
}

FuzzyMatrix diagonal_matrix(const Eigen::VectorXcd& d) { return FuzzyMatrix(d.asDiagonal().toDenseMatrix()); }

}  // namespace

FuzzySpace build_generalized_cylinder(const CurveSpec& curve, int n) {
  if (!(curve.beta > 0)) throw DomainError("curve height beta must be positive");
  if (!curve.x.q_independent() || !curve.y.q_independent())
    throw DomainError("generalized cylinder needs q-independent curve coefficients");
  const Interval iv{0.0, curve.beta};
  auto grid = make_grid(n, iv, GridRule::symmetric);
  return build_immersed_cylinder(curve.x.with_interval(iv), curve.y.with_interval(iv), ProfileFunction::affine(1, 0),
                                 grid);
}

FuzzySpace build_immersed_cylinder(const FourierFunction& x, const FourierFunction& y, const ProfileFunction& z,
                                   const DiscretizingGrid& grid) {
  if (!x.is_real_valued() || !y.is_real_valued()) throw DomainError("immersed cylinder needs real valued x and y");
  if (!x.interval().same_as(y.interval())) throw ShapeError("x and y on different intervals");
  Eigen::VectorXcd zd(grid.size());
  for (int k = 0; k < grid.size(); ++k) zd(k) = z(grid.q(k, k));
  auto zf = FourierFunction::constant(x.interval(), ComplexProfile(z));
  return FuzzySpace("immersed_cylinder", {"X", "Y", "Z"},
                    {regularize_scalar(x, grid), regularize_scalar(y, grid), diagonal_matrix(zd)},
                    {MatrixFourierFunction::scalar(x), MatrixFourierFunction::scalar(y), MatrixFourierFunction::scalar(zf)},
                    grid);
}

FuzzySpace build_fuzzy_cylinder(int n, double radius, Interval interval, double z_scale, GridRule rule) {
  const ProfileFunction r(radius);
  auto s = build_immersed_cylinder(cos_series(interval, 0.0, r), sin_series(interval, 0.0, r),
                                   ProfileFunction::affine(z_scale, 0.0), make_grid(n, interval, rule));
  return FuzzySpace("fuzzy_cylinder", s.names(), s.coordinates(), s.generators(), s.grid());
}

CircleToEightFunctions circle_to_eight_functions(const CircleToEightParams& p) {
  const ProfileFunction half(0.5);
  const ProfileFunction quarter(0.25);
  const ProfileFunction c1 = half * (p.r1 + half * p.r2);
  const ProfileFunction s1 = half * (p.r1 - half * p.r2);
  const ProfileFunction c3 = quarter * p.r2;
  FourierFunction x(p.interval, {{1, c1}, {-1, c1}, {3, c3}, {-3, c3}});
  FourierFunction y(p.interval, {{1, ComplexProfile(0.0, -s1)},
                                 {-1, ComplexProfile(0.0, s1)},
                                 {3, ComplexProfile(0.0, -c3)},
                                 {-3, ComplexProfile(0.0, c3)}});
  return {x, y, ProfileFunction::affine(p.z_scale, p.z_offset)};
}

FuzzySpace build_circle_to_eight(const CircleToEightParams& p, int n, GridRule rule) {
  auto f = circle_to_eight_functions(p);
  auto s = build_immersed_cylinder(f.x, f.y, f.z, make_grid(n, p.interval, rule));
  return FuzzySpace("circle_to_eight", s.names(), s.coordinates(), s.generators(), s.grid());
}

std::pair<FuzzySpace, FuzzySpace> build_double_cylinder(const DoubleCylinderSpec& spec, int n) {
  auto grid = make_grid(n, spec.interval, spec.rule);
  auto one = [&](int i) {
    auto s = build_immersed_cylinder(cos_series(spec.interval, spec.x0[i], spec.rx[i]),
                                     sin_series(spec.interval, spec.y0[i], spec.ry[i]), ProfileFunction::affine(1, 0),
                                     grid);
    return FuzzySpace("cylinder_" + std::to_string(i + 1), s.names(), s.coordinates(), s.generators(), s.grid());
  };
  return {one(0), one(1)};
}

FuzzySpace build_clifford_torus(double a, double b, int n) {
  if (n < 2) throw DomainError("Clifford torus needs N >= 2");
  const Eigen::MatrixXcd up = toeplitz_basis(1, n);
  const Eigen::MatrixXcd down = toeplitz_basis(-1, n);
  Eigen::MatrixXcd x1 = 0.5 * a * (up + down);
  Eigen::MatrixXcd y1 = 0.5 * a * kI * (up - down);
  Eigen::VectorXcd c(n), s(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * k / n;
    c(k) = b * std::cos(t);
    s(k) = b * std::sin(t);
  }
  return FuzzySpace("clifford_torus", {"X1", "Y1", "X2", "Y2"},
                    {FuzzyMatrix(x1), FuzzyMatrix(y1), diagonal_matrix(c), diagonal_matrix(s)});
}

FuzzySpace build_graph_vertex(const GraphVertexSpec& spec) {
  const int n0 = spec.upper_rows;
  const int nb = spec.lower_blocks;
  if (n0 < 1 || nb < 1) throw DomainError("graph vertex needs non-empty upper and lower parts");
  const int dim = n0 + 2 * nb;
  std::vector<std::string> names;
  std::vector<FuzzyMatrix> coords;
  for (const auto& [name, v] : spec.coordinates) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    auto set = [&m](int r, int c, cplx val) {
      m(r, c) = val;
      m(c, r) = std::conj(val);
    };
    for (int k = 0; k + 1 < n0; ++k) set(k, k + 1, v.upper);
    set(n0 - 1, n0, v.junction);
    set(n0 - 1, n0 + 1, v.junction);
    for (int k = 0; k < nb; ++k) {
      m(n0 + 2 * k, n0 + 2 * k) = -v.split;
      m(n0 + 2 * k + 1, n0 + 2 * k + 1) = v.split;
    }
    for (int k = n0; k + 2 < dim; ++k) set(k, k + 2, v.lower);
    names.push_back(name);
    coords.emplace_back(m);
  }
  Eigen::VectorXcd z(dim);
  for (int k = 0; k < n0; ++k) z(k) = spec.z_step * k;
  for (int k = 0; k < nb; ++k) z(n0 + 2 * k) = z(n0 + 2 * k + 1) = spec.z_step * (n0 + k);
  names.push_back("Z");
  coords.push_back(diagonal_matrix(z));
  return FuzzySpace("graph_vertex", std::move(names), std::move(coords));
}

}  // namespace fuzzy
