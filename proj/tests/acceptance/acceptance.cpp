// Acceptance suite: one PASS/FAIL line per criterion 1-12, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fuzzy/catalog.hpp"
#include "fuzzy/interpolator.hpp"
#include "fuzzy/regularize.hpp"
#include "fuzzy/transforms.hpp"
#include "fuzzy/verifier.hpp"
#include "properties.hpp"
#include "random_tables.hpp"

using namespace fuzzy;
using fuzzy::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

FourierFunction circle_curve(Interval iv, double r) {
  return FourierFunction(iv, {{1, ComplexProfile(0.5 * r)}, {-1, ComplexProfile(0.5 * r)}});
}

std::vector<CurveSpec> test_curves() {
  Rng rng(20240601);
  std::vector<CurveSpec> curves;
  const Interval iv{0.0, 1.0};
  curves.push_back({circle_curve(iv, 1.0), FourierFunction(iv, {{1, cplx{0, -0.5}}, {-1, cplx{0, 0.5}}}), 1.0});
  for (int k = 0; k < 4; ++k) {
    const int delta = fuzzy::testing::uniform_int(rng, 1, 5);
    curves.push_back({fuzzy::testing::random_constant_function(rng, iv, delta, true),
                      fuzzy::testing::random_constant_function(rng, iv, delta, true), 1.0 + k});
  }
  return curves;
}

// 1: [x, y] = 0 for Toeplitz curve matrices at N = 64, whole matrix.
Outcome toeplitz_exactness() {
  double full = 0.0, interior = 0.0;
  for (const auto& c : test_curves()) {
    const auto s = build_generalized_cylinder(c, 64);
    const Eigen::MatrixXcd k = commutator(s.coordinate("X").data(), s.coordinate("Y").data());
    full = std::max(full, within_border_norm(k, 0));
    interior = std::max(interior, within_border_norm(k, 5));
  }
  return {full <= 1e-12, fmt("full-matrix |[x,y]| = %.3e (within border 5: %.3e); corner blocks of finite Toeplitz "
                             "products do not commute",
                             full, interior)};
}

// 2: [z, Q(x)] = (beta/N) Q(-i d_phi x) entrywise within border.
Outcome derivative_identity() {
  double worst = 0.0;
  const int n = 64, delta = 5;
  for (const auto& c : test_curves()) {
    const auto s = build_generalized_cylinder(c, n);
    for (const char* name : {"X", "Y"}) {
      const auto& f = (std::string(name) == "X") ? c.x.with_interval({0.0, c.beta}) : c.y.with_interval({0.0, c.beta});
      const Eigen::MatrixXcd lhs = commutator(s.coordinate("Z").data(), s.coordinate(name).data());
      const Eigen::MatrixXcd rhs = (c.beta / n) * regularize_scalar(-kI * d_phi(f), *s.grid()).data();
      worst = std::max(worst, within_border_max(lhs - rhs, delta));
    }
  }
  return {worst <= 1e-13, fmt("max entry deviation within border 5 at N = 64: %.3e (tol 1e-13)", worst)};
}

FourierFunction pair_f() {
  const Interval iv{0.0, 1.0};
  return FourierFunction(iv, {{1, ComplexProfile(ProfileFunction::affine(1.0, 1.0))}});
}
FourierFunction pair_g() {
  return FourierFunction::constant({0.0, 1.0}, ComplexProfile(ProfileFunction::polynomial({0.0, 0.0, 1.0})));
}

std::string ratio_text(const SweepReport& r, const std::string& key) {
  std::string s;
  for (std::size_t k = 0; k < r.records.size(); ++k) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%s(%d) = %.4e", k ? ", " : "", key.c_str(), r.records[k].n,
                  r.records[k].values.at(key));
    s += buf;
  }
  for (std::size_t k = 1; k < r.records.size(); ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "; ratio %.4f", r.records[k].values.at(key) / r.records[k - 1].values.at(key));
    s += buf;
  }
  return s;
}

// 3: first-order product law.
Outcome product_law() {
  const auto grid = make_grid(40, {0.0, 1.0}, GridRule::symmetric);
  const auto r = check_product_convergence(pair_f(), pair_g(), grid, {40, 80, 160}, 3);
  return {r.pass(), ratio_text(r, "r") + " (limit 0.6)"};
}

// 4: second-order law with the i (beta/N) Q({f,g}) correction.
Outcome semiclassical_law() {
  const auto grid = make_grid(40, {0.0, 1.0}, GridRule::symmetric);
  const auto r = check_semiclassical(pair_f(), pair_g(), grid, {40, 80, 160}, 3);
  // Opposite sign of the correction, for information only.
  const auto fg = mul(pair_f(), pair_g());
  const auto pb = poisson_bracket(pair_f(), pair_g());
  double flipped[2];
  for (int k = 0; k < 2; ++k) {
    const auto gr = grid.resized(40 << k);
    const Eigen::MatrixXcd m = regularize_scalar(pair_f(), gr).data() * regularize_scalar(pair_g(), gr).data() -
                               regularize_scalar(fg, gr).data() +
                               kI * (gr.beta() / gr.size()) * regularize_scalar(pb, gr).data();
    flipped[k] = within_border_norm(m, 3);
  }
  return {r.pass(), ratio_text(r, "R") + " (limit 0.35)" +
                       fmt("; opposite-sign correction would give R(80)/R(40) = %.3f", flipped[1] / flipped[0])};
}

// 5: z_order(Q(f1) + Q(f2), 2) == regularize_matrix(diag(f1, f2)) bitwise.
Outcome permutation_equivalence() {
  Rng rng(5150);
  const int n = 32;
  int mismatches = 0;
  for (int t = 0; t < 10; ++t) {
    const Interval iv{fuzzy::testing::uniform(rng, -2, 0), fuzzy::testing::uniform(rng, 0.5, 2)};
    const auto grid = make_grid(n, iv, static_cast<GridRule>(t % 3));
    const auto f1 = fuzzy::testing::random_function(rng, iv, fuzzy::testing::uniform_int(rng, 0, 4), 3);
    const auto f2 = fuzzy::testing::random_function(rng, iv, fuzzy::testing::uniform_int(rng, 0, 4), 3);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    sum.topLeftCorner(n, n) = regularize_scalar(f1, grid).data();
    sum.bottomRightCorner(n, n) = regularize_scalar(f2, grid).data();
    const Eigen::MatrixXcd lhs = z_order(sum, 2);
    const Eigen::MatrixXcd rhs = regularize_matrix(MatrixFourierFunction::diagonal({f1, f2}), grid).data();
    if (!(lhs.array() == rhs.array()).all()) ++mismatches;
  }
  return {mismatches == 0, fmt("%.0f of 10 randomized tables differ bitwise at N = 32", mismatches)};
}

// 6: lifted U^dagger Q(diag(-f, f)) U = Q(antidiag(f, f)).
Outcome interlacing_identity() {
  Rng rng(6161);
  const int n = 32;
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Interval iv{0.0, 1.0 + t};
    const auto grid = make_grid(n, iv, GridRule::symmetric);
    const auto f = fuzzy::testing::random_function(rng, iv, fuzzy::testing::uniform_int(rng, 0, 4), 2, true);
    const auto zero = FourierFunction::zero(iv);
    const auto diag = MatrixFourierFunction::diagonal({cplx(-1.0) * f, f});
    const MatrixFourierFunction anti(2, {zero, f, f, zero});
    const Eigen::MatrixXcd u = lift_constant_unitary(interlacing_unitary(), n);
    const Eigen::MatrixXcd lhs = u.adjoint() * regularize_matrix(diag, grid).data() * u;
    worst = std::max(worst, max_abs(lhs - regularize_matrix(anti, grid).data()));
  }
  return {worst <= 1e-13, fmt("max entry deviation over 10 tables: %.3e (tol 1e-13)", worst)};
}

VertexParams fig_vertex(int blocks) {
  VertexParams p;
  p.blocks = blocks;
  return p;
}

// 7: string vertex at 2N = 60 against its two end spaces.
Outcome vertex_reproduction() {
  const auto t0 = std::chrono::steady_clock::now();
  const int nb = 30;
  const auto p = fig_vertex(nb);
  const auto v = build_string_vertex(p);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto& grid = *v.space.grid();

  CircleToEightParams c2e;
  c2e.interval = p.interval;
  c2e.z_offset = 0.0;
  c2e.z_scale = 1.0;
  const auto cf = circle_to_eight_functions(c2e);
  const auto first = build_immersed_cylinder(cf.x, cf.y, ProfileFunction::affine(1, 0), v.scalar_grid);

  DoubleCylinderSpec dc;
  dc.interval = p.interval;
  dc.x0[0] = ProfileFunction(-1.0) * p.x0;
  dc.x0[1] = p.x0;
  dc.rx[0] = dc.ry[0] = -p.r;
  dc.rx[1] = dc.ry[1] = p.r;
  const auto [c1, c2] = build_double_cylinder(dc, nb);
  const auto second = interlace(direct_sum(c1, c2));

  double err_low = 0.0, err_high = 0.0, off_track = 0.0;
  int low_entries = 0, high_entries = 0;
  const int dim = v.space.dim();
  for (const char* name : {"X", "Y", "Z"}) {
    const auto& m = v.space.coordinate(name).data();
    const auto& a = first.coordinate(name).data();
    const auto& b = second.coordinate(name).data();
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const double q = grid.q(i / 2, j / 2);
        if (q <= p.profile.q2) {
          err_low = std::max(err_low, std::abs(m(i, j) - a(i, j)));
          ++low_entries;
        } else if (q >= p.profile.q3) {
          err_high = std::max(err_high, std::abs(m(i, j) - b(i, j)));
          ++high_entries;
        } else if (std::string(name) != "Z") {
          // Tracks: offsets carried by either input series in the lower-left slot.
          const int k = i / 2 - j / 2;
          int offset = 99;
          if (i % 2 == 1 && j % 2 == 0) offset = k;
          if (i % 2 == 0 && j % 2 == 1) offset = -k;
          if (offset != 99 && (offset < -2 || offset > 1)) off_track = std::max(off_track, std::abs(m(i, j)));
        }
      }
  }
  const bool ok = err_low <= 1e-9 && err_high <= 1e-9 && off_track < 0.1 && secs < 5.0 && low_entries > 0 &&
                  high_entries > 0;
  return {ok, fmt("q<=q2 deviation %.3e, q>=q3 deviation %.3e (tol 1e-9); off-track max %.4f (< 0.1); build %.3f s",
                  err_low, err_high, off_track, secs)};
}

double interior_commutator_max(const FuzzySpace& s) {
  double worst = 0.0;
  const int dim = s.dim();
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const Eigen::MatrixXcd c = commutator(s.coordinate(a).data(), s.coordinate(b).data());
      for (int i = 6; i < dim - 5; ++i)
        for (int j = 6; j < dim - 5; ++j) worst = std::max(worst, std::abs(c(i, j)));
    }
  return worst;
}

// 8: interior commutator maxima non-increasing for 2N = 30..120.
Outcome vertex_decay() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> v;
  for (int nb : {15, 30, 45, 60}) v.push_back(interior_commutator_max(build_string_vertex(fig_vertex(nb)).space));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = secs < 60.0;
  for (std::size_t k = 1; k < v.size(); ++k) ok = ok && v[k] <= 1.05 * v[k - 1];
  return {ok, fmt("max interior |[.,.]| for 2N = 30, 60, 90, 120: %.4f, %.4f, %.4f, %.4f", v[0], v[1], v[2], v[3]) +
                  fmt(" (%.2f s)", secs)};
}

// 9: |f_m(q)| <= C (2 delta + 1) / m^2 for delta < m <= 3 delta~.
Outcome decay_bound() {
  const auto p = fig_vertex(30);
  const auto v = build_string_vertex(p);
  const auto dx = check_decay_bound(v.tables.x1, v.tables.x2, p.profile, v.tables.delta, 3 * v.delta_tilde);
  const auto dy = check_decay_bound(v.tables.y1, v.tables.y2, p.profile, v.tables.delta, 3 * v.delta_tilde);
  return {dx.pass && dy.pass,
          fmt("worst |f_m| / bound: x %.4f (m = %.0f), y %.4f (m = %.0f)", dx.worst_ratio, dx.worst_m, dy.worst_ratio,
              dy.worst_m) +
              fmt(" at delta = %.0f, m <= %.0f; y has a seam jump at phi = 0 so its coefficients decay like 1/m",
                  v.tables.delta, 3 * v.delta_tilde)};
}

// 10: U-shaped cylinder pipeline at N = 40, alpha = 5/8.
Outcome u_shape_pipeline() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cyl = build_fuzzy_cylinder(40, 1.0, {-1.0, 1.0}, 5.0);
  TransformReport rep;
  const auto out = matrix_poly_transform(cyl, cylinder_to_u_recipe(5.0 / 8.0), &rep);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double im_x = out.coordinate("X'").data().imag().cwiseAbs().maxCoeff();
  const double re_y = out.coordinate("Y'").data().real().cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd z = cyl.coordinate("Z").data();
  const Eigen::MatrixXcd zp = 5.0 / 8.0 * z * z - cyl.coordinate("X").data();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> before(zp, Eigen::EigenvaluesOnly);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> after(out.coordinate("Z'").data(), Eigen::EigenvaluesOnly);
  const double spec_err = (before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff();
  const bool ok = im_x < 1e-8 && re_y < 1e-8 && spec_err <= 1e-10 && secs < 5.0;
  return {ok, fmt("max|Im X'| = %.2e, max|Re Y'| = %.2e, Z' spectrum deviation %.2e; %.3f s", im_x, re_y, spec_err,
                  secs)};
}

// 11: graph vertex junction after the interlacing block transform.
Outcome graph_junction() {
  GraphVertexSpec spec;
  spec.upper_rows = 8;
  spec.lower_blocks = 6;
  const double r = 0.7;
  spec.coordinates = {{"X", {0.5, r, 0.4, 0.3}}, {"Y", {cplx(0, 0.5), cplx(0, r), cplx(0, 0.4), 0.0}}};
  const auto s = build_graph_vertex(spec);
  const auto t = block_transform(s, interlacing_unitary(), spec.upper_rows);
  double err = 0.0;
  for (const char* name : {"X", "Y"}) {
    const cplx orig = s.coordinate(name)(spec.upper_rows - 1, spec.upper_rows);
    err = std::max(err, std::abs(t.coordinate(name)(spec.upper_rows - 1, spec.upper_rows) - std::sqrt(2.0) * orig));
  }
  return {err <= 1e-13, fmt("|junction - sqrt(2) r| = %.2e (tol 1e-13)", err)};
}

// 12: property suite.
Outcome property_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = fuzzy::testing::run_properties();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("      %-4s %-44s %s\n", r.pass ? "ok" : "FAIL", r.name.c_str(), r.detail.c_str());
    if (!r.pass) ++failed;
  }
  const bool ok = failed == 0 && secs < 120.0;
  return {ok, fmt("%.0f of %.0f properties failed; %.2f s", failed, static_cast<double>(results.size()), secs)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "toeplitz_exactness", toeplitz_exactness},
      {2, "derivative_identity", derivative_identity},
      {3, "first_order_product_law", product_law},
      {4, "second_order_semiclassical_law", semiclassical_law},
      {5, "permutation_equivalence", permutation_equivalence},
      {6, "interlacing_identity", interlacing_identity},
      {7, "string_vertex_reproduction", vertex_reproduction},
      {8, "vertex_commutator_decay", vertex_decay},
      {9, "coefficient_decay_bound", decay_bound},
      {10, "u_shape_pipeline", u_shape_pipeline},
      {11, "graph_vertex_junction", graph_junction},
      {12, "property_suite", property_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.id == 1 && secs >= 1.0) o.pass = false;
    if (c.id == 3 && secs >= 10.0) o.pass = false;
    std::printf("[%s] %2d %-32s %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
