#include "fuzzy/interpolator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fuzzy/catalog.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/regularize.hpp"

namespace fuzzy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLimitThreshold = 1e-9;

double parity(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

InterpolationProfile make_profile(ProfileMode mode, const ProfileFunction& h, double q2, double q3) {
  if (q3 < q2) throw DomainError("transition interval requires q2 <= q3");
  InterpolationProfile p;
  p.q2 = q2;
  p.q3 = q3;
  if (q2 == q3) {
    p.alpha = ProfileFunction::step(q2, -0.5, 0.0);
    p.theta1 = ProfileFunction::step(q2, 1.0, 0.0);
    p.theta2 = ProfileFunction::step(q2, 0.0, 1.0);
    p.lambda = 1.0;
  } else {
    const double w = 2.0 / (q3 - q2);
    const ProfileFunction hs = h.compose(ProfileFunction::affine(w, -1.0 - w * q2));
    p.alpha = ProfileFunction(0.5) * hs - ProfileFunction(0.5);
    const ProfileFunction pa = ProfileFunction(kPi) * p.alpha;
    p.lambda = (pa.cos() - pa.sin()).reciprocal();
    if (mode == ProfileMode::derived_lambda) {
      p.theta1 = -(p.lambda * pa.sin());
      p.theta2 = p.lambda * pa.cos();
    } else {
      p.theta2 = hs;
      p.theta1 = ProfileFunction(1.0) - hs;
    }
  }
  p.gamma = ProfileFunction(-kPi) * p.alpha;
  p.beta = p.alpha;
  return p;
}

cplx interp_fourier_coeff(const CoefficientTable& f1, const CoefficientTable& f2, const InterpolationProfile& p,
                          int m, double q) {
  const double a = p.alpha(q);
  const double t1 = p.theta1(q);
  const double t2 = p.theta2(q);
  const double nu = 0.5 + a;
  // sin(pi nu) = cos(pi a); this form is exactly zero at a = -1/2.
  const double c1 = std::sin(kPi * nu);
  const double s2 = std::sin(kPi * a);
  cplx sum{};
  if (t1 != 0.0) {
    for (const auto& [n, c] : f1) {
      const double den = n - m + nu;
      const double w = std::abs(den) < kLimitThreshold ? parity(m - n) * kPi : c1 / den;
      sum += t1 * w * c(q) * std::polar(1.0, kPi * nu * n);
    }
  }
  if (t2 != 0.0) {
    for (const auto& [n, c] : f2) {
      const double den = n - m + a;
      const double w = std::abs(den) < kLimitThreshold ? parity(m - n) * kPi : s2 / den;
      sum += t2 * w * c(q) * std::polar(1.0, kPi * a * n);
    }
  }
  const double phase = kPi * a + p.gamma(q);
  return (phase == 0.0 ? sum : sum * std::polar(1.0, phase)) / kPi;
}

int default_delta_tilde(int delta, int blocks) { return std::max(delta, std::min(3 * delta, blocks / 6)); }

VertexTables vertex_tables(const VertexParams& p) {
  const auto scalar_grid = make_grid(2 * p.blocks, p.interval, p.rule);
  CircleToEightParams c2e;
  c2e.r1 = p.r1;
  c2e.r2 = p.r2;
  c2e.interval = p.interval;
  c2e.z_offset = 0.0;
  c2e.z_scale = 1.0;
  const auto f = circle_to_eight_functions(c2e);
  VertexTables t;
  t.x1 = cell_decompose(f.x, 2, scalar_grid).cells(1, 0).coefficients();
  t.y1 = cell_decompose(f.y, 2, scalar_grid).cells(1, 0).coefficients();
  const ComplexProfile half_r(0.5 * p.r);
  t.x2 = {{0, ComplexProfile(p.x0)}, {1, half_r}, {-1, half_r}};
  t.y2 = {{1, ComplexProfile(0.0, -0.5 * p.r)}, {-1, ComplexProfile(0.0, 0.5 * p.r)}};
  for (const auto* tab : {&t.x1, &t.y1, &t.x2, &t.y2})
    for (const auto& [n, c] : *tab) t.delta = std::max(t.delta, std::abs(n));
  return t;
}

namespace {

struct Kernel {
  CoefficientTable f1, f2;
  InterpolationProfile profile;
  double scale = 1.0;
  cplx operator()(int m, double q) const { return scale * interp_fourier_coeff(f1, f2, profile, m, q); }
};

// Off-diagonal generator with the interpolated series below the diagonal.
MatrixFourierFunction off_diagonal_generator(const std::shared_ptr<const Kernel>& k, const Interval& iv, int dt) {
  FourierFunction::Table lower, upper;
  for (int m = -dt; m <= dt; ++m) {
    ComplexProfile c(ProfileFunction::callable([k, m](double q) { return (*k)(m, q).real(); }, std::nullopt,
                                               "interp_re[" + std::to_string(m) + "]"),
                     ProfileFunction::callable([k, m](double q) { return (*k)(m, q).imag(); }, std::nullopt,
                                               "interp_im[" + std::to_string(m) + "]"));
    upper.emplace(-m, c.conj());
    lower.emplace(m, std::move(c));
  }
  const auto zero = FourierFunction::zero(iv);
  return MatrixFourierFunction(2, {zero, FourierFunction(iv, std::move(upper)), FourierFunction(iv, std::move(lower)),
                                   zero});
}

}  // namespace

StringVertex build_string_vertex(const VertexParams& p) {
  if (p.blocks < 2) throw DomainError("vertex needs at least two blocks");
  const auto scalar_grid = make_grid(2 * p.blocks, p.interval, p.rule);
  const auto grid = make_grid(p.blocks, p.interval, p.rule);
  VertexTables tables = vertex_tables(p);
  const int dt = p.delta_tilde < 0 ? default_delta_tilde(tables.delta, p.blocks) : p.delta_tilde;
  if (dt < tables.delta) throw DomainError("mode cutoff below the cutoff of the input series");
  if (dt >= p.blocks) throw DomainError("mode cutoff must be smaller than N");

  auto kx = std::make_shared<const Kernel>(Kernel{tables.x1, tables.x2, p.profile, 1.0});
  auto ky = std::make_shared<const Kernel>(Kernel{tables.y1, tables.y2, p.profile, p.y_scale});
  const auto gx = off_diagonal_generator(kx, p.interval, dt);
  const auto gy = off_diagonal_generator(ky, p.interval, dt);

  const auto z1_cells = cell_decompose(FourierFunction::constant(p.interval, ComplexProfile(p.z1)), 2, scalar_grid).cells;
  const auto z2f = FourierFunction::constant(p.interval, ComplexProfile(p.z2));
  const auto gz = multiply_profile(z1_cells, ComplexProfile(p.profile.theta1)) +
                  multiply_profile(MatrixFourierFunction::diagonal({z2f, z2f}), ComplexProfile(p.profile.theta2));

  std::vector<FuzzyMatrix> coords{regularize_matrix(gx, grid), regularize_matrix(gy, grid),
                                  regularize_matrix(gz, grid)};
  FuzzySpace space("string_vertex", {"X", "Y", "Z"}, std::move(coords), {gx, gy, gz}, grid);
  return {std::move(space), std::move(tables), dt, scalar_grid};
}

DecayCheck check_decay_bound(const CoefficientTable& f1, const CoefficientTable& f2, const InterpolationProfile& p,
                             int delta, int m_max, int samples, bool both_signs) {
  DecayCheck out;
  const Interval iv{p.q2, p.q3 > p.q2 ? p.q3 : p.q2 + 1.0};
  for (double q : sample_points(iv, samples)) {
    double cmax = 0.0;
    for (const auto* t : {&f1, &f2})
      for (const auto& [n, c] : *t) cmax = std::max(cmax, std::abs(c(q)));
    const double c = 2.0 / kPi * cmax;
    for (int am = delta + 1; am <= m_max; ++am)
      for (int m : {am, -am}) {
        if (m < 0 && !both_signs) continue;
        const double bound = c * (2 * delta + 1) / (static_cast<double>(m) * m);
        const double v = std::abs(interp_fourier_coeff(f1, f2, p, m, q));
        const double ratio = bound > 0 ? v / bound : (v > 0 ? INFINITY : 0.0);
        if (ratio > out.worst_ratio) {
          out.worst_ratio = ratio;
          out.worst_m = m;
          out.worst_q = q;
        }
      }
  }
  out.pass = out.worst_ratio <= 1.0;
  return out;
}

}  // namespace fuzzy
