#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"

#include "fuzzy/errors.hpp"
#include "fuzzy/serialization.hpp"

using namespace fuzzy;
using doctest::Approx;

TEST_CASE("spline h hits its knots and stays flat outside") {
  const auto h = spline_h();
  CHECK(h(-1.0) == Approx(0.0).epsilon(1e-15));
  CHECK(h(-0.5) == Approx(0.1));
  CHECK(h(0.0) == Approx(0.5));
  CHECK(h(0.5) == Approx(0.9));
  CHECK(h(1.0) == Approx(1.0));
  CHECK(h(-3.0) == 0.0);
  CHECK(h(7.0) == 1.0);
  CHECK(std::abs(h(0.25) - 0.7267857142857144) < 1e-15);
  CHECK(std::abs(h(-0.75) - 0.017857142857142863) < 1e-15);
  const auto dh = h.derivative();
  CHECK(std::abs(dh(-1.0)) < 1e-14);
  CHECK(std::abs(dh(1.0)) < 1e-14);
  for (double s = -0.95; s < 1.0; s += 0.1) CHECK(dh(s) >= 0.0);
}

TEST_CASE("profile derivatives agree with finite differences") {
  const auto p = ProfileFunction::polynomial({1.0, -2.0, 0.5, 0.25});
  const auto f = (p.cos() * ProfileFunction::affine(3.0, 1.0) + p.compose(spline_h())).reciprocal();
  const auto df = f.derivative();
  for (double q : {-0.7, -0.2, 0.3, 0.8}) CHECK(df(q) == Approx(unit::fd(f, q)).epsilon(1e-7));
}

TEST_CASE("capabilities of profile kinds") {
  CHECK_THROWS_AS(ProfileFunction::step(0.0, 0.0, 1.0).derivative(), CapabilityError);
  const auto c = ProfileFunction::callable([](double q) { return q * q; });
  CHECK_FALSE(c.differentiable());
  CHECK_FALSE(c.serializable());
  CHECK_THROWS_AS(c.derivative(), CapabilityError);
  CHECK_THROWS_AS(to_json(c), CapabilityError);
  const auto d = ProfileFunction::callable([](double q) { return q * q; }, [](double q) { return 2 * q; });
  CHECK(d.derivative()(1.5) == Approx(3.0));
  CHECK_THROWS_AS(ProfileFunction(0.0).reciprocal(), DomainError);
  CHECK_THROWS_AS(ProfileFunction::piecewise({0.0, 1.0}, {{1.0}, {2.0}}), ShapeError);
  CHECK_THROWS_AS(ProfileFunction::clamped_spline({0.0, 0.0}, {1.0, 2.0}, 0, 0), DomainError);
}

TEST_CASE("Fourier evaluation, products and brackets") {
  const Interval iv{0.0, 1.0};
  const auto f = unit::e_phi(iv, 1, ProfileFunction::affine(1.0, 2.0));  // (q + 2) e^{i phi}
  const auto g = unit::e_phi(iv, -2, cplx(0.0, 3.0));                      // 3i e^{-2 i phi}
  const double q = 0.3, phi = 1.1;
  const cplx e = std::exp(cplx(0, phi));
  CHECK(std::abs(eval(f, q, phi) - (q + 2) * e) < 1e-15);
  CHECK(std::abs(eval(mul(f, g), q, phi) - eval(f, q, phi) * eval(g, q, phi)) < 1e-14);
  CHECK(mul(f, g).has_mode(-1));
  CHECK(std::abs(eval(d_phi(f), q, phi) - cplx(0, 1) * (q + 2) * e) < 1e-15);
  CHECK(std::abs(eval(d_q(f), q, phi) - e) < 1e-15);
  // d_q g = 0, d_phi g = 6 e^{-2 i phi}
  CHECK(std::abs(eval(poisson_bracket(f, g), q, phi) + 6.0 / e) < 1e-14);
  CHECK(truncate(mul(f, g) + f, 1).cutoff() == 1);
  CHECK(conj(f).has_mode(-1));
  CHECK_FALSE(f.is_real_valued());
  CHECK((f + conj(f)).is_real_valued());
  CHECK(f.cutoff() == 1);
  CHECK(FourierFunction::zero(iv).cutoff() == 0);
  CHECK(std::abs(eval(shift_q(f, 0.5), 0.2, 0.0) - 2.7) < 1e-15);
}

TEST_CASE("Fourier domain and shape errors") {
  const Interval iv{0.0, 1.0};
  CHECK_THROWS_AS(make_interval(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(unit::e_phi(iv, 1)(1.5, 0.0), DomainError);
  CHECK_THROWS_AS(unit::e_phi(iv, 1) + unit::e_phi({0.0, 2.0}, 1), ShapeError);
  CHECK_THROWS_AS(truncate(unit::e_phi(iv, 1), -1), DomainError);
  CHECK_THROWS_AS(MatrixFourierFunction(2, {unit::e_phi(iv, 0)}), ShapeError);
}

TEST_CASE("matrix valued functions") {
  const Interval iv{-1.0, 1.0};
  const auto a = unit::e_phi(iv, 1, ProfileFunction::affine(1.0, 0.0));
  const auto b = unit::e_phi(iv, 0, 2.0);
  const MatrixFourierFunction f(2, {b, a, conj(a), b});
  CHECK(f.is_hermitian());
  const auto ff = mul(f, f);
  const double q = 0.4, phi = 0.9;
  CHECK(unit::max_abs(ff.eval(q, phi) - f.eval(q, phi) * f.eval(q, phi)) < 1e-14);
  CHECK(unit::max_abs(adjoint(f).eval(q, phi) - f.eval(q, phi).adjoint()) < 1e-15);
  CHECK(f.cutoff() == 1);
}

TEST_CASE("JSON round trips preserve values") {
  const Interval iv{-1.0, 3.0};
  FourierFunction::Table t;
  t.emplace(0, ComplexProfile(spline_h().compose(ProfileFunction::affine(2.0, -3.0))));
  t.emplace(3, ComplexProfile(ProfileFunction::polynomial({0.1, 0.2}), ProfileFunction::step(1.0, -1.0, 1.0)));
  t.emplace(-2, ComplexProfile(ProfileFunction::select(0.5, 1.0, ProfileFunction::affine(1, 0).sin())));
  const FourierFunction f(iv, t);
  const auto g = fourier_from_json(to_json(f));
  for (double q : sample_points(iv, 13))
    for (double phi : {0.0, 0.7, 2.9}) CHECK(eval(g, q, phi) == eval(f, q, phi));
  CHECK(to_json(g) == to_json(f));
  const auto m = MatrixFourierFunction(2, {f, f, f, f});
  CHECK(to_json(matrix_fourier_from_json(to_json(m))) == to_json(m));
  CHECK_THROWS_AS(fourier_from_json("{\"interval\": [0, 1]}"), ConfigError);
  CHECK_THROWS_AS(profile_from_json("{\"kind\": \"wavelet\"}"), ConfigError);
  CHECK_THROWS_AS(profile_from_json("not json"), ConfigError);
}
