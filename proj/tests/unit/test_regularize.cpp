#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "fuzzy/errors.hpp"
#include "fuzzy/regularize.hpp"

using namespace fuzzy;

namespace {

// Direct entry formula for the oracle: (n, m) -> f_{n-m}(q(n, m)).
Eigen::MatrixXcd oracle(const FourierFunction& f, const DiscretizingGrid& g) {
  const int n = g.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (f.has_mode(r - c)) m(r, c) = f.coeff(r - c, g.q(r, c));
  return m;
}

FourierFunction sample_function(Interval iv) {
  FourierFunction::Table t;
  t.emplace(0, ComplexProfile(ProfileFunction::polynomial({0.5, -1.0, 2.0})));
  t.emplace(2, ComplexProfile(ProfileFunction::affine(0.3, 0.1), 0.7));
  t.emplace(-1, ComplexProfile(ProfileFunction::affine(1.0, 0.0).cos()));
  t.emplace(-3, ComplexProfile(cplx(0.0, -0.4)));
  return {iv, t};
}

}  // namespace

TEST_CASE("grid rules place samples with denominator N") {
  const Interval iv{0.0, 1.0};
  const auto s = make_grid(10, iv, GridRule::symmetric);
  CHECK(s.q(2, 3) == doctest::Approx(0.25));
  CHECK(s.q(0, 0) == 0.0);
  CHECK(s.beta() == doctest::Approx(0.5));
  CHECK(s.is_symmetric());
  const auto l = make_grid(10, iv, GridRule::left);
  CHECK(l.q(2, 7) == doctest::Approx(0.2));
  CHECK_FALSE(l.is_symmetric());
  CHECK_THROWS_AS(l.beta(), DomainError);
  const auto lo = make_grid(10, iv, GridRule::lower);
  CHECK(lo.q(4, 7) == doctest::Approx(0.4));
  CHECK(lo.q(7, 4) == doctest::Approx(0.4));
  CHECK_THROWS_AS(lo.beta_left(), DomainError);
  const auto w = make_grid(30, {-1.0, 3.0});
  CHECK(w.q(5, 9) == doctest::Approx(4.0 * 14 / 60 - 1.0));
  CHECK(w.beta() == doctest::Approx(2.0));
  const auto a = make_grid(8, iv, GridRule::custom_affine, {0.25, 0.75, 0.1});
  CHECK(a.q(4, 0) == doctest::Approx(0.1 + 0.125));
  CHECK(a.q(0, 4) == doctest::Approx(0.1 + 0.375));
  CHECK(grid_rule_from_string(to_string(GridRule::lower)) == GridRule::lower);
  CHECK_THROWS_AS(grid_rule_from_string("diagonal"), ConfigError);
  CHECK_THROWS_AS(make_grid(1, iv), DomainError);
}

TEST_CASE("Q(e^{i phi}) is the first subdiagonal") {
  const Interval iv{0.0, 1.0};
  const auto g = make_grid(7, iv);
  const auto q = regularize_scalar(unit::e_phi(iv, 1), g);
  CHECK(unit::max_abs(q.data() - toeplitz_basis(-1, 7)) == 0.0);
  CHECK(q(1, 0) == cplx(1.0));
  CHECK(q(0, 1) == cplx(0.0));
  CHECK(unit::max_abs(toeplitz_basis(2, 5) - toeplitz_basis(-2, 5).transpose()) == 0.0);
  CHECK(toeplitz_basis(2, 5)(0, 2) == cplx(1.0));
}

TEST_CASE("scalar regularization matches the entry formula on every rule") {
  const Interval iv{-1.0, 2.0};
  const auto f = sample_function(iv);
  for (auto rule : {GridRule::symmetric, GridRule::left, GridRule::lower}) {
    const auto g = make_grid(12, iv, rule);
    CHECK(unit::max_abs(regularize_scalar(f, g).data() - oracle(f, g)) == 0.0);
  }
}

TEST_CASE("real valued functions give Hermitian matrices on symmetric grids") {
  const Interval iv{0.0, 1.0};
  const auto f = sample_function(iv);
  const auto h = f + conj(f);
  const auto q = regularize_scalar(h, make_grid(15, iv));
  CHECK(q.is_hermitian());
  CHECK(hermiticity_defect(q.data()) < 1e-15);
  CHECK_FALSE(regularize_scalar(f, make_grid(15, iv)).is_hermitian());
}

TEST_CASE("cell decomposition reproduces the scalar matrix") {
  const Interval iv{-1.0, 3.0};
  const auto f = sample_function(iv);
  for (int s : {2, 3}) {
    const auto g = make_grid(12 * s, iv);
    const auto cd = cell_decompose(f, s, g);
    CHECK(cd.cells.size() == s);
    CHECK(cd.block_grid.size() == 12);
    const auto blocks = regularize_matrix(cd.cells, cd.block_grid);
    CHECK(unit::max_abs(blocks.data() - regularize_scalar(f, g).data()) < 1e-14);
    CHECK(blocks.meta().block_size == s);
  }
  CHECK_THROWS_AS(cell_decompose(f, 5, make_grid(12, iv)), ShapeError);
  CHECK_THROWS_AS(cell_decompose(f, 2, make_grid(12, iv, GridRule::lower)), DomainError);
}

TEST_CASE("border helpers") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(6, 6, cplx(1.0));
  m(0, 0) = 100.0;
  m(2, 3) = cplx(0.0, -3.0);
  const auto b = border_mask(m, 1);
  CHECK(b(0, 0) == cplx(0.0));
  CHECK(b(1, 1) == cplx(1.0));
  CHECK(b(5, 2) == cplx(0.0));
  CHECK(within_border_max(m, 1) == doctest::Approx(3.0));
  CHECK(within_border_norm(m, 1) == doctest::Approx(6.0));
  CHECK(within_border_norm(m, 0) == doctest::Approx(105.0));
  CHECK_THROWS_AS(within_border_norm(m, 3), DomainError);
  CHECK_THROWS_AS(commutator(m, Eigen::MatrixXcd::Zero(2, 2)), ShapeError);
}

TEST_CASE("regularization preconditions") {
  const Interval iv{0.0, 1.0};
  CHECK_THROWS_AS(regularize_scalar(unit::e_phi(iv, 4), make_grid(4, iv)), DomainError);
  CHECK_THROWS_AS(regularize_scalar(unit::e_phi(iv, 1), make_grid(4, {0.0, 2.0})), ShapeError);
  CHECK_THROWS_AS(toeplitz_basis(3, 3), DomainError);
}
