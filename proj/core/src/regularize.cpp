#include "fuzzy/regularize.hpp"

#include <cstdlib>

#include "fuzzy/errors.hpp"

namespace fuzzy {

namespace {

void check_grid(const Interval& iv, int cutoff, const DiscretizingGrid& grid) {
  if (!iv.same_as(grid.interval())) throw ShapeError("function interval differs from grid interval");
  if (cutoff >= grid.size())
    throw DomainError("grid size " + std::to_string(grid.size()) + " must exceed cutoff " + std::to_string(cutoff));
}

void fill_entry(Eigen::MatrixXcd& out, const FourierFunction& f, const DiscretizingGrid& grid, int s, int a, int b) {
  const int n_blocks = grid.size();
  for (const auto& [k, c] : f.coefficients()) {
    for (int n = std::max(0, k); n < n_blocks && n - k < n_blocks; ++n) {
      const int m = n - k;
      out(n * s + a, m * s + b) = c(grid.q(n, m));
    }
  }
}

}  // namespace

FuzzyMatrix regularize_scalar(const FourierFunction& f, const DiscretizingGrid& grid) {
  check_grid(f.interval(), f.cutoff(), grid);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(grid.size(), grid.size());
  fill_entry(out, f, grid, 1, 0, 0);
  return FuzzyMatrix(std::move(out));
}

FuzzyMatrix regularize_matrix(const MatrixFourierFunction& f, const DiscretizingGrid& grid) {
  check_grid(f.interval(), f.cutoff(), grid);
  const int s = f.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(grid.size() * s, grid.size() * s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) fill_entry(out, f(a, b), grid, s, a, b);
  return FuzzyMatrix(std::move(out), s, Layout::z_ordered);
}

Eigen::MatrixXcd toeplitz_basis(int a, int n) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (std::abs(a) >= n) throw DomainError("band index out of range");
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
  for (int r = std::max(0, -a); r < n && r + a < n; ++r) e(r, r + a) = 1.0;
  return e;
}

Eigen::MatrixXcd border_mask(const Eigen::MatrixXcd& m, int delta) {
  const int d = static_cast<int>(m.rows());
  if (delta < 0 || (delta > 0 && 2 * delta >= d)) throw DomainError("border must satisfy 0 <= delta < dim/2");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  const int w = d - 2 * delta;
  out.block(delta, delta, w, w) = m.block(delta, delta, w, w);
  return out;
}

double within_border_norm(const Eigen::MatrixXcd& m, int delta) {
  const int d = static_cast<int>(m.rows());
  if (delta < 0 || (delta > 0 && 2 * delta >= d)) throw DomainError("border must satisfy 0 <= delta < dim/2");
  const int w = d - 2 * delta;
  if (w == 0) return 0.0;
  return m.block(delta, delta, w, w).cwiseAbs().rowwise().sum().maxCoeff();
}

double within_border_max(const Eigen::MatrixXcd& m, int delta) {
  const int d = static_cast<int>(m.rows());
  if (delta < 0 || (delta > 0 && 2 * delta >= d)) throw DomainError("border must satisfy 0 <= delta < dim/2");
  const int w = d - 2 * delta;
  if (w == 0) return 0.0;
  return m.block(delta, delta, w, w).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("commutator of matrices of different size");
  return a * b - b * a;
}

CellDecomposition cell_decompose(const FourierFunction& f, int block_size, const DiscretizingGrid& scalar_grid) {
  if (!scalar_grid.is_affine()) throw DomainError("cell decomposition needs an affine grid rule");
  const int s = block_size;
  if (s < 1 || scalar_grid.size() % s != 0) throw ShapeError("grid size not divisible by block size");
  if (!f.interval().same_as(scalar_grid.interval())) throw ShapeError("function interval differs from grid interval");
  const int n_blocks = scalar_grid.size() / s;
  const auto& rule = scalar_grid.affine();
  const double step = scalar_grid.interval().length() / scalar_grid.size();

  std::vector<FourierFunction> entries;
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      const double shift = step * (rule.c_n * a + rule.c_m * b);
      FourierFunction::Table t;
      for (const auto& [n, c] : f.coefficients()) {
        const int r = n - (a - b);
        if (r % s != 0) continue;
        t.emplace(r / s, shift == 0.0 ? c : c.compose(ProfileFunction::affine(1.0, shift)));
      }
      entries.emplace_back(f.interval(), std::move(t));
    }
  DiscretizingGrid block_grid(n_blocks, scalar_grid.interval(), scalar_grid.rule(), rule);
  return {MatrixFourierFunction(s, std::move(entries)), block_grid};
}

}  // namespace fuzzy
