#pragma once

#include <utility>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

// Entry (n, m) of Q(f) is f_{n-m}(q(n, m)); in particular e^{i phi} lands on
// the first subdiagonal and Q(f) = sum_k f_k e_{-k} with e_a from
// toeplitz_basis.
FuzzyMatrix regularize_scalar(const FourierFunction& f, const DiscretizingGrid& grid);
// Block (n, m) holds F_{ab, n-m}(q(n, m)) at z-ordered position (n S + a, m S + b).
FuzzyMatrix regularize_matrix(const MatrixFourierFunction& f, const DiscretizingGrid& grid);

// e_a = sum_n |n><n + a|
Eigen::MatrixXcd toeplitz_basis(int a, int n);

// Keeps entries whose row and column both lie in [delta, dim - delta).
Eigen::MatrixXcd border_mask(const Eigen::MatrixXcd& m, int delta);
// Row-max of absolute row sums restricted to the interior block.
double within_border_norm(const Eigen::MatrixXcd& m, int delta);
// Largest interior entry modulus.
double within_border_max(const Eigen::MatrixXcd& m, int delta);
Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

struct CellDecomposition {
  MatrixFourierFunction cells;
  DiscretizingGrid block_grid;
};

// Writes a scalar function regularized on an affine grid of size S*N as an
// S x S matrix valued function regularized on N blocks:
// F_ab,k(q) = f_{S k + a - b}(q + shift_ab). Both regularizations agree entrywise.
CellDecomposition cell_decompose(const FourierFunction& f, int block_size, const DiscretizingGrid& scalar_grid);

}  // namespace fuzzy
