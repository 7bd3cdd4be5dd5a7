#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

// Block diagonal sum; coordinates are paired by position and the result is
// tagged block_major with S = 2. Generators, when both spaces carry S = 1
// generators on one grid, become diag(F1, F2) (whose regularization is the
// z-ordered form).
FuzzySpace direct_sum(const FuzzySpace& s1, const FuzzySpace& s2);

// Perfect shuffle a * N + n -> n * S + a for dim = S * N. Exchanging inner and
// outer index again, i.e. z_order with block size N, undoes it; z_order with
// the same S is an involution only when S == N.
Eigen::MatrixXcd z_order(const Eigen::MatrixXcd& m, int block_size);
Eigen::MatrixXcd z_unorder(const Eigen::MatrixXcd& m, int block_size);
FuzzyMatrix z_order(const FuzzyMatrix& m, int block_size);
FuzzyMatrix z_unorder(const FuzzyMatrix& m, int block_size);
FuzzySpace z_order(const FuzzySpace& s);

// I_N (x) U in z-ordered layout.
Eigen::MatrixXcd lift_constant_unitary(const Eigen::MatrixXcd& u, int blocks);

// (1/sqrt 2) [[1, -1], [1, 1]]; U^dagger diag(-f, f) U = antidiag(f, f).
Eigen::Matrix2cd interlacing_unitary();

// U^dagger X U for every coordinate with the lifted interlacing unitary. A
// block_major S = 2 space is z-ordered first.
FuzzySpace interlace(const FuzzySpace& s);

// U^dagger M U with U acting on every S-block starting at row `first_row`;
// rows above stay untouched. (dim - first_row) must be a multiple of S.
Eigen::MatrixXcd block_transform(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& u, int first_row);
FuzzySpace block_transform(const FuzzySpace& s, const Eigen::MatrixXcd& u, int first_row);

// U F U^dagger at coefficient level. U must be pointwise unitary.
MatrixFourierFunction function_unitary_conjugate(const MatrixFourierFunction& f, const MatrixFourierFunction& u);
MatrixFourierFunction constant_unitary_conjugate(const MatrixFourierFunction& f, const Eigen::MatrixXcd& u);
// Largest |U U^dagger - 1| entry on a q x phi sample grid.
double unitarity_defect(const MatrixFourierFunction& u, int q_samples = 17, int phi_samples = 16);

struct DiagonalizationReport {
  std::string policy;
  Eigen::VectorXd eigenvalues;
  double residual = 0.0;  // max |A - P diag(lambda) P^dagger|
  int degenerate_clusters = 0;
  bool real_path = false;
  Eigen::MatrixXcd basis;  // columns: eigenvectors
};

extern const char* const kPhaseFixPolicy;

// Eigenbasis of a Hermitian matrix: ascending eigenvalues, degenerate
// clusters re-spanned deterministically from projected unit vectors, each
// column rotated so that its largest entry (first one on ties) is real and
// positive.
DiagonalizationReport diagonalize(const Eigen::MatrixXcd& a, double cluster_tol = 1e-10);

struct DiagonalizedSpace {
  FuzzySpace space;
  DiagonalizationReport report;
};

// Conjugates every coordinate with the eigenbasis P of coordinate `index`.
DiagonalizedSpace diagonalize_coordinate(const FuzzySpace& s, int index);

struct PolyTerm {
  cplx coeff = 1.0;
  std::vector<std::string> factors;  // empty: identity
  bool symmetrized = false;          // (A1...Ak + Ak...A1) / 2
};

struct PolyStep {
  std::string target;
  std::vector<PolyTerm> terms;
};

// target = diag(1 / (shift + scale * source_nn)) for a diagonal source.
struct DiagonalMapStep {
  std::string target;
  std::string source;
  double shift = 1.0;
  double scale = 1.0;
  double near_singular = 0.1;
};

struct DiagonalizeStep {
  std::string coordinate;
};

using RecipeStep = std::variant<PolyStep, DiagonalMapStep, DiagonalizeStep>;

struct TransformRecipe {
  std::vector<RecipeStep> steps;
  std::vector<std::string> outputs;
};

struct TransformReport {
  std::vector<int> near_singular_rows;
  std::vector<DiagonalizationReport> diagonalizations;
};

// Evaluates the steps in order on a table of named matrices seeded with the
// space coordinates; a diagonalize step conjugates every table entry. The
// outputs form the resulting space.
FuzzySpace matrix_poly_transform(const FuzzySpace& s, const TransformRecipe& recipe, TransformReport* report = nullptr);

// Z' = alpha Z^2 - X, X' = Z, Y' = Y, then diagonalize Z'.
TransformRecipe cylinder_to_u_recipe(double alpha);
// Stereographic projection of the four Clifford coordinates X1, Y1, X2, Y2
// read as X^1..X^4: X^I = diag 1/(1 + X^4), then X = X^I X^3, Y = X^I X^2,
// Z = X^I X^1 (Jordan products), then diagonalize Z. `mapping` names the
// coordinates read as X^1..X^4.
TransformRecipe clifford_projection_recipe(const std::array<std::string, 4>& mapping = {"X1", "Y1", "X2", "Y2"});

// Extends every generator across q_E by reflection: f(2 q_E - q) beyond q_E.
// The coordinate at `height_index` is reflected oddly, 2 z(q_E) - z(2 q_E - q),
// so the surface continues upward. The result is regularized with twice the
// block count on [q1, 2 q_E - q1].
FuzzySpace mirror_concat(const FuzzySpace& s, double q_e, int height_index = -1);

// Multiplies every coefficient by window(q) >= 0 with window(q1) = window(q2) = 0.
MatrixFourierFunction close_caps(const MatrixFourierFunction& f, const ProfileFunction& window);
FuzzySpace close_caps(const FuzzySpace& s, const ProfileFunction& window);

}  // namespace fuzzy
