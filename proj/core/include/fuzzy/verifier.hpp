#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fuzzy/fuzzy_matrix.hpp"

namespace fuzzy {

struct SweepRecord {
  int n = 0;
  std::map<std::string, double> values;
};

struct SweepReport {
  std::string builder;
  std::string criterion;
  std::vector<int> schedule;
  int border = 0;
  std::vector<SweepRecord> records;
  std::map<std::string, double> order_estimates;  // fitted exponent p in value ~ N^-p
  std::map<std::string, bool> verdicts;
  std::string scaling;

  bool pass() const;
  std::string to_json() const;
  std::string table() const;
};

using MatrixBuilder = std::function<Eigen::MatrixXcd(int n)>;
using SpaceBuilder = std::function<FuzzySpace(int n)>;

// Least squares slope of -log(value) against log(N); NaN when a value is 0.
double fitted_order(const std::vector<int>& ns, const std::vector<double>& values);

// Records within_border_norm per N; passes when successive differences do not
// grow over the last three steps.
SweepReport check_norm_convergence(const MatrixBuilder& builder, const std::vector<int>& ns, int delta,
                                   const std::string& id = "matrix");

// r(N) = |Q(f)Q(g) - Q(fg)| within border; passes when r(2N)/r(N) <= 0.6.
SweepReport check_product_convergence(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                                      const std::vector<int>& ns, int delta);

// p(N) = |-i s(N) [Q(f), Q(g)] - Q({f, g})| within border, s(N) = N / (2 beta);
// passes when p decreases by a factor <= 0.6 per doubling.
SweepReport check_poisson_convergence(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                                      const std::vector<int>& ns, int delta);

// R = |Q(f)Q(g) - Q(fg) - i (beta/N) Q({f, g})| within border.
double semiclassical_residual(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                              int delta);
// Passes when R(2N)/R(N) <= 0.35.
SweepReport check_semiclassical(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                                const std::vector<int>& ns, int delta);

// Largest interior commutator entry over all coordinate pairs per N (row-sum
// norm recorded alongside); passes when the entry maximum is non-increasing
// up to 5 %.
SweepReport check_commutator_decay(const SpaceBuilder& builder, const std::vector<int>& ns, int delta,
                                   const std::string& id = "space");

// sup over a q x phi grid of the spectral norm of [F(q, phi), G(q, phi)].
double matrix_fn_commutator_sup(const MatrixFourierFunction& f, const MatrixFourierFunction& g, int q_samples = 64,
                                int phi_samples = 64);

}  // namespace fuzzy
