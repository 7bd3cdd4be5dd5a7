#pragma once

#include <string>

#include "fuzzy/fourier.hpp"

namespace fuzzy {

enum class GridRule {
  symmetric,      // q1 + D (n + m) / (2N)
  left,           // q1 + D n / N
  lower,          // q1 + D min(n, m) / N
  custom_affine,  // q1 + c0 + D (cn n + cm m) / N
};

struct AffineRule {
  double c_n = 0.5;
  double c_m = 0.5;
  double c_0 = 0.0;
};

std::string to_string(GridRule rule);
GridRule grid_rule_from_string(const std::string& name);

// Sample points q(n, m) for 0-based indices n, m < N, D = q2 - q1. Row n = N
// would sit at q2, so the last row lies one step below the upper end.
class DiscretizingGrid {
 public:
  DiscretizingGrid(int n, Interval interval, GridRule rule, AffineRule affine = {});

  int size() const { return n_; }
  const Interval& interval() const { return interval_; }
  GridRule rule() const { return rule_; }
  const AffineRule& affine() const { return affine_; }

  double q(int n, int m) const;

  bool is_affine() const { return rule_ != GridRule::lower; }
  // dq/dn * N and dq/dm * N for affine rules.
  double beta_left() const;
  double beta_right() const;
  // Common value when beta_left == beta_right.
  double beta() const;
  bool is_symmetric() const;

  DiscretizingGrid resized(int n) const { return {n, interval_, rule_, affine_}; }

 private:
  int n_;
  Interval interval_;
  GridRule rule_;
  AffineRule affine_;
};

DiscretizingGrid make_grid(int n, Interval interval, GridRule rule = GridRule::symmetric, AffineRule affine = {});

}  // namespace fuzzy
