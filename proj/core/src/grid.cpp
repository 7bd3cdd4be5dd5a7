#include "fuzzy/grid.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzy/errors.hpp"

namespace fuzzy {

std::string to_string(GridRule rule) {
  switch (rule) {
    case GridRule::symmetric:
      return "symmetric";
    case GridRule::left:
      return "left";
    case GridRule::lower:
      return "lower";
    case GridRule::custom_affine:
      return "custom_affine";
  }
  return "unknown";
}

GridRule grid_rule_from_string(const std::string& name) {
  if (name == "symmetric") return GridRule::symmetric;
  if (name == "left") return GridRule::left;
  if (name == "lower") return GridRule::lower;
  if (name == "custom_affine") return GridRule::custom_affine;
  throw ConfigError("unknown grid rule '" + name + "'");
}

DiscretizingGrid::DiscretizingGrid(int n, Interval interval, GridRule rule, AffineRule affine)
    : n_(n), interval_(interval), rule_(rule), affine_(affine) {
  if (n < 2) throw DomainError("grid size must be at least 2");
  if (!(interval.lo < interval.hi)) throw DomainError("grid interval requires q1 < q2");
  switch (rule) {
    case GridRule::symmetric:
      affine_ = {0.5, 0.5, 0.0};
      break;
    case GridRule::left:
      affine_ = {1.0, 0.0, 0.0};
      break;
    case GridRule::lower:
      affine_ = {};
      break;
    case GridRule::custom_affine:
      break;
  }
}

double DiscretizingGrid::q(int n, int m) const {
  const double d = interval_.length();
  if (rule_ == GridRule::lower) return interval_.lo + d * std::min(n, m) / n_;
  return interval_.lo + affine_.c_0 + d * (affine_.c_n * n + affine_.c_m * m) / n_;
}

double DiscretizingGrid::beta_left() const {
  if (!is_affine()) throw DomainError("grid rule '" + to_string(rule_) + "' is not affine");
  return affine_.c_n * interval_.length();
}

double DiscretizingGrid::beta_right() const {
  if (!is_affine()) throw DomainError("grid rule '" + to_string(rule_) + "' is not affine");
  return affine_.c_m * interval_.length();
}

bool DiscretizingGrid::is_symmetric() const {
  return is_affine() && std::abs(affine_.c_n - affine_.c_m) < 1e-15;
}

double DiscretizingGrid::beta() const {
  if (!is_symmetric()) throw DomainError("grid rule has different left and right step");
  return beta_left();
}

DiscretizingGrid make_grid(int n, Interval interval, GridRule rule, AffineRule affine) {
  return {n, interval, rule, affine};
}

}  // namespace fuzzy
