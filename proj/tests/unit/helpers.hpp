#pragma once

#include <Eigen/Dense>

#include "fuzzy/fourier.hpp"

namespace unit {

inline double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline fuzzy::FourierFunction e_phi(fuzzy::Interval iv, int n, fuzzy::ComplexProfile c = 1.0) {
  return fuzzy::FourierFunction::mode(iv, n, std::move(c));
}

// Central difference.
template <class F>
double fd(F f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace unit
