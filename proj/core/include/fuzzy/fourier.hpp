#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuzzy/profile.hpp"

namespace fuzzy {

using cplx = std::complex<double>;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double q, double tol = 1e-12) const;
  bool same_as(const Interval& o, double tol = 1e-12) const;
};

Interval make_interval(double lo, double hi);

// Complex valued profile as a (real, imaginary) pair.
class ComplexProfile {
 public:
  ComplexProfile() = default;
  ComplexProfile(ProfileFunction re, ProfileFunction im = {});  // NOLINT
  ComplexProfile(cplx c);  // NOLINT
  ComplexProfile(double c);  // NOLINT

  const ProfileFunction& re() const { return re_; }
  const ProfileFunction& im() const { return im_; }
  cplx operator()(double q) const { return {re_(q), im_(q)}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool differentiable() const { return re_.differentiable() && im_.differentiable(); }
  bool serializable() const { return re_.serializable() && im_.serializable(); }

  ComplexProfile conj() const;
  ComplexProfile derivative() const;
  ComplexProfile compose(const ProfileFunction& inner) const;

  friend ComplexProfile operator+(const ComplexProfile& a, const ComplexProfile& b);
  friend ComplexProfile operator-(const ComplexProfile& a, const ComplexProfile& b);
  friend ComplexProfile operator*(const ComplexProfile& a, const ComplexProfile& b);
  friend ComplexProfile operator*(cplx s, const ComplexProfile& a);

 private:
  ProfileFunction re_, im_;
};

// f(q, phi) = sum_n f_n(q) e^{i n phi} on [q1, q2] x S^1 with finitely many
// non-zero modes.
class FourierFunction {
 public:
  using Table = std::map<int, ComplexProfile>;

  FourierFunction() = default;
  FourierFunction(Interval interval, Table coeffs);

  static FourierFunction zero(Interval interval);
  static FourierFunction constant(Interval interval, ComplexProfile c);
  static FourierFunction mode(Interval interval, int n, ComplexProfile c);

  const Interval& interval() const { return interval_; }
  const Table& coefficients() const { return coeffs_; }
  // Largest |n| with a non-zero coefficient, 0 for the zero function.
  int cutoff() const;
  bool has_mode(int n) const { return coeffs_.count(n) != 0; }

  cplx coeff(int n, double q) const;
  cplx operator()(double q, double phi) const;

  // f_n = conj(f_{-n}) checked on a sample grid of q values.
  bool is_real_valued(double tol = 1e-12, int samples = 17) const;
  bool q_independent() const;
  bool differentiable() const;
  bool serializable() const;

  FourierFunction with_interval(Interval interval) const;

 private:
  Interval interval_;
  Table coeffs_;
};

FourierFunction operator+(const FourierFunction& f, const FourierFunction& g);
FourierFunction operator-(const FourierFunction& f, const FourierFunction& g);
FourierFunction operator*(cplx s, const FourierFunction& f);

cplx eval(const FourierFunction& f, double q, double phi);
FourierFunction d_phi(const FourierFunction& f);
FourierFunction d_q(const FourierFunction& f);
FourierFunction mul(const FourierFunction& f, const FourierFunction& g);
FourierFunction conj(const FourierFunction& f);
FourierFunction truncate(const FourierFunction& f, int delta);
// {f, g} = d_phi f d_q g - d_q f d_phi g
FourierFunction poisson_bracket(const FourierFunction& f, const FourierFunction& g);
// f(q + shift, phi), same interval.
FourierFunction shift_q(const FourierFunction& f, double shift);
FourierFunction multiply_profile(const FourierFunction& f, const ComplexProfile& p);

// S x S matrix of Fourier functions sharing one interval.
class MatrixFourierFunction {
 public:
  MatrixFourierFunction() = default;
  MatrixFourierFunction(int size, std::vector<FourierFunction> entries);

  static MatrixFourierFunction scalar(const FourierFunction& f);
  static MatrixFourierFunction diagonal(const std::vector<FourierFunction>& d);
  static MatrixFourierFunction zero(Interval interval, int size);
  static MatrixFourierFunction constant(Interval interval, const Eigen::MatrixXcd& c);

  int size() const { return size_; }
  const Interval& interval() const { return entries_.front().interval(); }
  const FourierFunction& operator()(int a, int b) const { return entries_[a * size_ + b]; }
  FourierFunction& operator()(int a, int b) { return entries_[a * size_ + b]; }
  int cutoff() const;

  Eigen::MatrixXcd eval(double q, double phi) const;
  Eigen::MatrixXcd coeff(int n, double q) const;
  bool is_hermitian(double tol = 1e-12, int samples = 17) const;

 private:
  int size_ = 0;
  std::vector<FourierFunction> entries_;
};

MatrixFourierFunction operator+(const MatrixFourierFunction& f, const MatrixFourierFunction& g);
MatrixFourierFunction operator*(cplx s, const MatrixFourierFunction& f);
MatrixFourierFunction mul(const MatrixFourierFunction& f, const MatrixFourierFunction& g);
MatrixFourierFunction adjoint(const MatrixFourierFunction& f);
MatrixFourierFunction truncate(const MatrixFourierFunction& f, int delta);
MatrixFourierFunction multiply_profile(const MatrixFourierFunction& f, const ComplexProfile& p);
// Maps every entry through fn.
template <class Fn>
MatrixFourierFunction map_entries(const MatrixFourierFunction& f, Fn fn) {
  std::vector<FourierFunction> e;
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b) e.push_back(fn(f(a, b)));
  return MatrixFourierFunction(f.size(), std::move(e));
}

// Sample q values used by pointwise checks: `samples` points spread evenly
// over the closed interval.
std::vector<double> sample_points(const Interval& iv, int samples);

}  // namespace fuzzy
