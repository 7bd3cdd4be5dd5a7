#include "fuzzy/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fuzzy/errors.hpp"

namespace fuzzy {

bool Interval::contains(double q, double tol) const {
  const double slack = tol * (1.0 + std::abs(q));
  return q >= lo - slack && q <= hi + slack;
}

bool Interval::same_as(const Interval& o, double tol) const {
  return std::abs(lo - o.lo) <= tol * (1 + std::abs(lo)) && std::abs(hi - o.hi) <= tol * (1 + std::abs(hi));
}

Interval make_interval(double lo, double hi) {
  if (!(lo < hi)) throw DomainError("interval requires lo < hi");
  return {lo, hi};
}

std::vector<double> sample_points(const Interval& iv, int samples) {
  std::vector<double> q;
  if (samples == 1) return {0.5 * (iv.lo + iv.hi)};
  for (int i = 0; i < samples; ++i) q.push_back(iv.lo + iv.length() * i / (samples - 1));
  return q;
}

// ComplexProfile

ComplexProfile::ComplexProfile(ProfileFunction re, ProfileFunction im)
    : re_(std::move(re)), im_(std::move(im)) {}

ComplexProfile::ComplexProfile(cplx c) : re_(c.real()), im_(c.imag()) {}

ComplexProfile::ComplexProfile(double c) : re_(c), im_(0.0) {}

ComplexProfile ComplexProfile::conj() const { return {re_, -im_}; }

ComplexProfile ComplexProfile::derivative() const { return {re_.derivative(), im_.derivative()}; }

ComplexProfile ComplexProfile::compose(const ProfileFunction& inner) const {
  return {re_.compose(inner), im_.compose(inner)};
}

ComplexProfile operator+(const ComplexProfile& a, const ComplexProfile& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ComplexProfile operator-(const ComplexProfile& a, const ComplexProfile& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ComplexProfile operator*(const ComplexProfile& a, const ComplexProfile& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexProfile operator*(cplx s, const ComplexProfile& a) { return ComplexProfile(s) * a; }

// FourierFunction

FourierFunction::FourierFunction(Interval interval, Table coeffs) : interval_(interval) {
  if (!(interval.lo < interval.hi)) throw DomainError("interval requires lo < hi");
  for (auto& [n, c] : coeffs)
    if (!c.is_zero()) coeffs_.emplace(n, std::move(c));
}

FourierFunction FourierFunction::zero(Interval interval) { return {interval, {}}; }

FourierFunction FourierFunction::constant(Interval interval, ComplexProfile c) {
  return {interval, {{0, std::move(c)}}};
}

FourierFunction FourierFunction::mode(Interval interval, int n, ComplexProfile c) {
  return {interval, {{n, std::move(c)}}};
}

int FourierFunction::cutoff() const {
  int d = 0;
  for (const auto& [n, c] : coeffs_) d = std::max(d, std::abs(n));
  return d;
}

cplx FourierFunction::coeff(int n, double q) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx{} : it->second(q);
}

cplx FourierFunction::operator()(double q, double phi) const {
  if (!interval_.contains(q))
    throw DomainError("q = " + std::to_string(q) + " outside [" + std::to_string(interval_.lo) +
                      ", " + std::to_string(interval_.hi) + "]");
  cplx s{};
  for (const auto& [n, c] : coeffs_) s += c(q) * std::polar(1.0, n * phi);
  return s;
}

bool FourierFunction::is_real_valued(double tol, int samples) const {
  for (double q : sample_points(interval_, samples))
    for (const auto& [n, c] : coeffs_)
      if (std::abs(c(q) - std::conj(coeff(-n, q))) > tol) return false;
  return true;
}

bool FourierFunction::q_independent() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) {
    return kv.second.re().constant_value() && kv.second.im().constant_value();
  });
}

bool FourierFunction::differentiable() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second.differentiable(); });
}

bool FourierFunction::serializable() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second.serializable(); });
}

FourierFunction FourierFunction::with_interval(Interval interval) const { return {interval, coeffs_}; }

namespace {

void require_same_interval(const FourierFunction& f, const FourierFunction& g) {
  if (!f.interval().same_as(g.interval())) throw ShapeError("Fourier functions on different intervals");
}

}  // namespace

FourierFunction operator+(const FourierFunction& f, const FourierFunction& g) {
  require_same_interval(f, g);
  auto t = f.coefficients();
  for (const auto& [n, c] : g.coefficients()) {
    auto it = t.find(n);
    if (it == t.end())
      t.emplace(n, c);
    else
      it->second = it->second + c;
  }
  return {f.interval(), std::move(t)};
}

FourierFunction operator-(const FourierFunction& f, const FourierFunction& g) {
  return f + cplx(-1.0) * g;
}

FourierFunction operator*(cplx s, const FourierFunction& f) {
  FourierFunction::Table t;
  if (s == cplx{}) return FourierFunction::zero(f.interval());
  for (const auto& [n, c] : f.coefficients()) t.emplace(n, s * c);
  return {f.interval(), std::move(t)};
}

cplx eval(const FourierFunction& f, double q, double phi) { return f(q, phi); }

FourierFunction d_phi(const FourierFunction& f) {
  FourierFunction::Table t;
  for (const auto& [n, c] : f.coefficients())
    if (n != 0) t.emplace(n, cplx(0.0, n) * c);
  return {f.interval(), std::move(t)};
}

FourierFunction d_q(const FourierFunction& f) {
  FourierFunction::Table t;
  for (const auto& [n, c] : f.coefficients()) t.emplace(n, c.derivative());
  return {f.interval(), std::move(t)};
}

FourierFunction mul(const FourierFunction& f, const FourierFunction& g) {
  require_same_interval(f, g);
  FourierFunction::Table t;
  for (const auto& [n, a] : f.coefficients())
    for (const auto& [m, b] : g.coefficients()) {
      auto it = t.find(n + m);
      if (it == t.end())
        t.emplace(n + m, a * b);
      else
        it->second = it->second + a * b;
    }
  return {f.interval(), std::move(t)};
}

FourierFunction conj(const FourierFunction& f) {
  FourierFunction::Table t;
  for (const auto& [n, c] : f.coefficients()) t.emplace(-n, c.conj());
  return {f.interval(), std::move(t)};
}

FourierFunction truncate(const FourierFunction& f, int delta) {
  if (delta < 0) throw DomainError("truncation order must be non-negative");
  FourierFunction::Table t;
  for (const auto& [n, c] : f.coefficients())
    if (std::abs(n) <= delta) t.emplace(n, c);
  return {f.interval(), std::move(t)};
}

FourierFunction poisson_bracket(const FourierFunction& f, const FourierFunction& g) {
  return mul(d_phi(f), d_q(g)) - mul(d_q(f), d_phi(g));
}

FourierFunction shift_q(const FourierFunction& f, double shift) {
  if (shift == 0.0) return f;
  const auto inner = ProfileFunction::affine(1.0, shift);
  FourierFunction::Table t;
  for (const auto& [n, c] : f.coefficients()) t.emplace(n, c.compose(inner));
  return {f.interval(), std::move(t)};
}

FourierFunction multiply_profile(const FourierFunction& f, const ComplexProfile& p) {
  FourierFunction::Table t;
  for (const auto& [n, c] : f.coefficients()) t.emplace(n, p * c);
  return {f.interval(), std::move(t)};
}

// MatrixFourierFunction

MatrixFourierFunction::MatrixFourierFunction(int size, std::vector<FourierFunction> entries)
    : size_(size), entries_(std::move(entries)) {
  if (size < 1 || static_cast<int>(entries_.size()) != size * size)
    throw ShapeError("matrix Fourier function needs size^2 entries");
  for (const auto& e : entries_) require_same_interval(entries_.front(), e);
}

MatrixFourierFunction MatrixFourierFunction::scalar(const FourierFunction& f) { return {1, {f}}; }

MatrixFourierFunction MatrixFourierFunction::diagonal(const std::vector<FourierFunction>& d) {
  const int s = static_cast<int>(d.size());
  if (s == 0) throw ShapeError("empty diagonal");
  std::vector<FourierFunction> e;
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) e.push_back(a == b ? d[a] : FourierFunction::zero(d[0].interval()));
  return {s, std::move(e)};
}

MatrixFourierFunction MatrixFourierFunction::zero(Interval interval, int size) {
  return {size, std::vector<FourierFunction>(size * size, FourierFunction::zero(interval))};
}

MatrixFourierFunction MatrixFourierFunction::constant(Interval interval, const Eigen::MatrixXcd& c) {
  if (c.rows() != c.cols()) throw ShapeError("constant matrix must be square");
  const int s = static_cast<int>(c.rows());
  std::vector<FourierFunction> e;
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) e.push_back(FourierFunction::constant(interval, c(a, b)));
  return {s, std::move(e)};
}

int MatrixFourierFunction::cutoff() const {
  int d = 0;
  for (const auto& e : entries_) d = std::max(d, e.cutoff());
  return d;
}

Eigen::MatrixXcd MatrixFourierFunction::eval(double q, double phi) const {
  Eigen::MatrixXcd m(size_, size_);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) m(a, b) = (*this)(a, b)(q, phi);
  return m;
}

Eigen::MatrixXcd MatrixFourierFunction::coeff(int n, double q) const {
  Eigen::MatrixXcd m(size_, size_);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) m(a, b) = (*this)(a, b).coeff(n, q);
  return m;
}

bool MatrixFourierFunction::is_hermitian(double tol, int samples) const {
  const int d = cutoff();
  for (double q : sample_points(interval(), samples))
    for (int n = -d; n <= d; ++n)
      for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
          if (std::abs((*this)(a, b).coeff(n, q) - std::conj((*this)(b, a).coeff(-n, q))) > tol)
            return false;
  return true;
}

namespace {

void require_same_shape(const MatrixFourierFunction& f, const MatrixFourierFunction& g) {
  if (f.size() != g.size()) throw ShapeError("matrix Fourier functions of different size");
  if (!f.interval().same_as(g.interval())) throw ShapeError("matrix Fourier functions on different intervals");
}

}  // namespace

MatrixFourierFunction operator+(const MatrixFourierFunction& f, const MatrixFourierFunction& g) {
  require_same_shape(f, g);
  std::vector<FourierFunction> e;
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b) e.push_back(f(a, b) + g(a, b));
  return {f.size(), std::move(e)};
}

MatrixFourierFunction operator*(cplx s, const MatrixFourierFunction& f) {
  return map_entries(f, [s](const FourierFunction& x) { return s * x; });
}

MatrixFourierFunction mul(const MatrixFourierFunction& f, const MatrixFourierFunction& g) {
  require_same_shape(f, g);
  const int s = f.size();
  std::vector<FourierFunction> e;
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      FourierFunction acc = FourierFunction::zero(f.interval());
      for (int c = 0; c < s; ++c) acc = acc + mul(f(a, c), g(c, b));
      e.push_back(std::move(acc));
    }
  return {s, std::move(e)};
}

MatrixFourierFunction adjoint(const MatrixFourierFunction& f) {
  std::vector<FourierFunction> e;
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b) e.push_back(conj(f(b, a)));
  return {f.size(), std::move(e)};
}

MatrixFourierFunction truncate(const MatrixFourierFunction& f, int delta) {
  return map_entries(f, [delta](const FourierFunction& x) { return truncate(x, delta); });
}

MatrixFourierFunction multiply_profile(const MatrixFourierFunction& f, const ComplexProfile& p) {
  return map_entries(f, [&p](const FourierFunction& x) { return multiply_profile(x, p); });
}

}  // namespace fuzzy
