#include "fuzzy/profile.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzy/errors.hpp"

namespace fuzzy {

using detail::ProfileNode;
using Kind = ProfileFunction::Kind;

namespace {

std::shared_ptr<const ProfileNode> make_node(ProfileNode n) {
  return std::make_shared<const ProfileNode>(std::move(n));
}

ProfileFunction make(ProfileNode n) { return ProfileFunction(make_node(std::move(n))); }

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> poly_coeffs(const ProfileNode& n) {
  if (n.kind == Kind::constant) return {n.value};
  return n.coeffs;
}

bool is_poly_like(const ProfileNode& n) {
  return n.kind == Kind::constant || n.kind == Kind::polynomial;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<double> poly_add(std::vector<double> a, const std::vector<double>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<double> poly_diff(const std::vector<double>& c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> r(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * static_cast<double>(i);
  return r;
}

}  // namespace

ProfileFunction::ProfileFunction() : ProfileFunction(0.0) {}

ProfileFunction::ProfileFunction(double c) {
  ProfileNode n;
  n.kind = Kind::constant;
  n.value = c;
  node_ = make_node(std::move(n));
}

ProfileFunction::ProfileFunction(std::shared_ptr<const ProfileNode> node) : node_(std::move(node)) {}

ProfileFunction ProfileFunction::constant(double c) { return ProfileFunction(c); }

ProfileFunction ProfileFunction::affine(double slope, double intercept) {
  return polynomial({intercept, slope});
}

ProfileFunction ProfileFunction::polynomial(std::vector<double> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) return constant(0.0);
  if (coeffs.size() == 1) return constant(coeffs[0]);
  ProfileNode n;
  n.kind = Kind::polynomial;
  n.coeffs = std::move(coeffs);
  return make(std::move(n));
}

ProfileFunction ProfileFunction::piecewise(std::vector<double> breaks,
                                           std::vector<std::vector<double>> pieces) {
  if (breaks.size() < 2 || pieces.size() + 1 != breaks.size())
    throw ShapeError("piecewise profile needs k+1 breaks for k pieces");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i] > breaks[i - 1])) throw DomainError("piecewise breaks must increase");
  ProfileNode n;
  n.kind = Kind::piecewise_polynomial;
  n.below = horner(pieces.front(), 0.0);
  n.above = horner(pieces.back(), breaks.back() - breaks[breaks.size() - 2]);
  n.breaks = std::move(breaks);
  n.pieces = std::move(pieces);
  return make(std::move(n));
}

ProfileFunction ProfileFunction::clamped_spline(const std::vector<double>& x,
                                                const std::vector<double>& y,
                                                double slope_left, double slope_right) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw ShapeError("spline needs matching knots and values");
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    if (!(h[i] > 0)) throw DomainError("spline knots must increase");
  }
  // Second derivatives M from the clamped tridiagonal system (Thomas algorithm).
  std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
  b[0] = 2 * h[0];
  c[0] = h[0];
  d[0] = 6 * ((y[1] - y[0]) / h[0] - slope_left);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    a[i] = h[i - 1];
    b[i] = 2 * (h[i - 1] + h[i]);
    c[i] = h[i];
    d[i] = 6 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1]);
  }
  a[n - 1] = h[n - 2];
  b[n - 1] = 2 * h[n - 2];
  d[n - 1] = 6 * (slope_right - (y[n - 1] - y[n - 2]) / h[n - 2]);
  for (std::size_t i = 1; i < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  std::vector<double> M(n);
  M[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) M[i] = (d[i] - c[i] * M[i + 1]) / b[i];

  std::vector<std::vector<double>> pieces;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double slope = (y[i + 1] - y[i]) / h[i] - h[i] * (2 * M[i] + M[i + 1]) / 6;
    pieces.push_back({y[i], slope, M[i] / 2, (M[i + 1] - M[i]) / (6 * h[i])});
  }
  return piecewise(x, std::move(pieces));
}

ProfileFunction ProfileFunction::step(double at, double below, double above) {
  ProfileNode n;
  n.kind = Kind::step;
  n.value = at;
  n.below = below;
  n.above = above;
  return make(std::move(n));
}

ProfileFunction ProfileFunction::select(double split, ProfileFunction left, ProfileFunction right) {
  ProfileNode n;
  n.kind = Kind::select;
  n.value = split;
  n.children = {std::move(left), std::move(right)};
  return make(std::move(n));
}

ProfileFunction ProfileFunction::callable(Fn f, std::optional<Fn> df, std::string label) {
  if (!f) throw DomainError("callable profile without a function");
  ProfileNode n;
  n.kind = Kind::callable;
  n.fn = std::move(f);
  n.dfn = std::move(df);
  n.label = std::move(label);
  return make(std::move(n));
}

double ProfileFunction::operator()(double q) const {
  const ProfileNode& n = *node_;
  switch (n.kind) {
    case Kind::constant:
      return n.value;
    case Kind::polynomial:
      return horner(n.coeffs, q);
    case Kind::piecewise_polynomial: {
      if (q < n.breaks.front()) return n.below;
      if (q > n.breaks.back()) return n.above;
      auto it = std::upper_bound(n.breaks.begin(), n.breaks.end(), q);
      std::size_t i = static_cast<std::size_t>(it - n.breaks.begin());
      i = std::clamp<std::size_t>(i, 1, n.pieces.size()) - 1;
      return horner(n.pieces[i], q - n.breaks[i]);
    }
    case Kind::composed:
      return n.children[0](n.children[1](q));
    case Kind::sum:
      return n.children[0](q) + n.children[1](q);
    case Kind::product:
      return n.children[0](q) * n.children[1](q);
    case Kind::cosine:
      return std::cos(n.children[0](q));
    case Kind::sine:
      return std::sin(n.children[0](q));
    case Kind::reciprocal:
      return 1.0 / n.children[0](q);
    case Kind::step:
      return q < n.value ? n.below : n.above;
    case Kind::select:
      return q < n.value ? n.children[0](q) : n.children[1](q);
    case Kind::callable:
      return n.fn(q);
  }
  return 0.0;
}

ProfileFunction::Kind ProfileFunction::kind() const { return node_->kind; }

bool ProfileFunction::differentiable() const {
  const ProfileNode& n = *node_;
  if (n.kind == Kind::step) return false;
  if (n.kind == Kind::callable) return n.dfn.has_value();
  return std::all_of(n.children.begin(), n.children.end(),
                     [](const ProfileFunction& c) { return c.differentiable(); });
}

bool ProfileFunction::serializable() const {
  const ProfileNode& n = *node_;
  if (n.kind == Kind::callable) return false;
  return std::all_of(n.children.begin(), n.children.end(),
                     [](const ProfileFunction& c) { return c.serializable(); });
}

ProfileFunction ProfileFunction::derivative() const {
  const ProfileNode& n = *node_;
  switch (n.kind) {
    case Kind::constant:
      return constant(0.0);
    case Kind::polynomial:
      return polynomial(poly_diff(n.coeffs));
    case Kind::piecewise_polynomial: {
      std::vector<std::vector<double>> pieces;
      for (const auto& p : n.pieces) pieces.push_back(poly_diff(p));
      ProfileNode d;
      d.kind = Kind::piecewise_polynomial;
      d.breaks = n.breaks;
      d.pieces = std::move(pieces);
      return make(std::move(d));
    }
    case Kind::composed:
      return n.children[0].derivative().compose(n.children[1]) * n.children[1].derivative();
    case Kind::sum:
      return n.children[0].derivative() + n.children[1].derivative();
    case Kind::product:
      return n.children[0].derivative() * n.children[1] +
             n.children[0] * n.children[1].derivative();
    case Kind::cosine:
      return -(n.children[0].sin() * n.children[0].derivative());
    case Kind::sine:
      return n.children[0].cos() * n.children[0].derivative();
    case Kind::reciprocal:
      return -(n.children[0].derivative() * (n.children[0] * n.children[0]).reciprocal());
    case Kind::step:
      throw CapabilityError("step profile has no derivative");
    case Kind::select:
      return select(n.value, n.children[0].derivative(), n.children[1].derivative());
    case Kind::callable:
      if (!n.dfn) throw CapabilityError("callable profile '" + n.label + "' has no derivative");
      return callable(*n.dfn, std::nullopt, "d(" + n.label + ")");
  }
  throw CapabilityError("unsupported profile kind");
}

ProfileFunction ProfileFunction::compose(const ProfileFunction& inner) const {
  const ProfileNode& o = *node_;
  if (o.kind == Kind::constant) return *this;
  if (auto c = inner.constant_value()) return constant((*this)(*c));
  const ProfileNode& i = inner.node();
  if (i.kind == Kind::polynomial && i.coeffs.size() == 2 && i.coeffs[0] == 0.0 && i.coeffs[1] == 1.0)
    return *this;
  if (o.kind == Kind::polynomial && i.kind == Kind::polynomial) {
    std::vector<double> acc{0.0};
    for (auto it = o.coeffs.rbegin(); it != o.coeffs.rend(); ++it)
      acc = poly_add(poly_mul(acc, i.coeffs), {*it});
    return polynomial(std::move(acc));
  }
  ProfileNode n;
  n.kind = Kind::composed;
  n.children = {*this, inner};
  return make(std::move(n));
}

ProfileFunction ProfileFunction::cos() const {
  if (auto c = constant_value()) return constant(std::cos(*c));
  ProfileNode n;
  n.kind = Kind::cosine;
  n.children = {*this};
  return make(std::move(n));
}

ProfileFunction ProfileFunction::sin() const {
  if (auto c = constant_value()) return constant(std::sin(*c));
  ProfileNode n;
  n.kind = Kind::sine;
  n.children = {*this};
  return make(std::move(n));
}

ProfileFunction ProfileFunction::reciprocal() const {
  if (auto c = constant_value()) {
    if (*c == 0.0) throw DomainError("reciprocal of the zero profile");
    return constant(1.0 / *c);
  }
  ProfileNode n;
  n.kind = Kind::reciprocal;
  n.children = {*this};
  return make(std::move(n));
}

std::optional<double> ProfileFunction::constant_value() const {
  if (node_->kind == Kind::constant) return node_->value;
  return std::nullopt;
}

bool ProfileFunction::is_zero() const {
  return node_->kind == Kind::constant && node_->value == 0.0;
}

ProfileFunction operator+(const ProfileFunction& a, const ProfileFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (is_poly_like(a.node()) && is_poly_like(b.node()))
    return ProfileFunction::polynomial(poly_add(poly_coeffs(a.node()), poly_coeffs(b.node())));
  ProfileNode n;
  n.kind = Kind::sum;
  n.children = {a, b};
  return make(std::move(n));
}

ProfileFunction operator*(const ProfileFunction& a, const ProfileFunction& b) {
  if (a.is_zero() || b.is_zero()) return ProfileFunction(0.0);
  if (a.constant_value() == 1.0) return b;
  if (b.constant_value() == 1.0) return a;
  if (is_poly_like(a.node()) && is_poly_like(b.node()))
    return ProfileFunction::polynomial(poly_mul(poly_coeffs(a.node()), poly_coeffs(b.node())));
  ProfileNode n;
  n.kind = Kind::product;
  n.children = {a, b};
  return make(std::move(n));
}

ProfileFunction operator-(const ProfileFunction& a) { return ProfileFunction(-1.0) * a; }

ProfileFunction operator-(const ProfileFunction& a, const ProfileFunction& b) { return a + (-b); }

ProfileFunction spline_h() {
  static const ProfileFunction h = ProfileFunction::clamped_spline(
      {-1.0, -0.5, 0.0, 0.5, 1.0}, {0.0, 0.1, 0.5, 0.9, 1.0}, 0.0, 0.0);
  return h;
}

}  // namespace fuzzy
