#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fuzzy {

namespace detail {
struct ProfileNode;
}

// Real function of the height parameter q, stored as an immutable
// expression tree. Copies share structure.
class ProfileFunction {
 public:
  enum class Kind {
    constant,
    polynomial,
    piecewise_polynomial,
    composed,
    sum,
    product,
    cosine,
    sine,
    reciprocal,
    step,
    select,
    callable
  };

  using Fn = std::function<double(double)>;

  ProfileFunction();  // the zero function
  ProfileFunction(double c);  // NOLINT(google-explicit-constructor)

  static ProfileFunction constant(double c);
  static ProfileFunction affine(double slope, double intercept);
  // c[0] + c[1] q + c[2] q^2 + ...
  static ProfileFunction polynomial(std::vector<double> coeffs);
  // Piecewise polynomial on breaks x[0] < ... < x[k]; piece i is a
  // polynomial in (q - x[i]). Constant continuation outside [x0, xk].
  static ProfileFunction piecewise(std::vector<double> breaks,
                                   std::vector<std::vector<double>> pieces);
  // Cubic spline through (x_i, y_i) with prescribed end slopes.
  static ProfileFunction clamped_spline(const std::vector<double>& x,
                                        const std::vector<double>& y,
                                        double slope_left, double slope_right);
  // below for q < at, above otherwise. Not differentiable.
  static ProfileFunction step(double at, double below, double above);
  // left(q) for q < split, right(q) otherwise.
  static ProfileFunction select(double split, ProfileFunction left,
                                ProfileFunction right);
  static ProfileFunction callable(Fn f, std::optional<Fn> df = std::nullopt,
                                  std::string label = "callable");

  double operator()(double q) const;

  Kind kind() const;
  bool differentiable() const;
  bool serializable() const;
  // Throws CapabilityError when some node lacks a derivative.
  ProfileFunction derivative() const;

  // this(inner(q))
  ProfileFunction compose(const ProfileFunction& inner) const;
  ProfileFunction cos() const;
  ProfileFunction sin() const;
  ProfileFunction reciprocal() const;

  std::optional<double> constant_value() const;
  bool is_zero() const;

  const detail::ProfileNode& node() const { return *node_; }
  explicit ProfileFunction(std::shared_ptr<const detail::ProfileNode> node);

  friend ProfileFunction operator+(const ProfileFunction& a, const ProfileFunction& b);
  friend ProfileFunction operator*(const ProfileFunction& a, const ProfileFunction& b);
  friend ProfileFunction operator-(const ProfileFunction& a);
  friend ProfileFunction operator-(const ProfileFunction& a, const ProfileFunction& b);

 private:
  std::shared_ptr<const detail::ProfileNode> node_;
};

// Monotone clamped cubic spline through (-1,0), (-1/2,1/10), (0,1/2),
// (1/2,9/10), (1,1) with zero end slopes; 0 below -1 and 1 above 1.
ProfileFunction spline_h();

namespace detail {

struct ProfileNode {
  ProfileFunction::Kind kind;
  double value = 0.0;                      // constant, step/select position
  std::vector<double> coeffs;              // polynomial
  std::vector<double> breaks;              // piecewise
  std::vector<std::vector<double>> pieces;  // piecewise
  double below = 0.0, above = 0.0;         // step
  std::vector<ProfileFunction> children;   // composed: {outer, inner}
  ProfileFunction::Fn fn;
  std::optional<ProfileFunction::Fn> dfn;
  std::string label;
};

}  // namespace detail

}  // namespace fuzzy
