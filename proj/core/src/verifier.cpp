#include "fuzzy/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

#include "json.hpp"

#include "fuzzy/errors.hpp"
#include "fuzzy/regularize.hpp"

namespace fuzzy {

namespace {

const cplx kI{0.0, 1.0};

void check_schedule(const std::vector<int>& ns) {
  if (ns.empty()) throw DomainError("empty N schedule");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw DomainError("N schedule must be strictly increasing");
}

std::vector<double> series(const SweepReport& r, const std::string& key) {
  std::vector<double> v;
  for (const auto& rec : r.records) v.push_back(rec.values.at(key));
  return v;
}

// Every consecutive ratio v[k+1] / v[k] <= limit; exact zeros pass when they stay zero.
bool ratios_below(const std::vector<double>& v, double limit) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k - 1] <= 1e-14) {
      if (v[k] > 1e-14) return false;
      continue;
    }
    if (v[k] / v[k - 1] > limit) return false;
  }
  return true;
}

Eigen::MatrixXcd q_of(const FourierFunction& f, const DiscretizingGrid& g) { return regularize_scalar(f, g).data(); }

SweepReport base_report(const std::string& builder, const std::string& criterion, const std::vector<int>& ns,
                        int delta) {
  check_schedule(ns);
  SweepReport r;
  r.builder = builder;
  r.criterion = criterion;
  r.schedule = ns;
  r.border = delta;
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

bool SweepReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

std::string SweepReport::to_json() const {
  nlohmann::json j;
  j["builder"] = builder;
  j["criterion"] = criterion;
  j["schedule"] = schedule;
  j["border"] = border;
  j["scaling"] = scaling;
  j["records"] = nlohmann::json::array();
  for (const auto& rec : records) j["records"].push_back({{"N", rec.n}, {"values", rec.values}});
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [k, v] : order_estimates) orders[k] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json();
  j["order_estimates"] = orders;
  j["verdicts"] = verdicts;
  j["pass"] = pass();
  return j.dump(2);
}

std::string SweepReport::table() const {
  std::ostringstream os;
  os << builder << " / " << criterion << "  (border " << border << ")\n";
  std::vector<std::string> keys;
  if (!records.empty())
    for (const auto& [k, v] : records.front().values) keys.push_back(k);
  os << "N";
  for (const auto& k : keys) os << '\t' << k;
  os << '\n';
  for (const auto& rec : records) {
    os << rec.n;
    for (const auto& k : keys) os << '\t' << fmt(rec.values.at(k));
    os << '\n';
  }
  for (const auto& [k, v] : order_estimates) os << "order(" << k << ") = " << v << '\n';
  for (const auto& [k, v] : verdicts) os << k << ": " << (v ? "PASS" : "FAIL") << '\n';
  return os.str();
}

double fitted_order(const std::vector<int>& ns, const std::vector<double>& values) {
  if (ns.size() != values.size() || ns.size() < 2) return NAN;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!(values[i] > 0)) return NAN;
    const double x = std::log(static_cast<double>(ns[i]));
    const double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return -(k * sxy - sx * sy) / (k * sxx - sx * sx);
}

SweepReport check_norm_convergence(const MatrixBuilder& builder, const std::vector<int>& ns, int delta,
                                   const std::string& id) {
  auto r = base_report(id, "norm_convergence", ns, delta);
  for (int n : ns) r.records.push_back({n, {{"norm", within_border_norm(builder(n), delta)}}});
  const auto v = series(r, "norm");
  std::vector<double> diffs;
  for (std::size_t k = 1; k < v.size(); ++k) diffs.push_back(std::abs(v[k] - v[k - 1]));
  bool ok = std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  const std::size_t first = diffs.size() > 3 ? diffs.size() - 3 : 0;
  for (std::size_t k = first + 1; k < diffs.size(); ++k) ok = ok && diffs[k] <= diffs[k - 1] + 1e-12;
  r.verdicts["differences_shrink"] = ok;
  return r;
}

SweepReport check_product_convergence(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                                      const std::vector<int>& ns, int delta) {
  auto r = base_report("scalar_pair", "product_convergence", ns, delta);
  const auto fg = mul(f, g);
  for (int n : ns) {
    const auto gr = grid.resized(n);
    r.records.push_back({n, {{"r", within_border_norm(q_of(f, gr) * q_of(g, gr) - q_of(fg, gr), delta)}}});
  }
  const auto v = series(r, "r");
  r.order_estimates["r"] = fitted_order(ns, v);
  r.verdicts["ratio<=0.6"] = ratios_below(v, 0.6);
  return r;
}

SweepReport check_poisson_convergence(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                                      const std::vector<int>& ns, int delta) {
  auto r = base_report("scalar_pair", "poisson_convergence", ns, delta);
  const double beta = grid.beta();
  r.scaling = "s(N) = N / (2 beta), beta = " + fmt(beta);
  const auto pb = poisson_bracket(f, g);
  for (int n : ns) {
    const auto gr = grid.resized(n);
    const double s = n / (2.0 * beta);
    const Eigen::MatrixXcd c = commutator(q_of(f, gr), q_of(g, gr));
    r.records.push_back({n, {{"p", within_border_norm(-kI * s * c - q_of(pb, gr), delta)}, {"s", s}}});
  }
  const auto v = series(r, "p");
  r.order_estimates["p"] = fitted_order(ns, v);
  r.verdicts["ratio<=0.6"] = ratios_below(v, 0.6);
  return r;
}

double semiclassical_residual(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                              int delta) {
  const double h = grid.beta() / grid.size();
  const Eigen::MatrixXcd m = q_of(f, grid) * q_of(g, grid) - q_of(mul(f, g), grid) -
                             kI * h * q_of(poisson_bracket(f, g), grid);
  return within_border_norm(m, delta);
}

SweepReport check_semiclassical(const FourierFunction& f, const FourierFunction& g, const DiscretizingGrid& grid,
                                const std::vector<int>& ns, int delta) {
  auto r = base_report("scalar_pair", "semiclassical_product", ns, delta);
  for (int n : ns) r.records.push_back({n, {{"R", semiclassical_residual(f, g, grid.resized(n), delta)}}});
  const auto v = series(r, "R");
  r.order_estimates["R"] = fitted_order(ns, v);
  r.verdicts["ratio<=0.35"] = ratios_below(v, 0.35);
  return r;
}

SweepReport check_commutator_decay(const SpaceBuilder& builder, const std::vector<int>& ns, int delta,
                                   const std::string& id) {
  auto r = base_report(id, "commutator_decay", ns, delta);
  for (int n : ns) {
    const FuzzySpace s = builder(n);
    double entry = 0.0, norm = 0.0;
    for (int a = 0; a < s.dimension(); ++a)
      for (int b = a + 1; b < s.dimension(); ++b) {
        const Eigen::MatrixXcd c = commutator(s.coordinate(a).data(), s.coordinate(b).data());
        entry = std::max(entry, within_border_max(c, delta));
        norm = std::max(norm, within_border_norm(c, delta));
      }
    r.records.push_back({n, {{"max_entry", entry}, {"row_sum_norm", norm}, {"dim", static_cast<double>(s.dim())}}});
  }
  const auto v = series(r, "max_entry");
  r.order_estimates["max_entry"] = fitted_order(ns, v);
  bool ok = true;
  for (std::size_t k = 1; k < v.size(); ++k) ok = ok && v[k] <= 1.05 * v[k - 1] + 1e-14;
  r.verdicts["non_increasing"] = ok;
  return r;
}

double matrix_fn_commutator_sup(const MatrixFourierFunction& f, const MatrixFourierFunction& g, int q_samples,
                                int phi_samples) {
  if (f.size() != g.size()) throw ShapeError("matrix functions of different size");
  double sup = 0.0;
  for (double q : sample_points(f.interval(), q_samples))
    for (int k = 0; k < phi_samples; ++k) {
      const double phi = 2 * std::numbers::pi * k / phi_samples;
      const Eigen::MatrixXcd c = commutator(f.eval(q, phi), g.eval(q, phi));
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c);
      sup = std::max(sup, svd.singularValues()(0));
    }
  return sup;
}

}  // namespace fuzzy
