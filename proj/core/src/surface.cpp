#include "fuzzy/surface.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "fuzzy/errors.hpp"
#include "fuzzy/transforms.hpp"
#include "fuzzy/verifier.hpp"

namespace fuzzy {

namespace {

double spread(const Eigen::MatrixXcd& a) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return ev(ev.size() - 1) - ev(0);
}

}  // namespace

PointCloud export_classical_surface(const std::vector<MatrixFourierFunction>& gens, const SurfaceOptions& opt) {
  if (gens.empty()) throw DomainError("surface export needs at least one generator");
  if (opt.q_samples < 1 || opt.phi_samples < 1) throw DomainError("sample counts must be positive");
  const int s = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != s) throw ShapeError("generators of different block size");
    if (!g.interval().same_as(gens.front().interval())) throw DomainError("generators on different intervals");
  }
  if (!opt.names.empty() && opt.names.size() != gens.size()) throw ConfigError("one column name per generator");

  PointCloud pc;
  for (std::size_t i = 0; i < gens.size(); ++i)
    pc.names.push_back(opt.names.empty() ? "x" + std::to_string(i + 1) : opt.names[i]);

  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      pc.commutator_sup =
          std::max(pc.commutator_sup, matrix_fn_commutator_sup(gens[i], gens[j], opt.q_samples, opt.phi_samples));
  if (pc.commutator_sup > opt.commutator_bound) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "generators do not nearly commute: sup |[F_i, F_j]| = %.6g exceeds bound %.6g",
                  pc.commutator_sup, opt.commutator_bound);
    throw DomainError(buf);
  }
  const double scalar_tol = opt.scalar_tolerance < 0 ? opt.commutator_bound : opt.scalar_tolerance;

  std::vector<Eigen::MatrixXcd> vals(gens.size());
  for (double q : sample_points(gens.front().interval(), opt.q_samples))
    for (int k = 0; k < opt.phi_samples; ++k) {
      const double phi = 2 * std::numbers::pi * k / opt.phi_samples;
      int ref = -1;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        vals[i] = gens[i].eval(q, phi);
        if (ref < 0 && s > 1 && spread(vals[i]) > scalar_tol) ref = static_cast<int>(i);
      }
      const Eigen::MatrixXcd p =
          ref < 0 ? Eigen::MatrixXcd::Identity(s, s) : diagonalize(vals[ref]).basis;
      std::vector<Eigen::MatrixXcd> rot;
      double resid = 0.0;
      for (const auto& v : vals) {
        rot.push_back(p.adjoint() * v * p);
        for (int r = 0; r < s; ++r)
          for (int c = 0; c < s; ++c)
            if (r != c) resid = std::max(resid, std::abs(rot.back()(r, c)));
      }
      for (int a = 0; a < s; ++a) {
        SurfacePoint pt{a, q, phi, {}, resid};
        for (const auto& m : rot) pt.x.push_back(m(a, a).real());
        pc.points.push_back(std::move(pt));
      }
    }
  return pc;
}

void PointCloud::write_csv(std::ostream& os) const {
  os << "sheet,q,phi";
  for (const auto& n : names) os << ',' << n;
  os << ",offdiag_residual\n";
  char buf[64];
  for (const auto& p : points) {
    os << p.sheet;
    std::snprintf(buf, sizeof buf, ",%.10g,%.10g", p.q, p.phi);
    os << buf;
    for (double v : p.x) {
      std::snprintf(buf, sizeof buf, ",%.10g", v);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, ",%.3e\n", p.offdiag_residual);
    os << buf;
  }
}

}  // namespace fuzzy
