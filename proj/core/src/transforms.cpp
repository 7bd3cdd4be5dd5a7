#include "fuzzy/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "fuzzy/errors.hpp"
#include "fuzzy/regularize.hpp"

namespace fuzzy {

const char* const kPhaseFixPolicy = "ascending/cluster-projected/largest-entry-real-positive/v1";

namespace {

std::vector<int> shuffle_permutation(int dim, int s) {
  if (s < 1 || dim % s != 0) throw ShapeError("dimension not divisible by block size");
  const int n = dim / s;
  std::vector<int> perm(dim);
  for (int a = 0; a < s; ++a)
    for (int k = 0; k < n; ++k) perm[k * s + a] = a * n + k;
  return perm;
}

Eigen::MatrixXcd permute(const Eigen::MatrixXcd& m, const std::vector<int>& perm) {
  const int d = static_cast<int>(perm.size());
  Eigen::MatrixXcd out(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out(r, c) = m(perm[r], perm[c]);
  return out;
}

}  // namespace

FuzzySpace direct_sum(const FuzzySpace& s1, const FuzzySpace& s2) {
  if (s2.dim() == 0) return s1;
  if (s1.dim() == 0) return s2;
  if (s1.dimension() != s2.dimension()) throw ShapeError("direct sum of spaces with different coordinate counts");
  std::vector<FuzzyMatrix> coords;
  for (int i = 0; i < s1.dimension(); ++i) {
    const auto& a = s1.coordinate(i).data();
    const auto& b = s2.coordinate(i).data();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    coords.emplace_back(std::move(m), a.rows() == b.rows() ? 2 : 1, Layout::block_major);
  }
  std::vector<MatrixFourierFunction> gens;
  std::optional<DiscretizingGrid> grid;
  const bool same_grid = s1.grid() && s2.grid() && s1.grid()->size() == s2.grid()->size() &&
                         s1.grid()->rule() == s2.grid()->rule() && s1.grid()->interval().same_as(s2.grid()->interval());
  if (same_grid && !s1.generators().empty() && !s2.generators().empty()) {
    for (int i = 0; i < s1.dimension(); ++i) {
      const auto& f1 = s1.generators()[i];
      const auto& f2 = s2.generators()[i];
      if (f1.size() != 1 || f2.size() != 1) {
        gens.clear();
        break;
      }
      gens.push_back(MatrixFourierFunction::diagonal({f1(0, 0), f2(0, 0)}));
    }
    if (!gens.empty()) grid = s1.grid();
  }
  return FuzzySpace(s1.name() + "+" + s2.name(), s1.names(), std::move(coords), std::move(gens), grid);
}

Eigen::MatrixXcd z_order(const Eigen::MatrixXcd& m, int block_size) {
  return permute(m, shuffle_permutation(static_cast<int>(m.rows()), block_size));
}

Eigen::MatrixXcd z_unorder(const Eigen::MatrixXcd& m, int block_size) {
  const auto perm = shuffle_permutation(static_cast<int>(m.rows()), block_size);
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return permute(m, inv);
}

FuzzyMatrix z_order(const FuzzyMatrix& m, int block_size) {
  return FuzzyMatrix(z_order(m.data(), block_size), block_size, Layout::z_ordered);
}

FuzzyMatrix z_unorder(const FuzzyMatrix& m, int block_size) {
  return FuzzyMatrix(z_unorder(m.data(), block_size), block_size, Layout::block_major);
}

FuzzySpace z_order(const FuzzySpace& s) {
  std::vector<FuzzyMatrix> coords;
  for (const auto& c : s.coordinates())
    coords.push_back(c.meta().layout == Layout::block_major ? z_order(c, c.meta().block_size) : c);
  return FuzzySpace(s.name(), s.names(), std::move(coords), s.generators(), s.grid());
}

Eigen::MatrixXcd lift_constant_unitary(const Eigen::MatrixXcd& u, int blocks) {
  if (u.rows() != u.cols()) throw ShapeError("unitary must be square");
  const int s = static_cast<int>(u.rows());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(s * blocks, s * blocks);
  for (int k = 0; k < blocks; ++k) out.block(k * s, k * s, s, s) = u;
  return out;
}

Eigen::Matrix2cd interlacing_unitary() {
  Eigen::Matrix2cd u;
  u << 1.0, -1.0, 1.0, 1.0;
  return u / std::sqrt(2.0);
}

FuzzySpace interlace(const FuzzySpace& s) {
  const FuzzySpace z = z_order(s);
  const Eigen::MatrixXcd u = interlacing_unitary();
  std::vector<FuzzyMatrix> coords;
  for (const auto& c : z.coordinates()) {
    if (c.meta().block_size != 2) throw ShapeError("interlacing needs a 2x2 block structure");
    const Eigen::MatrixXcd lu = lift_constant_unitary(u, c.meta().blocks);
    coords.emplace_back(lu.adjoint() * c.data() * lu, 2, Layout::z_ordered);
  }
  std::vector<MatrixFourierFunction> gens;
  for (const auto& g : z.generators()) gens.push_back(constant_unitary_conjugate(g, u.adjoint()));
  return FuzzySpace(s.name() + ":interlaced", s.names(), std::move(coords), std::move(gens), z.grid());
}

Eigen::MatrixXcd block_transform(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& u, int first_row) {
  const int d = static_cast<int>(m.rows());
  const int s = static_cast<int>(u.rows());
  if (u.cols() != s) throw ShapeError("unitary must be square");
  if (first_row < 0 || first_row > d || (d - first_row) % s != 0)
    throw DomainError("block transform start must leave a whole number of blocks");
  const int tail = d - first_row;
  if (tail == 0) return m;
  const Eigen::MatrixXcd lu = lift_constant_unitary(u, tail / s);
  Eigen::MatrixXcd out = m;
  out.topRightCorner(first_row, tail) = m.topRightCorner(first_row, tail) * lu;
  out.bottomLeftCorner(tail, first_row) = lu.adjoint() * m.bottomLeftCorner(tail, first_row);
  out.bottomRightCorner(tail, tail) = lu.adjoint() * m.bottomRightCorner(tail, tail) * lu;
  return out;
}

FuzzySpace block_transform(const FuzzySpace& s, const Eigen::MatrixXcd& u, int first_row) {
  std::vector<FuzzyMatrix> coords;
  for (const auto& c : s.coordinates()) coords.emplace_back(block_transform(c.data(), u, first_row));
  return FuzzySpace(s.name() + ":block_transformed", s.names(), std::move(coords));
}

double unitarity_defect(const MatrixFourierFunction& u, int q_samples, int phi_samples) {
  double worst = 0.0;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.size(), u.size());
  for (double q : sample_points(u.interval(), q_samples))
    for (int k = 0; k < phi_samples; ++k) {
      const Eigen::MatrixXcd m = u.eval(q, 2 * std::numbers::pi * k / phi_samples);
      worst = std::max(worst, (m * m.adjoint() - id).cwiseAbs().maxCoeff());
    }
  return worst;
}

MatrixFourierFunction function_unitary_conjugate(const MatrixFourierFunction& f, const MatrixFourierFunction& u) {
  if (f.size() != u.size()) throw ShapeError("unitary and function of different size");
  if (unitarity_defect(u) > 1e-10) throw DomainError("conjugating function is not unitary");
  return mul(mul(u, f), adjoint(u));
}

MatrixFourierFunction constant_unitary_conjugate(const MatrixFourierFunction& f, const Eigen::MatrixXcd& u) {
  return function_unitary_conjugate(f, MatrixFourierFunction::constant(f.interval(), u));
}

namespace {

void phase_fix(Eigen::VectorXcd& v) {
  const double top = v.cwiseAbs().maxCoeff();
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top * (1.0 - 1e-12)) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      return;
    }
  }
}

// Replaces the columns [begin, end) of `vecs` by an orthonormal basis built
// from projections of unit vectors onto their span.
void respan_cluster(Eigen::MatrixXcd& vecs, int begin, int end) {
  const int d = static_cast<int>(vecs.rows());
  const int k = end - begin;
  const Eigen::MatrixXcd v = vecs.middleCols(begin, k);
  Eigen::MatrixXcd basis(d, k);
  int found = 0;
  for (int j = 0; j < d && found < k; ++j) {
    Eigen::VectorXcd w = v * v.row(j).adjoint();
    for (int i = 0; i < found; ++i) w -= basis.col(i) * basis.col(i).dot(w);
    for (int i = 0; i < found; ++i) w -= basis.col(i) * basis.col(i).dot(w);
    const double norm = w.norm();
    if (norm > 1e-6) basis.col(found++) = w / norm;
  }
  if (found < k) throw NumericalError("could not re-span a degenerate eigenspace");
  vecs.middleCols(begin, k) = basis;
}

}  // namespace

DiagonalizationReport diagonalize(const Eigen::MatrixXcd& a, double cluster_tol) {
  if (a.rows() != a.cols()) throw ShapeError("diagonalization needs a square matrix");
  if (hermiticity_defect(a) > kHermitianTolerance) throw DomainError("diagonalization needs a Hermitian matrix");
  DiagonalizationReport r;
  r.policy = kPhaseFixPolicy;
  const int d = static_cast<int>(a.rows());
  if (d == 0) return r;
  Eigen::MatrixXcd vecs;
  r.real_path = a.imag().cwiseAbs().maxCoeff() == 0.0;
  if (r.real_path) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.real());
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    r.eigenvalues = es.eigenvalues();
    vecs = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    r.eigenvalues = es.eigenvalues();
    vecs = es.eigenvectors();
  }
  const double scale = std::max(1.0, r.eigenvalues.cwiseAbs().maxCoeff());
  for (int i = 0; i < d;) {
    int j = i + 1;
    while (j < d && r.eigenvalues(j) - r.eigenvalues(j - 1) <= cluster_tol * scale) ++j;
    if (j - i > 1) {
      respan_cluster(vecs, i, j);
      ++r.degenerate_clusters;
    }
    i = j;
  }
  for (int c = 0; c < d; ++c) {
    Eigen::VectorXcd v = vecs.col(c);
    phase_fix(v);
    vecs.col(c) = v;
  }
  r.residual = (a - vecs * r.eigenvalues.cast<cplx>().asDiagonal() * vecs.adjoint()).cwiseAbs().maxCoeff();
  r.basis = std::move(vecs);
  return r;
}

DiagonalizedSpace diagonalize_coordinate(const FuzzySpace& s, int index) {
  if (index < 0 || index >= s.dimension()) throw DomainError("coordinate index out of range");
  auto rep = diagonalize(s.coordinate(index).data());
  std::vector<FuzzyMatrix> coords;
  for (const auto& c : s.coordinates())
    coords.emplace_back(rep.basis.adjoint() * c.data() * rep.basis, c.meta().block_size, c.meta().layout);
  return {FuzzySpace(s.name() + ":diagonalized", s.names(), std::move(coords)), std::move(rep)};
}

FuzzySpace matrix_poly_transform(const FuzzySpace& s, const TransformRecipe& recipe, TransformReport* report) {
  std::map<std::string, Eigen::MatrixXcd> table;
  for (int i = 0; i < s.dimension(); ++i) table[s.names()[i]] = s.coordinate(i).data();
  const int d = s.dim();
  auto get = [&table](const std::string& name) -> const Eigen::MatrixXcd& {
    auto it = table.find(name);
    if (it == table.end()) throw ConfigError("recipe refers to unknown matrix '" + name + "'");
    return it->second;
  };
  TransformReport local;
  for (const auto& step : recipe.steps) {
    if (const auto* p = std::get_if<PolyStep>(&step)) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
      for (const auto& t : p->terms) {
        Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(d, d);
        for (const auto& f : t.factors) prod = prod * get(f);
        if (t.symmetrized && t.factors.size() > 1) {
          Eigen::MatrixXcd rev = Eigen::MatrixXcd::Identity(d, d);
          for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) rev = rev * get(*it);
          prod = 0.5 * (prod + rev);
        }
        acc += t.coeff * prod;
      }
      table[p->target] = std::move(acc);
    } else if (const auto* m = std::get_if<DiagonalMapStep>(&step)) {
      const Eigen::MatrixXcd& src = get(m->source);
      const Eigen::MatrixXcd diag = src.diagonal().asDiagonal();
      if ((src - diag).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, src.cwiseAbs().maxCoeff()))
        throw DomainError("diagonal map needs a diagonal source '" + m->source + "'");
      Eigen::VectorXcd out(d);
      for (int k = 0; k < d; ++k) {
        const cplx den = m->shift + m->scale * src(k, k);
        if (std::abs(den) < 1e-12)
          throw DomainError("division by zero in diagonal map at row " + std::to_string(k));
        if (std::abs(den) < m->near_singular) local.near_singular_rows.push_back(k);
        out(k) = 1.0 / den;
      }
      table[m->target] = out.asDiagonal();
    } else if (const auto* g = std::get_if<DiagonalizeStep>(&step)) {
      auto rep = diagonalize(get(g->coordinate));
      for (auto& [name, mat] : table) mat = rep.basis.adjoint() * mat * rep.basis;
      local.diagonalizations.push_back(std::move(rep));
    }
  }
  std::vector<FuzzyMatrix> coords;
  for (const auto& name : recipe.outputs) coords.emplace_back(get(name));
  if (report) *report = std::move(local);
  return FuzzySpace(s.name() + ":transformed", recipe.outputs, std::move(coords));
}

TransformRecipe cylinder_to_u_recipe(double alpha) {
  TransformRecipe r;
  r.steps.emplace_back(PolyStep{"Z'", {{alpha, {"Z", "Z"}}, {-1.0, {"X"}}}});
  r.steps.emplace_back(PolyStep{"X'", {{1.0, {"Z"}}}});
  r.steps.emplace_back(PolyStep{"Y'", {{1.0, {"Y"}}}});
  r.steps.emplace_back(DiagonalizeStep{"Z'"});
  r.outputs = {"X'", "Y'", "Z'"};
  return r;
}

TransformRecipe clifford_projection_recipe(const std::array<std::string, 4>& x) {
  TransformRecipe r;
  r.steps.emplace_back(DiagonalMapStep{"XI", x[3], 1.0, 1.0, 0.1});
  r.steps.emplace_back(PolyStep{"X", {{1.0, {"XI", x[2]}, true}}});
  r.steps.emplace_back(PolyStep{"Y", {{1.0, {"XI", x[1]}, true}}});
  r.steps.emplace_back(PolyStep{"Z", {{1.0, {"XI", x[0]}, true}}});
  r.steps.emplace_back(DiagonalizeStep{"Z"});
  r.outputs = {"X", "Y", "Z"};
  return r;
}

namespace {

ProfileFunction mirrored(const ProfileFunction& p, double q_e, bool odd) {
  const ProfileFunction reflected = p.compose(ProfileFunction::affine(-1.0, 2 * q_e));
  const ProfileFunction right = odd ? ProfileFunction(2 * p(q_e)) - reflected : reflected;
  if (p.constant_value() && !odd) return p;
  return ProfileFunction::select(q_e, p, right);
}

FourierFunction mirrored(const FourierFunction& f, double q_e, const Interval& iv, bool odd) {
  FourierFunction::Table t;
  for (const auto& [n, c] : f.coefficients())
    t.emplace(n, ComplexProfile(mirrored(c.re(), q_e, odd), mirrored(c.im(), q_e, odd)));
  return {iv, std::move(t)};
}

}  // namespace

FuzzySpace mirror_concat(const FuzzySpace& s, double q_e, int height_index) {
  if (s.generators().empty() || !s.grid()) throw DomainError("mirroring needs generators and a grid");
  const auto& grid = *s.grid();
  const Interval& iv = grid.interval();
  if (!(q_e > iv.lo) || q_e > iv.hi + 1e-12) throw DomainError("mirror point must lie in (q1, q2]");
  if (height_index < 0) {
    const auto& names = s.names();
    auto it = std::find(names.begin(), names.end(), "Z");
    height_index = it == names.end() ? -1 : static_cast<int>(it - names.begin());
  }
  const Interval out_iv{iv.lo, 2 * q_e - iv.lo};
  const int blocks = static_cast<int>(std::lround(2.0 * grid.size() * (q_e - iv.lo) / iv.length()));
  DiscretizingGrid out_grid(blocks, out_iv, grid.rule(), grid.affine());
  std::vector<MatrixFourierFunction> gens;
  std::vector<FuzzyMatrix> coords;
  for (int i = 0; i < s.dimension(); ++i) {
    const bool odd = i == height_index;
    auto g = map_entries(s.generators()[i],
                         [&](const FourierFunction& f) { return mirrored(f, q_e, out_iv, odd); });
    coords.push_back(g.size() == 1 ? regularize_scalar(g(0, 0), out_grid) : regularize_matrix(g, out_grid));
    gens.push_back(std::move(g));
  }
  return FuzzySpace(s.name() + ":mirrored", s.names(), std::move(coords), std::move(gens), out_grid);
}

MatrixFourierFunction close_caps(const MatrixFourierFunction& f, const ProfileFunction& window) {
  const Interval& iv = f.interval();
  for (double q : sample_points(iv, 257))
    if (window(q) < -1e-14) throw DomainError("cap window must be non-negative");
  if (std::abs(window(iv.lo)) > 1e-12 || std::abs(window(iv.hi)) > 1e-12)
    throw DomainError("cap window must vanish at both ends");
  return multiply_profile(f, ComplexProfile(window));
}

FuzzySpace close_caps(const FuzzySpace& s, const ProfileFunction& window) {
  if (s.generators().empty() || !s.grid()) throw DomainError("closing caps needs generators and a grid");
  std::vector<MatrixFourierFunction> gens;
  std::vector<FuzzyMatrix> coords;
  for (const auto& g : s.generators()) {
    auto c = close_caps(g, window);
    coords.push_back(c.size() == 1 ? regularize_scalar(c(0, 0), *s.grid()) : regularize_matrix(c, *s.grid()));
    gens.push_back(std::move(c));
  }
  return FuzzySpace(s.name() + ":capped", s.names(), std::move(coords), std::move(gens), s.grid());
}

}  // namespace fuzzy
