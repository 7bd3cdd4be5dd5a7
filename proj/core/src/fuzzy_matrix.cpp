#include "fuzzy/fuzzy_matrix.hpp"

#include <algorithm>
#include <set>

#include "fuzzy/errors.hpp"

namespace fuzzy {

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

FuzzyMatrix::FuzzyMatrix(Eigen::MatrixXcd data, int block_size, Layout layout) : data_(std::move(data)) {
  if (data_.rows() != data_.cols()) throw ShapeError("fuzzy matrix must be square");
  if (block_size < 1 || data_.rows() % block_size != 0)
    throw ShapeError("dimension " + std::to_string(data_.rows()) + " not divisible by block size " +
                     std::to_string(block_size));
  meta_.block_size = block_size;
  meta_.blocks = static_cast<int>(data_.rows()) / block_size;
  meta_.layout = layout;
  meta_.hermitian = hermiticity_defect(data_) < kHermitianTolerance;
}

FuzzySpace::FuzzySpace(std::string name, std::vector<std::string> names, std::vector<FuzzyMatrix> coordinates,
                       std::vector<MatrixFourierFunction> generators, std::optional<DiscretizingGrid> grid)
    : name_(std::move(name)),
      names_(std::move(names)),
      coords_(std::move(coordinates)),
      generators_(std::move(generators)),
      grid_(std::move(grid)) {
  if (names_.size() != coords_.size()) throw ShapeError("one name per coordinate required");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    throw ShapeError("coordinate names must be unique");
  if (!generators_.empty() && generators_.size() != coords_.size())
    throw ShapeError("one generator per coordinate required");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].dim() != coords_.front().dim()) throw ShapeError("coordinates of different dimension");
    if (!coords_[i].is_hermitian()) throw DomainError("coordinate '" + names_[i] + "' is not Hermitian");
  }
}

int FuzzySpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ShapeError("no coordinate named '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

}  // namespace fuzzy
