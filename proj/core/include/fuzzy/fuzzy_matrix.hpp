#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuzzy/fourier.hpp"
#include "fuzzy/grid.hpp"

namespace fuzzy {

// Arrangement of an S-block structure inside a matrix: z_ordered puts the
// inner index fastest (n * S + a), block_major the outer one (a * N + n).
enum class Layout { z_ordered, block_major };

struct MatrixMeta {
  int blocks = 0;      // N
  int block_size = 1;  // S
  Layout layout = Layout::z_ordered;
  bool hermitian = false;
};

class FuzzyMatrix {
 public:
  FuzzyMatrix() = default;
  explicit FuzzyMatrix(Eigen::MatrixXcd data, int block_size = 1, Layout layout = Layout::z_ordered);

  int dim() const { return static_cast<int>(data_.rows()); }
  const Eigen::MatrixXcd& data() const { return data_; }
  const MatrixMeta& meta() const { return meta_; }
  cplx operator()(int r, int c) const { return data_(r, c); }

  bool is_hermitian() const { return meta_.hermitian; }
  FuzzyMatrix with_layout(int block_size, Layout layout) const { return FuzzyMatrix(data_, block_size, layout); }

 private:
  Eigen::MatrixXcd data_;
  MatrixMeta meta_;
};

// Largest |M - M^dagger| entry relative to max(1, max |M|).
double hermiticity_defect(const Eigen::MatrixXcd& m);
constexpr double kHermitianTolerance = 1e-12;

// Named Hermitian coordinate matrices of one common dimension, optionally with
// the matrix valued functions and grid they were regularized from.
class FuzzySpace {
 public:
  FuzzySpace() = default;
  FuzzySpace(std::string name, std::vector<std::string> names, std::vector<FuzzyMatrix> coordinates,
             std::vector<MatrixFourierFunction> generators = {},
             std::optional<DiscretizingGrid> grid = std::nullopt);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<FuzzyMatrix>& coordinates() const { return coords_; }
  const std::vector<MatrixFourierFunction>& generators() const { return generators_; }
  const std::optional<DiscretizingGrid>& grid() const { return grid_; }

  int dim() const { return coords_.empty() ? 0 : coords_.front().dim(); }
  int dimension() const { return static_cast<int>(coords_.size()); }
  int index_of(const std::string& name) const;
  const FuzzyMatrix& coordinate(int i) const { return coords_.at(i); }
  const FuzzyMatrix& coordinate(const std::string& name) const { return coords_.at(index_of(name)); }

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<FuzzyMatrix> coords_;
  std::vector<MatrixFourierFunction> generators_;
  std::optional<DiscretizingGrid> grid_;
};

}  // namespace fuzzy
