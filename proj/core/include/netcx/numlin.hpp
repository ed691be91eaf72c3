#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace netcx {

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Throws InputError if `values.size() != rows * cols`.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> data() const noexcept { return data_; }
  bool all_finite() const noexcept;

  DenseMatrix transposed() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(double s, const DenseMatrix& a);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Singular values in descending order.
std::vector<double> singular_values(const DenseMatrix& m);

/// Default rank threshold: sigma_max * max(rows, cols) * machine epsilon.
double default_rank_tolerance(std::span<const double> singular_values, std::size_t rows,
                              std::size_t cols);

/// Number of singular values strictly above `tol` (default threshold when
/// absent). Empty and all-zero matrices have rank 0. Throws InputError on
/// non-finite entries.
std::size_t numerical_rank(const DenseMatrix& m, std::optional<double> tol = std::nullopt);

/// [C; C*A; C*A^2; ...; C*A^(n-1)] for n x n matrices C and A.
DenseMatrix observability_stack(const DenseMatrix& c, const DenseMatrix& a);

}  // namespace netcx
