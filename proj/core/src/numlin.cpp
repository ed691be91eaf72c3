#include "netcx/numlin.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netcx/error.hpp"

namespace netcx {
namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string("dimension mismatch in ") + op);
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
  if (data_.size() != rows_ * cols_) {
    throw InputError("matrix data size does not match " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("dimension mismatch in matrix product");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (double& x : out.data_) x *= s;
  return out;
}

std::vector<double> singular_values(const DenseMatrix& m) {
  if (!m.all_finite()) throw InputError("matrix has non-finite entries");
  if (m.rows() == 0 || m.cols() == 0) return {};
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> view(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                                        static_cast<Eigen::Index>(m.cols()));
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(view);
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  for (double s : out) {
    if (!std::isfinite(s)) throw NumericalError("SVD produced non-finite singular values");
  }
  return out;
}

double default_rank_tolerance(std::span<const double> sv, std::size_t rows, std::size_t cols) {
  if (sv.empty()) return 0.0;
  const double smax = *std::max_element(sv.begin(), sv.end());
  return smax * static_cast<double>(std::max(rows, cols)) *
         std::numeric_limits<double>::epsilon();
}

std::size_t numerical_rank(const DenseMatrix& m, std::optional<double> tol) {
  const auto sv = singular_values(m);
  if (tol && !(*tol >= 0.0 && std::isfinite(*tol))) {
    throw InputError("rank tolerance must be finite and non-negative");
  }
  const double t = tol ? *tol : default_rank_tolerance(sv, m.rows(), m.cols());
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [t](double s) { return s > t; }));
}

DenseMatrix observability_stack(const DenseMatrix& c, const DenseMatrix& a) {
  if (!c.square() || !a.square() || c.rows() != a.rows()) {
    throw InputError("observability_stack expects square matrices of equal size");
  }
  const std::size_t n = a.rows();
  DenseMatrix stack(n * n, n);
  DenseMatrix block = c;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) stack(p * n + r, col) = block(r, col);
    if (p + 1 < n) block = block * a;
  }
  return stack;
}

}  // namespace netcx
