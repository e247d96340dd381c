#pragma once

#include <cstddef>
#include <vector>

namespace gingap::skewlinalg {

/// Dense row-major real matrix.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

/// Even-dimensional real antisymmetric matrix; only the strict upper
/// triangle is stored, so M = -M^T holds by construction.
class SkewMatrix {
 public:
  explicit SkewMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }

  /// Strict-upper entry, i < j.
  double& upper(std::size_t i, std::size_t j) { return upper_[index(i, j)]; }
  double upper(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }

  /// Signed entry at any (i,j); zero on the diagonal.
  double entry(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    return i < j ? upper_[index(i, j)] : -upper_[index(j, i)];
  }

  DenseMatrix to_dense() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    // row i holds columns i+1 .. dim-1
    return i * (dim_ - 1) - i * (i - 1) / 2 + (j - i - 1);
  }

  std::size_t dim_;
  std::vector<double> upper_;
};

/// Determinant by row-pivoted Gaussian elimination with exact sign tracking.
/// Singular matrices return 0 (or a tiny residual value).
double determinant(DenseMatrix m);

/// Pfaffian by Parlett-Reid skew-symmetric tridiagonalization with partial
/// pivoting; satisfies pfaffian(m)^2 = determinant(m) up to roundoff.
double pfaffian(const SkewMatrix& m);

}  // namespace gingap::skewlinalg
