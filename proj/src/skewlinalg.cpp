#include "gingap/skewlinalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gingap::skewlinalg {

SkewMatrix::SkewMatrix(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim % 2 != 0)
    throw std::domain_error("SkewMatrix: dimension must be even and positive");
  upper_.assign(dim * (dim - 1) / 2, 0.0);
}

DenseMatrix SkewMatrix::to_dense() const {
  DenseMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double v = upper_[index(i, j)];
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

double determinant(DenseMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const std::size_t n = m.rows();
  double sign = 1.0;
  double logabs = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    const double pivot = m(k, k);
    if (pivot < 0.0) sign = -sign;
    logabs += std::log(std::abs(pivot));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return sign * std::exp(logabs);
}

double pfaffian(const SkewMatrix& sk) {
  const std::size_t n = sk.dim();
  DenseMatrix m = sk.to_dense();
  double sign = 1.0;
  double logabs = 0.0;
  for (std::size_t k = 0; k + 2 <= n; k += 2) {
    // pivot: bring the largest |m(i,k)|, i > k, into row k+1
    std::size_t piv = k + 1;
    double best = std::abs(m(k + 1, k));
    for (std::size_t i = k + 2; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best == 0.0) return 0.0;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k + 1, j), m(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, piv));
      sign = -sign;
    }
    const double pivot = m(k + 1, k);
    // eliminate column k below row k+1, two-sided to keep antisymmetry
    for (std::size_t i = k + 2; i < n; ++i) {
      const double f = m(i, k) / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k + 1, j);
      for (std::size_t j = k; j < n; ++j) m(j, i) -= f * m(j, k + 1);
    }
    const double t = m(k, k + 1);
    if (t < 0.0) sign = -sign;
    logabs += std::log(std::abs(t));
  }
  return sign * std::exp(logabs);
}

}  // namespace gingap::skewlinalg
