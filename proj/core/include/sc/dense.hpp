#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "sc/errors.hpp"

namespace sc {

using Vector = std::vector<double>;

/// Dense row-major matrix. Sized for the dense spectral workloads of this
/// library (n up to a few thousand); no sparse path.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  const double* row_ptr(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }
  double* row_ptr(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector col(int j) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Dense symmetric matrix. Construction symmetrizes, so entries(i,j) ==
/// entries(j,i) holds exactly afterwards.
class SymmetricMatrix {
public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n, double fill = 0.0) : m_(n, n, fill) {}

  /// Symmetrizes by averaging with the transpose.
  static SymmetricMatrix from(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("symmetric matrix must be square");
    SymmetricMatrix s(a.rows());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = 0.5 * (a(i, j) + a(j, i));
        s.m_(i, j) = v;
        s.m_(j, i) = v;
      }
    return s;
  }

  int n() const { return m_.rows(); }

  double operator()(int i, int j) const { return m_(i, j); }

  /// Writes both (i,j) and (j,i).
  void set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  void add(int i, int j, double v) {
    m_(i, j) += v;
    if (i != j) m_(j, i) += v;
  }

  const Matrix& as_matrix() const { return m_; }

private:
  Matrix m_;
};

inline double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

inline double frobenius_norm(const SymmetricMatrix& a) { return frobenius_norm(a.as_matrix()); }

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    double* ci = c.row_ptr(i);
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* bk = b.row_ptr(k);
      for (int j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

inline Vector multiply(const Matrix& a, const Vector& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw DimensionMismatch("matrix-vector shape mismatch");
  Vector y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    const double* ai = a.row_ptr(i);
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += ai[j] * x[j];
    y[i] = s;
  }
  return y;
}

inline Vector multiply(const SymmetricMatrix& a, const Vector& x) { return multiply(a.as_matrix(), x); }

inline Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
  return c;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace sc
