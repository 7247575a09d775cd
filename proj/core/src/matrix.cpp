#include "signed_spectra/matrix.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

Matrix::Matrix(int rows, int cols, double fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::BadParam, "matrix dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double Matrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (const double x : data_) sum += x * x;
  return std::sqrt(sum);
}

double Matrix::infinity_norm() const {
  double best = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (int j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::BadParam,
                fmt::format("cannot multiply {}x{} by {}x{}", a.rows_, a.cols_, b.rows_, b.cols_));
  }
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::BadParam, "matrix size mismatch");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-1.0) * b; }

Matrix operator*(double k, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= k;
  return c;
}

DenseSymmetricMatrix::DenseSymmetricMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error(ErrorKind::NotSymmetric, "symmetric matrix must be square");
  for (int i = 0; i < m_.rows(); ++i) {
    for (int j = i + 1; j < m_.cols(); ++j) {
      if (m_(i, j) != m_(j, i)) {
        throw Error(ErrorKind::NotSymmetric, fmt::format("entries ({}, {}) and ({}, {}) differ", i, j, j, i));
      }
    }
  }
}

}  // namespace signed_spectra
