#pragma once

#include <span>
#include <vector>

namespace signed_spectra {

// Row-major dense real matrix. Sizes here stay below ~64, so no BLAS.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);

  static Matrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  double trace() const;
  double frobenius_norm() const;
  // Maximum absolute row sum.
  double infinity_norm() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double k, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Square matrix that is exactly symmetric (checked at construction,
// NotSymmetric otherwise).
class DenseSymmetricMatrix {
 public:
  DenseSymmetricMatrix() = default;
  explicit DenseSymmetricMatrix(Matrix m);

  int order() const noexcept { return m_.rows(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  friend bool operator==(const DenseSymmetricMatrix&, const DenseSymmetricMatrix&) = default;

 private:
  Matrix m_;
};

}  // namespace signed_spectra
