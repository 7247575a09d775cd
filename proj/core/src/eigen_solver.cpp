#include "signed_spectra/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffDiagonal = 1e-14;

double off_diagonal_mass(const Matrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) sum += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

void rotate(Matrix& a, Matrix* v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const int n = a.rows();
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 0.0;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  if (v != nullptr) {
    for (int k = 0; k < n; ++k) {
      const double vkp = (*v)(k, p);
      const double vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - s * vkq;
      (*v)(k, q) = s * vkp + c * vkq;
    }
  }
}

}  // namespace

EigenDecomposition symmetric_eigen(const DenseSymmetricMatrix& m, bool with_vectors) {
  const int n = m.order();
  Matrix a = m.matrix();
  Matrix v = with_vectors ? Matrix::identity(n) : Matrix();
  const double target = kRelativeOffDiagonal * a.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_mass(a) > target) {
    if (++sweep > kMaxSweeps) throw Error(ErrorKind::NumericDomain, "Jacobi iteration did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) rotate(a, with_vectors ? &v : nullptr, p, q);
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  EigenDecomposition out;
  out.values.reserve(n);
  for (const int k : order) out.values.push_back(a(k, k));
  if (with_vectors) {
    out.vectors = Matrix(n, n);
    for (int col = 0; col < n; ++col) {
      for (int row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
    }
  }
  return out;
}

std::vector<double> eigenvalues(const DenseSymmetricMatrix& m) { return symmetric_eigen(m).values; }

double spectral_radius(const DenseSymmetricMatrix& m) {
  const auto values = eigenvalues(m);
  if (values.empty()) return 0.0;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

SpectralSummary spectral_summary(const DenseSymmetricMatrix& m) {
  SpectralSummary s;
  s.n = m.order();
  s.eigenvalues = eigenvalues(m);
  if (!s.eigenvalues.empty()) {
    s.index = s.eigenvalues.front();
    s.rho = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
  }
  s.charpoly = Polynomial::from_roots(s.eigenvalues);
  return s;
}

}  // namespace signed_spectra
