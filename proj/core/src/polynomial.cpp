#include "signed_spectra/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (const double root : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] -= root * c[k - 1];
  }
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (const double c : coeffs_) acc = acc * x + c;
  return acc;
}

Polynomial Polynomial::times_x(int power) const {
  auto c = coeffs_;
  c.insert(c.end(), static_cast<std::size_t>(power), 0.0);
  return Polynomial(std::move(c));
}

IntegerPolynomial::IntegerPolynomial(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

IntegerPolynomial IntegerPolynomial::times_x(int power) const {
  auto c = coeffs_;
  c.insert(c.end(), static_cast<std::size_t>(power), 0);
  return IntegerPolynomial(std::move(c));
}

Polynomial IntegerPolynomial::to_real() const {
  return Polynomial(std::vector<double>(coeffs_.begin(), coeffs_.end()));
}

Polynomial faddeev_leverrier(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::BadParam, "characteristic polynomial needs a square matrix");
  const int n = m.rows();
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  // M_k = A M_{k-1} + c_{k-1} I,  c_k = -tr(A M_k) / k
  Matrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[k - 1];
    mk = std::move(next);
    c[k] = -(m * mk).trace() / k;
  }
  return Polynomial(std::move(c));
}

namespace {

double newton_polish(const Polynomial& p, double x) {
  const auto c = p.coefficients();
  for (int it = 0; it < 3; ++it) {
    double f = 0.0;
    double df = 0.0;
    for (const double ck : c) {
      df = df * x + f;
      f = f * x + ck;
    }
    if (df == 0.0) break;
    const double next = x - f / df;
    // Near a repeated root df vanishes and the step can jump to another root.
    if (!std::isfinite(next) || std::abs(p(next)) >= std::abs(f)) break;
    x = next;
  }
  return x;
}

// Roots of x^3 + a x^2 + b x + c.
std::vector<double> monic_cubic_roots(double a, double b, double c) {
  const double q = (a * a - 3.0 * b) / 9.0;
  const double r = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
  const double q3 = q * q * q;
  if (r * r <= q3) {
    const double ratio = q3 > 0.0 ? std::clamp(r / std::sqrt(q3), -1.0, 1.0) : 0.0;
    const double theta = std::acos(ratio);
    const double m = -2.0 * std::sqrt(std::max(q, 0.0));
    return {m * std::cos(theta / 3.0) - a / 3.0,
            m * std::cos((theta + 2.0 * std::numbers::pi) / 3.0) - a / 3.0,
            m * std::cos((theta - 2.0 * std::numbers::pi) / 3.0) - a / 3.0};
  }
  const double big_a = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r * r - q3)), r);
  const double big_b = big_a != 0.0 ? q / big_a : 0.0;
  const double x1 = big_a + big_b - a / 3.0;
  // Rounding can push a double root just past r^2 = q^3; the deflated
  // quadratic then has a slightly negative discriminant that is kept as zero.
  const double qb = a + x1;
  const double qc = b + qb * x1;
  const double disc = qb * qb - 4.0 * qc;
  const double scale = std::max({1.0, a * a, std::abs(b)});
  if (disc < -1e-9 * scale) return {x1};
  const double root = std::sqrt(std::max(disc, 0.0));
  return {x1, (-qb + root) / 2.0, (-qb - root) / 2.0};
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p) {
  std::vector<double> c(p.coefficients().begin(), p.coefficients().end());
  while (c.size() > 1 && c.front() == 0.0) c.erase(c.begin());
  std::vector<double> roots;
  while (c.size() > 1 && c.back() == 0.0) {
    c.pop_back();
    roots.push_back(0.0);
  }
  const Polynomial reduced(c);
  switch (reduced.degree()) {
    case 0:
      break;
    case 1:
      roots.push_back(-c[1] / c[0]);
      break;
    case 2: {
      const double a = c[0];
      const double b = c[1];
      const double cc = c[2];
      const double disc = b * b - 4.0 * a * cc;
      if (disc >= 0.0) {
        // Stable form: avoid cancellation between -b and sqrt(disc).
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        if (q != 0.0) {
          roots.push_back(q / a);
          roots.push_back(cc / q);
        } else {
          roots.push_back(0.0);
          roots.push_back(0.0);
        }
      }
      break;
    }
    case 3:
      for (const double x : monic_cubic_roots(c[1] / c[0], c[2] / c[0], c[3] / c[0])) {
        roots.push_back(newton_polish(reduced, x));
      }
      break;
    default:
      throw Error(ErrorKind::BadParam, "real_roots supports degree <= 3 after removing zero roots");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool coefficients_close(const Polynomial& a, const Polynomial& b, double rel) {
  if (a.degree() != b.degree()) return false;
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t k = 0; k < ca.size(); ++k) {
    if (std::abs(ca[k] - cb[k]) > rel * std::max(1.0, std::abs(ca[k]))) return false;
  }
  return true;
}

}  // namespace signed_spectra
