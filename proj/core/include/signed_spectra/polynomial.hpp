#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "signed_spectra/matrix.hpp"

namespace signed_spectra {

// Real polynomial, coefficients in descending powers: c[0] x^d + ... + c[d].
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  static Polynomial from_roots(std::span<const double> roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  double operator()(double x) const;
  Polynomial times_x(int power = 1) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

// Closed-form polynomials carry exact integer coefficients (same layout).
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<std::int64_t> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }
  double operator()(double x) const { return to_real()(x); }
  IntegerPolynomial times_x(int power = 1) const;
  Polynomial to_real() const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// det(xI - M) by the Faddeev-LeVerrier trace recursion. Works for any square
// matrix (quotient matrices are generally not symmetric).
Polynomial faddeev_leverrier(const Matrix& m);

// Real roots, ascending, for polynomials whose degree is at most 3 once the
// exact-zero roots (trailing zero coefficients) are factored out; those zero
// roots are included. Cubics use the trigonometric form when all roots are
// real and Cardano otherwise, then a Newton polish. BadParam for higher degree.
std::vector<double> real_roots(const Polynomial& p);

// Same degree and |a_i - b_i| <= rel * max(1, |a_i|) for every coefficient.
bool coefficients_close(const Polynomial& a, const Polynomial& b, double rel = 1e-6);

}  // namespace signed_spectra
