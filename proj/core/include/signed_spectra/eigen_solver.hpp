#pragma once

#include <vector>

#include "signed_spectra/matrix.hpp"
#include "signed_spectra/polynomial.hpp"

namespace signed_spectra {

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k belongs to values[k]; empty unless requested
};

// Cyclic Jacobi. Sweeps until the off-diagonal Frobenius mass falls below
// 1e-14 * ||M||_F; throws NumericDomain if that takes more than 100 sweeps.
EigenDecomposition symmetric_eigen(const DenseSymmetricMatrix& m, bool with_vectors = false);

std::vector<double> eigenvalues(const DenseSymmetricMatrix& m);

double spectral_radius(const DenseSymmetricMatrix& m);

struct SpectralSummary {
  int n = 0;
  std::vector<double> eigenvalues;  // descending
  double rho = 0.0;                 // max |eigenvalue|
  double index = 0.0;               // largest eigenvalue
  Polynomial charpoly;              // prod (x - eigenvalue), descending powers
};

SpectralSummary spectral_summary(const DenseSymmetricMatrix& m);

}  // namespace signed_spectra
