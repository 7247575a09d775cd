#pragma once

#include <cstdint>
#include <vector>

#include "signed_spectra/eigen_solver.hpp"
#include "signed_spectra/matrix.hpp"
#include "signed_spectra/polynomial.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

DenseSymmetricMatrix adjacency(const SignedGraph& g);
// Ordered X = [0, r), Y = [r, r + s).
DenseSymmetricMatrix adjacency(const SignedBipartiteGraph& g);

SpectralSummary spectral_summary(const SignedGraph& g);
double spectral_radius(const SignedGraph& g);
double index(const SignedGraph& g);

// X-block of A^2, i.e. M M^T for the r x s signed biadjacency M. Any host.
DenseSymmetricMatrix x_block_of_square(const SignedBipartiteGraph& g);

// X-block of A^2 for a complete host, assembled entrywise from the negative
// subgraph: B_ij = s - 2(d_i + d_j) + 4|N_i ∩ N_j|. BadInput otherwise.
DenseSymmetricMatrix square_block_B(const SignedBipartiteGraph& g);

using Partition = std::vector<std::vector<int>>;

struct Quotient {
  Matrix matrix;
  // Every row inside a block has the same sum over each block (exact).
  bool is_equitable = false;
};

// b_ij = (1/|P_i|) sum of M over P_i x P_j. BadPartition unless the blocks
// are non-empty and cover 0..order-1 exactly once.
Quotient quotient_matrix(const Matrix& m, const Partition& partition);

// Cubic lambda^3 - rs lambda^2 + Q1 lambda + Q0 for the X-block of
// (K_{r,s}, H^-) where H is the star or double star with d = d_H(v_1) and
// l = k - d + 1 = d_H(w_1), i.e. H = D_{l,d}.
struct CubicClosedForm {
  int r = 0;
  int s = 0;
  int k = 0;
  int d = 0;
  int l = 0;
  std::int64_t q1 = 0;
  std::int64_t q0 = 0;
  IntegerPolynomial polynomial;
};

// BadParam unless 1 <= r <= s, k >= 1, 1 <= d <= min(k, s), 1 <= l <= r.
CubicClosedForm double_star_charpoly(int r, int s, int k, int d);

// X classes {v_1}, {v_2..v_l}, {v_{l+1}..v_r} with empty classes dropped. The
// partition is equitable for square_block_B(double_star(r, s, l, d)).
Partition double_star_partition(int r, int l);

enum class FamilyCase { StarAtY = 1, FullX = 2, StarAtX = 3, FullY = 4 };

struct FamilySpectrum {
  FamilyCase family_case = FamilyCase::StarAtY;
  int r = 0;
  int s = 0;
  int k = 0;
  int i = 0;  // H = D_{i,j}
  int j = 0;
  std::int64_t coefficient = 0;  // linear coefficient; constant term is 0
  IntegerPolynomial polynomial;  // lambda^3 - rs lambda^2 + coefficient lambda
  double z = 0.0;                // (rs)^2 - 4 coefficient
  double rho = 0.0;
  std::vector<double> spectrum;  // full adjacency spectrum, descending, length r + s
};

// Families of (K_{r,s}, D^-) with a vanishing constant term:
//   1: D_{k,1}, k <= r      2: D_{r,k+1-r}, r <= k <= r+s-1
//   3: D_{1,k}, k <= s      4: D_{k+1-s,s}, s <= k <= r+s-1
// BadParam for ranges outside these or r < 2; NumericDomain when z < 0.
FamilySpectrum family_spectrum(int family_case, int r, int s, int k);

// Largest spectral radius over unbalanced signatures of K_{r,s}, attained by
// a single negative edge. BadParam unless 2 <= r <= s.
double gstar_bound(int r, int s);

// Nonnegative rho-eigenvector of A(gstar(r, s)) by symmetry class, with unit
// Euclidean norm over all r + s coordinates.
struct GstarEigenvector {
  double w1 = 0.0;  // v_1
  double w2 = 0.0;  // each of v_2..v_r
  double y1 = 0.0;  // w_1
  double y2 = 0.0;  // each of w_2..w_s
  double rho = 0.0;
  int r = 0;
  int s = 0;

  // Coordinates in adjacency(gstar(r, s)) order.
  std::vector<double> expand() const;
};

GstarEigenvector gstar_eigenvector(int r, int s);

// gstar(r, s) with one positive edge deleted:
//   1: v_1 w_2 (s >= 3)   2: v_2 w_1 (r >= 3)   3: v_2 w_2 (r, s >= 2)
enum class MinusEdgeCase { V1W2 = 1, V2W1 = 2, V2W2 = 3 };

SignedBipartiteGraph minus_edge_graph(int edge_case, int r, int s);

// Characteristic polynomial of the quotient of the X-block of A^2 of
// minus_edge_graph, whose largest root is rho^2 of that graph.
IntegerPolynomial minus_edge_charpoly(int edge_case, int r, int s);

// lambda^2 - rs lambda + 4(r-1)(s-1), the same quotient for gstar(r, s).
IntegerPolynomial gstar_square_charpoly(int r, int s);

// X-partition matching minus_edge_charpoly: {v_1}, X\v_1 for case 1 and
// {v_1}, {v_2}, rest for cases 2 and 3 (rest dropped when empty).
Partition minus_edge_partition(int edge_case, int r, int s);

}  // namespace signed_spectra
