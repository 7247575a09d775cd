#include "signed_spectra/spectra.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

namespace {

[[noreturn]] void bad_param(const std::string& what) { throw Error(ErrorKind::BadParam, what); }

void require_gstar_range(int r, int s) {
  if (r < 2 || r > s) bad_param(fmt::format("need 2 <= r <= s, got r = {}, s = {}", r, s));
}

double clamp_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace

DenseSymmetricMatrix adjacency(const SignedGraph& g) {
  const int n = g.order();
  Matrix a(n, n);
  for (int u = 0; u < n; ++u) {
    const auto row = g.row(u);
    for (int v = 0; v < n; ++v) a(u, v) = value(row[v]);
  }
  return DenseSymmetricMatrix(std::move(a));
}

DenseSymmetricMatrix adjacency(const SignedBipartiteGraph& g) { return adjacency(g.to_signed_graph()); }

SpectralSummary spectral_summary(const SignedGraph& g) { return spectral_summary(adjacency(g)); }

double spectral_radius(const SignedGraph& g) { return spectral_radius(adjacency(g)); }

double index(const SignedGraph& g) {
  const auto values = eigenvalues(adjacency(g));
  return values.empty() ? 0.0 : values.front();
}

DenseSymmetricMatrix x_block_of_square(const SignedBipartiteGraph& g) {
  const int r = g.r();
  const int s = g.s();
  Matrix b(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      int sum = 0;
      for (int t = 0; t < s; ++t) sum += value(g.sign(i, t)) * value(g.sign(j, t));
      b(i, j) = sum;
    }
  }
  return DenseSymmetricMatrix(std::move(b));
}

DenseSymmetricMatrix square_block_B(const SignedBipartiteGraph& g) {
  if (!g.is_complete_host()) throw Error(ErrorKind::BadInput, "B block formula needs a complete bipartite host");
  const auto stats = negative_stats(g);
  const int r = g.r();
  Matrix b(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      b(i, j) = g.s() - 2 * (stats.degree_x[i] + stats.degree_x[j]) + 4 * stats.common_x[i][j];
    }
  }
  return DenseSymmetricMatrix(std::move(b));
}

Quotient quotient_matrix(const Matrix& m, const Partition& partition) {
  if (!m.is_square()) throw Error(ErrorKind::BadPartition, "quotient needs a square matrix");
  const int n = m.rows();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw Error(ErrorKind::BadPartition, fmt::format("block {} is empty", b));
    for (const int v : partition[b]) {
      if (v < 0 || v >= n) throw Error(ErrorKind::BadPartition, fmt::format("index {} out of range", v));
      if (block_of[v] != -1) throw Error(ErrorKind::BadPartition, fmt::format("index {} appears twice", v));
      block_of[v] = static_cast<int>(b);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) {
    throw Error(ErrorKind::BadPartition, "partition does not cover every index");
  }

  const int k = static_cast<int>(partition.size());
  Quotient q{Matrix(k, k), true};
  for (int bi = 0; bi < k; ++bi) {
    for (int bj = 0; bj < k; ++bj) {
      double total = 0.0;
      double first_row = 0.0;
      for (std::size_t idx = 0; idx < partition[bi].size(); ++idx) {
        double row_sum = 0.0;
        for (const int v : partition[bj]) row_sum += m(partition[bi][idx], v);
        if (idx == 0) {
          first_row = row_sum;
        } else if (row_sum != first_row) {
          q.is_equitable = false;
        }
        total += row_sum;
      }
      q.matrix(bi, bj) = total / static_cast<double>(partition[bi].size());
    }
  }
  return q;
}

CubicClosedForm double_star_charpoly(int r, int s, int k, int d) {
  const int l = k - d + 1;
  if (r < 1 || r > s || k < 1 || d < 1 || d > std::min(k, s) || l < 1 || l > r) {
    bad_param(fmt::format("invalid double-star parameters (r, s, k, d) = ({}, {}, {}, {})", r, s, k, d));
  }
  CubicClosedForm c{r, s, k, d, l, 0, 0, {}};
  const std::int64_t R = r;
  const std::int64_t S = s;
  const std::int64_t K = k;
  const std::int64_t D = d;
  c.q1 = 4 * (D - 1) * (S * (K - D) + (S * K - D * R)) + 4 * (R - K) * (S - 1) * K;
  c.q0 = 16 * (D - S) * (D - 1) * (K - D) * (R - K + D - 1);
  c.polynomial = IntegerPolynomial({1, -R * S, c.q1, c.q0});
  return c;
}

Partition double_star_partition(int r, int l) {
  if (l < 1 || l > r) bad_param(fmt::format("need 1 <= l <= r, got l = {}, r = {}", l, r));
  Partition p{{0}};
  if (l > 1) {
    p.emplace_back();
    for (int v = 1; v < l; ++v) p.back().push_back(v);
  }
  if (l < r) {
    p.emplace_back();
    for (int v = l; v < r; ++v) p.back().push_back(v);
  }
  return p;
}

FamilySpectrum family_spectrum(int family_case, int r, int s, int k) {
  if (r < 2 || r > s) bad_param(fmt::format("need 2 <= r <= s, got r = {}, s = {}", r, s));
  if (k < 1 || k > r + s - 1) bad_param(fmt::format("k = {} outside 1..r+s-1", k));
  const std::int64_t R = r;
  const std::int64_t S = s;
  const std::int64_t K = k;
  FamilySpectrum f;
  f.r = r;
  f.s = s;
  f.k = k;
  switch (family_case) {
    case 1:
      if (k > r) bad_param("family 1 needs k <= r");
      f.i = k;
      f.j = 1;
      f.coefficient = 4 * (R - K) * (S - 1) * K;
      break;
    case 2:
      if (k < r) bad_param("family 2 needs k >= r");
      f.i = r;
      f.j = k + 1 - r;
      f.coefficient = 4 * (K - R) * (R - 1) * (S + R - K);
      break;
    case 3:
      if (k > s) bad_param("family 3 needs k <= s");
      f.i = 1;
      f.j = k;
      f.coefficient = 4 * K * (R - 1) * (S - K);
      break;
    case 4:
      if (k < s) bad_param("family 4 needs k >= s");
      f.i = k + 1 - s;
      f.j = s;
      f.coefficient = 4 * (R - K + S) * (S - 1) * (K - S);
      break;
    default:
      bad_param(fmt::format("unknown family case {}", family_case));
  }
  f.family_case = static_cast<FamilyCase>(family_case);
  f.polynomial = IntegerPolynomial({1, -R * S, f.coefficient, 0});
  const double rs = static_cast<double>(R * S);
  f.z = rs * rs - 4.0 * static_cast<double>(f.coefficient);
  if (f.z < 0) throw Error(ErrorKind::NumericDomain, fmt::format("negative discriminant {}", f.z));
  const double big = clamp_sqrt((rs + std::sqrt(f.z)) / 2.0);
  const double small = clamp_sqrt((rs - std::sqrt(f.z)) / 2.0);
  f.rho = big;
  f.spectrum = {big, small};
  f.spectrum.resize(static_cast<std::size_t>(r + s - 2), 0.0);
  f.spectrum.push_back(-small);
  f.spectrum.push_back(-big);
  return f;
}

double gstar_bound(int r, int s) {
  require_gstar_range(r, s);
  const double rs = static_cast<double>(r) * s;
  return std::sqrt((rs + std::sqrt(rs * rs - 16.0 * (r - 1) * (s - 1))) / 2.0);
}

std::vector<double> GstarEigenvector::expand() const {
  std::vector<double> x;
  x.reserve(static_cast<std::size_t>(r + s));
  x.push_back(w1);
  x.insert(x.end(), static_cast<std::size_t>(r - 1), w2);
  x.push_back(y1);
  x.insert(x.end(), static_cast<std::size_t>(s - 1), y2);
  return x;
}

GstarEigenvector gstar_eigenvector(int r, int s) {
  const double rho = gstar_bound(r, s);
  const double rho2 = rho * rho;
  GstarEigenvector e;
  e.r = r;
  e.s = s;
  e.rho = rho;
  // Scale fixed by y2 = 1 before normalizing. Row equations of A x = rho x:
  //   rho w1 = -y1 + (s-1) y2     rho y1 = -w1 + (r-1) w2
  //   rho w2 =  y1 + (s-1) y2     rho y2 =  w1 + (r-1) w2
  e.y2 = 1.0;
  e.y1 = r == 2 ? 0.0 : (rho2 - 2.0 * (s - 1)) / (rho2 - 2.0);
  e.w1 = (-e.y1 + (s - 1)) / rho;
  e.w2 = (e.y1 + (s - 1)) / rho;
  const double norm = std::sqrt(e.w1 * e.w1 + (r - 1) * e.w2 * e.w2 + e.y1 * e.y1 + (s - 1) * e.y2 * e.y2);
  e.w1 /= norm;
  e.w2 /= norm;
  e.y1 /= norm;
  e.y2 /= norm;
  return e;
}

namespace {

void require_minus_edge_range(int edge_case, int r, int s) {
  if (r < 2 || r > s) bad_param(fmt::format("need 2 <= r <= s, got r = {}, s = {}", r, s));
  if (edge_case == 1 && s < 3) bad_param("deleting v1w2 needs s >= 3");
  if (edge_case == 2 && r < 3) bad_param("deleting v2w1 needs r >= 3");
  if (edge_case < 1 || edge_case > 3) bad_param(fmt::format("unknown edge case {}", edge_case));
}

}  // namespace

SignedBipartiteGraph minus_edge_graph(int edge_case, int r, int s) {
  require_minus_edge_range(edge_case, r, s);
  const auto g = gstar(r, s);
  switch (edge_case) {
    case 1:
      return g.with_sign(0, 1, Sign::none);
    case 2:
      return g.with_sign(1, 0, Sign::none);
    default:
      return g.with_sign(1, 1, Sign::none);
  }
}

IntegerPolynomial minus_edge_charpoly(int edge_case, int r, int s) {
  require_minus_edge_range(edge_case, r, s);
  const std::int64_t R = r;
  const std::int64_t S = s;
  switch (edge_case) {
    case 1:
      return IntegerPolynomial({1, -(R * S - 1), (R - 1) * (5 * S - 9)});
    case 2:
      return IntegerPolynomial({1, -(R * S - 1), (5 * R - 9) * (S - 1), 0});
    default:
      return IntegerPolynomial({1, -(R * S - 1), 5 * (R - 1) * (S - 1) - 4, -4 * (S - 2) * (R - 2)});
  }
}

IntegerPolynomial gstar_square_charpoly(int r, int s) {
  require_gstar_range(r, s);
  return IntegerPolynomial({1, -static_cast<std::int64_t>(r) * s, 4 * static_cast<std::int64_t>(r - 1) * (s - 1)});
}

Partition minus_edge_partition(int edge_case, int r, int s) {
  require_minus_edge_range(edge_case, r, s);
  Partition p{{0}};
  const int rest_from = edge_case == 1 ? 1 : 2;
  if (edge_case != 1) p.push_back({1});
  if (rest_from < r) {
    p.emplace_back();
    for (int v = rest_from; v < r; ++v) p.back().push_back(v);
  }
  return p;
}

}  // namespace signed_spectra
