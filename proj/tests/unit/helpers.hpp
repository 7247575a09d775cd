#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "signed_spectra/matrix.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace test_support {

using namespace signed_spectra;

inline std::vector<double> eigen_oracle(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(values.rbegin(), values.rend());
  return values;
}

inline SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution negative(0.5);
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.push_back({u, v, negative(rng) ? Sign::negative : Sign::positive});
    }
  }
  return SignedGraph::from_edge_list(n, edges);
}

inline SignedBipartiteGraph random_bipartite(std::mt19937_64& rng, int r, int s, double p) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution negative(0.5);
  std::vector<Sign> signs(static_cast<std::size_t>(r) * s, Sign::none);
  for (auto& x : signs) {
    if (edge(rng)) x = negative(rng) ? Sign::negative : Sign::positive;
  }
  return SignedBipartiteGraph(r, s, std::move(signs));
}

// Relabels vertex v as perm[v].
inline SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm) {
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
  return SignedGraph::from_edge_list(g.order(), edges);
}

}  // namespace test_support
