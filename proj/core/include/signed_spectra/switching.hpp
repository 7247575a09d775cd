#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

// Vertex bound for the brute-force switching-isomorphism search.
inline constexpr int kIsomorphismVertexLimit = 12;

// Switching class of a signature, gauge-fixed on the BFS spanning forest
// (root = lowest vertex of each component, neighbours in index order): every
// forest edge is switched to +1 and the class is the sign vector left on the
// cotree edges, listed in lexicographic (u < v) order.
struct SwitchingClass {
  SignedGraph underlying;
  std::vector<std::pair<int, int>> cotree_edges;
  std::vector<Sign> gauge_signs;

  friend bool operator==(const SwitchingClass&, const SwitchingClass&) = default;
};

// Flips the sign of every edge with exactly one endpoint in `subset`.
SignedGraph switched(const SignedGraph& g, std::span<const int> subset);

// Switches by a vertex function theta: sigma'(uv) = theta(u) sigma(uv) theta(v).
SignedGraph switched_by(const SignedGraph& g, std::span<const Sign> theta);

SwitchingClass canonical_gauge(const SignedGraph& g);

// theta making every edge positive, or nullopt when g is unbalanced.
std::optional<std::vector<Sign>> balancing_switch(const SignedGraph& g);

// Every fundamental cycle of the BFS forest carries an even number of negative
// edges.
bool is_balanced(const SignedGraph& g);

// Same labelled underlying graph required (Incomparable otherwise).
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Exists an isomorphism of the underlying graphs composed with a switching
// mapping a onto b. TooLarge above kIsomorphismVertexLimit vertices.
bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b);

// Structural balance test for signed complete bipartite graphs: the negative
// subgraph H is complete bipartite with r < |V(H)| < r + s and covers X or Y,
// or |V(H)| = r + s and H has at most two components, each complete
// bipartite. H empty counts as balanced. BadInput for non-complete hosts.
bool balance_structural(const SignedBipartiteGraph& g);

SignedGraph negate(const SignedGraph& g);

// switching_equivalent(g, -g); TooLarge above kIsomorphismVertexLimit.
bool is_sign_symmetric(const SignedGraph& g);

// True iff the complete-host signature is switching equivalent to one with a
// single negative edge, i.e. switching isomorphic to (K_{r,s}, v_1 w_1^-).
// No vertex bound. BadInput for non-complete hosts.
bool is_gstar_class(const SignedBipartiteGraph& g);

}  // namespace signed_spectra
