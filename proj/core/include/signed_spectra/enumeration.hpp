#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

// Bound on the cycle-space dimension m - n + 1 accepted by the enumerator.
inline constexpr int kMaxCycleRank = 20;

// One representative per switching class of a connected graph: spanning
// forest edges positive, cotree edge t negative iff bit t of the pattern is
// set. Cotree edges are those of canonical_gauge, so pattern 0 is the
// balanced class and canonical_gauge(at(p)) reads back p.
class SignatureClassEnumerator {
 public:
  // Signs of `underlying` are ignored. BadInput when disconnected, TooLarge
  // when the cycle rank exceeds kMaxCycleRank.
  explicit SignatureClassEnumerator(const SignedGraph& underlying);

  int cycle_rank() const noexcept { return static_cast<int>(cotree_.size()); }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << cotree_.size(); }
  const std::vector<std::pair<int, int>>& cotree_edges() const noexcept { return cotree_; }

  SignedGraph at(std::uint64_t pattern) const;

 private:
  SignedGraph base_;
  std::vector<std::pair<int, int>> cotree_;
};

std::vector<SignedGraph> signature_classes(const SignedGraph& underlying);

// Connected all-positive bipartite graphs with parts of sizes r <= s, one per
// isomorphism class under part-respecting relabelling (and the part swap when
// r = s). Columns of the returned biadjacency are sorted by their row-bit
// code. r + s <= 12.
std::vector<SignedBipartiteGraph> connected_bipartite_hosts(int r, int s);

// All splits r <= s with r + s = n, r >= 1, concatenated in increasing r.
std::vector<SignedBipartiteGraph> connected_bipartite_hosts(int n);

// Canonical code of the biadjacency pattern (signs ignored): lexicographic
// minimum of the sorted column codes over all row permutations, and over the
// transpose when r = s.
std::vector<std::uint32_t> bipartite_canonical_code(const SignedBipartiteGraph& g);

struct TreePlacement {
  std::vector<std::pair<int, int>> edge_set;  // (i, j) = v_i w_j, lexicographic
  bool is_tree = false;
  std::vector<int> degree_profile;  // d(v_1), ..., d(v_r)
  std::vector<int> degree_y;        // d(w_1), ..., d(w_s)
};

// Every m-edge subset of K_{r,s} that spans a tree, in lexicographic order of
// the edge index i * s + j. BadParam unless 1 <= r <= s and 1 <= m.
std::vector<TreePlacement> tree_placements(int r, int s, int m);

}  // namespace signed_spectra
