#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace signed_spectra {

enum class Sign : std::int8_t { negative = -1, none = 0, positive = 1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(value(a) * value(b));
}

constexpr Sign operator-(Sign a) noexcept { return static_cast<Sign>(-value(a)); }

// Vertex indices are 0-based throughout the library API; the text format and
// the CLI translate to the 1-based v_i / w_j labels.
struct SignedEdge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Simple signed graph on n vertices stored as a dense n x n sign matrix with
// zero diagonal. Immutable once built; the with_* members return copies.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n);

  // Errors: SelfLoop, BadVertex, DuplicateEdge (same unordered pair twice,
  // regardless of sign), BadParam for a Sign::none edge.
  static SignedGraph from_edge_list(int n, std::span<const SignedEdge> edges);

  // Row-major n x n; must be symmetric with a zero diagonal.
  static SignedGraph from_sign_matrix(int n, std::vector<Sign> entries);

  int order() const noexcept { return n_; }
  Sign sign(int u, int v) const;
  bool adjacent(int u, int v) const { return sign(u, v) != Sign::none; }
  int degree(int v) const;
  int edge_count() const;
  int negative_edge_count() const;
  std::span<const Sign> row(int u) const;
  std::vector<int> neighbors(int v) const;

  // Edges with u < v in lexicographic order.
  std::vector<SignedEdge> edges() const;

  // |A|: every edge positive.
  SignedGraph underlying() const;
  // All-positive graph on the same vertex set whose edges are the negative
  // edges of this graph (H in the (G, H^-) notation).
  SignedGraph negative_subgraph() const;

  SignedGraph with_edge(int u, int v, Sign sign) const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Sign> adj_;
};

bool is_connected(const SignedGraph& g);
std::vector<std::vector<int>> connected_components(const SignedGraph& g);

// Proper 2-colouring of the underlying graph (colour 0 on the lowest vertex of
// each component), or nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const SignedGraph& g);

// Complete-bipartite recognition through the forbidden induced K2 + K1.
// Requires a connected bipartite underlying graph (BadInput otherwise).
bool is_complete_bipartite(const SignedGraph& g);

enum class Side { X, Y };

// Signed bipartite graph with bipartition X = {v_1..v_r}, Y = {w_1..w_s} and
// r <= s, stored as the r x s sign matrix (Sign::none marks a non-edge).
class SignedBipartiteGraph {
 public:
  SignedBipartiteGraph() = default;

  // `signs` is row-major rows x cols. When rows > cols the matrix is
  // transposed so that r <= s; parts_swapped() records that this happened.
  SignedBipartiteGraph(int rows, int cols, std::vector<Sign> signs);

  // Vertices [0, r) of g form one part and [r, n) the other. Throws
  // NotBipartite when an edge lies inside a part.
  static SignedBipartiteGraph from_signed_graph(const SignedGraph& g, int r);

  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  int order() const noexcept { return r_ + s_; }
  bool parts_swapped() const noexcept { return swapped_; }

  Sign sign(int i, int j) const;
  bool has_edge(int i, int j) const { return sign(i, j) != Sign::none; }
  std::span<const Sign> signs() const noexcept { return signs_; }

  bool is_complete_host() const;
  int edge_count() const;
  int negative_count() const;
  std::vector<std::pair<int, int>> negative_edges() const;

  // X occupies vertices [0, r), Y occupies [r, r + s).
  SignedGraph to_signed_graph() const;
  // +1 exactly where this graph has a negative edge.
  SignedBipartiteGraph negative_part() const;
  SignedBipartiteGraph with_sign(int i, int j, Sign sign) const;

  friend bool operator==(const SignedBipartiteGraph& a, const SignedBipartiteGraph& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.signs_ == b.signs_;
  }

 private:
  int r_ = 0;
  int s_ = 0;
  bool swapped_ = false;
  std::vector<Sign> signs_;
};

// All-positive K_{r,s} except the listed (i, j) pairs, which are negative.
// Errors: BadParts when r > s, BadVertex, DuplicateEdge.
SignedBipartiteGraph complete_bipartite(int r, int s,
                                        std::span<const std::pair<int, int>> negative_edges);

// (K_{r,s}, D_{i,j}^-): negative edges v_1 w_t (t <= j) and v_t w_1 (2 <= t <= i).
SignedBipartiteGraph double_star(int r, int s, int i, int j);

// Single negative edge v_1 w_1.
SignedBipartiteGraph gstar(int r, int s);

struct NegativeSubgraphStats {
  std::vector<int> degree_x;
  std::vector<int> degree_y;
  // common_x[i][j] = |N_H(v_i) ∩ N_H(v_j)|
  std::vector<std::vector<int>> common_x;
  int negative_edges = 0;
};

NegativeSubgraphStats negative_stats(const SignedBipartiteGraph& g);

// Edges are the nonzero entries (signs ignored). True iff the neighbourhoods
// of the vertices on `side` are totally ordered by inclusion.
bool is_chain_graph(const SignedBipartiteGraph& h, Side side = Side::X);

}  // namespace signed_spectra
