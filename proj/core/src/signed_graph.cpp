#include "signed_spectra/signed_graph.hpp"

#include <algorithm>
#include <deque>

#include <fmt/core.h>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::BadVertex: return "BadVertex";
    case ErrorKind::BadParts: return "BadParts";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::Incomparable: return "Incomparable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::NumericDomain: return "NumericDomain";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

SignedGraph::SignedGraph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorKind::BadParam, "vertex count must be non-negative");
  adj_.assign(static_cast<std::size_t>(n) * n, Sign::none);
}

SignedGraph SignedGraph::from_edge_list(int n, std::span<const SignedEdge> edges) {
  SignedGraph g(n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorKind::BadVertex,
                  fmt::format("edge ({}, {}) out of range for n = {}", e.u, e.v, n));
    }
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, fmt::format("self-loop at vertex {}", e.u));
    if (e.sign == Sign::none) throw Error(ErrorKind::BadParam, "edge sign must be +1 or -1");
    auto& slot = g.adj_[static_cast<std::size_t>(e.u) * n + e.v];
    if (slot != Sign::none) {
      throw Error(ErrorKind::DuplicateEdge, fmt::format("duplicate edge ({}, {})", e.u, e.v));
    }
    slot = e.sign;
    g.adj_[static_cast<std::size_t>(e.v) * n + e.u] = e.sign;
  }
  return g;
}

SignedGraph SignedGraph::from_sign_matrix(int n, std::vector<Sign> entries) {
  if (n < 0 || entries.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorKind::BadParam, "sign matrix size does not match vertex count");
  }
  for (int u = 0; u < n; ++u) {
    if (entries[static_cast<std::size_t>(u) * n + u] != Sign::none) {
      throw Error(ErrorKind::SelfLoop, fmt::format("self-loop at vertex {}", u));
    }
    for (int v = u + 1; v < n; ++v) {
      if (entries[static_cast<std::size_t>(u) * n + v] != entries[static_cast<std::size_t>(v) * n + u]) {
        throw Error(ErrorKind::NotSymmetric, fmt::format("sign matrix asymmetric at ({}, {})", u, v));
      }
    }
  }
  SignedGraph g;
  g.n_ = n;
  g.adj_ = std::move(entries);
  return g;
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error(ErrorKind::BadVertex, fmt::format("vertex {} out of range", v));
}

Sign SignedGraph::sign(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u) * n_ + v];
}

std::span<const Sign> SignedGraph::row(int u) const {
  check_vertex(u);
  return std::span<const Sign>(adj_).subspan(static_cast<std::size_t>(u) * n_, n_);
}

int SignedGraph::degree(int v) const {
  const auto r = row(v);
  return static_cast<int>(std::count_if(r.begin(), r.end(), [](Sign s) { return s != Sign::none; }));
}

int SignedGraph::edge_count() const {
  const auto nonzero = std::count_if(adj_.begin(), adj_.end(), [](Sign s) { return s != Sign::none; });
  return static_cast<int>(nonzero / 2);
}

int SignedGraph::negative_edge_count() const {
  const auto neg = std::count(adj_.begin(), adj_.end(), Sign::negative);
  return static_cast<int>(neg / 2);
}

std::vector<int> SignedGraph::neighbors(int v) const {
  std::vector<int> out;
  const auto r = row(v);
  for (int u = 0; u < n_; ++u) {
    if (r[u] != Sign::none) out.push_back(u);
  }
  return out;
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      const Sign s = adj_[static_cast<std::size_t>(u) * n_ + v];
      if (s != Sign::none) out.push_back({u, v, s});
    }
  }
  return out;
}

SignedGraph SignedGraph::underlying() const {
  SignedGraph g = *this;
  for (auto& s : g.adj_) {
    if (s != Sign::none) s = Sign::positive;
  }
  return g;
}

SignedGraph SignedGraph::negative_subgraph() const {
  SignedGraph g = *this;
  for (auto& s : g.adj_) s = (s == Sign::negative) ? Sign::positive : Sign::none;
  return g;
}

SignedGraph SignedGraph::with_edge(int u, int v, Sign sign) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::SelfLoop, fmt::format("self-loop at vertex {}", u));
  SignedGraph g = *this;
  g.adj_[static_cast<std::size_t>(u) * n_ + v] = sign;
  g.adj_[static_cast<std::size_t>(v) * n_ + u] = sign;
  return g;
}

std::vector<std::vector<int>> connected_components(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> components;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const auto r = g.row(comp[head]);
      for (int v = 0; v < n; ++v) {
        if (r[v] != Sign::none && !seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const SignedGraph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

std::optional<std::vector<int>> two_coloring(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      const auto r = g.row(u);
      for (int v = 0; v < n; ++v) {
        if (r[v] == Sign::none) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_complete_bipartite(const SignedGraph& g) {
  if (!is_connected(g) || !two_coloring(g)) {
    throw Error(ErrorKind::BadInput, "is_complete_bipartite needs a connected bipartite graph");
  }
  const int n = g.order();
  for (const auto& e : g.edges()) {
    for (int c = 0; c < n; ++c) {
      if (c == e.u || c == e.v) continue;
      if (!g.adjacent(c, e.u) && !g.adjacent(c, e.v)) return false;
    }
  }
  return true;
}

SignedBipartiteGraph::SignedBipartiteGraph(int rows, int cols, std::vector<Sign> signs) {
  if (rows < 0 || cols < 0 || signs.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorKind::BadParam, "sign matrix size does not match the parts");
  }
  if (rows <= cols) {
    r_ = rows;
    s_ = cols;
    signs_ = std::move(signs);
    return;
  }
  r_ = cols;
  s_ = rows;
  swapped_ = true;
  signs_.assign(signs.size(), Sign::none);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      signs_[static_cast<std::size_t>(j) * rows + i] = signs[static_cast<std::size_t>(i) * cols + j];
    }
  }
}

SignedBipartiteGraph SignedBipartiteGraph::from_signed_graph(const SignedGraph& g, int r) {
  const int n = g.order();
  if (r < 0 || r > n) throw Error(ErrorKind::BadParts, fmt::format("part size {} invalid for n = {}", r, n));
  const int s = n - r;
  for (const auto& e : g.edges()) {
    if ((e.u < r) == (e.v < r)) {
      throw Error(ErrorKind::NotBipartite,
                  fmt::format("edge ({}, {}) lies inside one part", e.u + 1, e.v + 1));
    }
  }
  std::vector<Sign> signs(static_cast<std::size_t>(r) * s, Sign::none);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) signs[static_cast<std::size_t>(i) * s + j] = g.sign(i, r + j);
  }
  return SignedBipartiteGraph(r, s, std::move(signs));
}

Sign SignedBipartiteGraph::sign(int i, int j) const {
  if (i < 0 || i >= r_ || j < 0 || j >= s_) {
    throw Error(ErrorKind::BadVertex, fmt::format("bipartite entry ({}, {}) out of range", i, j));
  }
  return signs_[static_cast<std::size_t>(i) * s_ + j];
}

bool SignedBipartiteGraph::is_complete_host() const {
  return std::none_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::none; });
}

int SignedBipartiteGraph::edge_count() const {
  return static_cast<int>(
      std::count_if(signs_.begin(), signs_.end(), [](Sign s) { return s != Sign::none; }));
}

int SignedBipartiteGraph::negative_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), Sign::negative));
}

std::vector<std::pair<int, int>> SignedBipartiteGraph::negative_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < s_; ++j) {
      if (signs_[static_cast<std::size_t>(i) * s_ + j] == Sign::negative) out.emplace_back(i, j);
    }
  }
  return out;
}

SignedGraph SignedBipartiteGraph::to_signed_graph() const {
  const int n = r_ + s_;
  std::vector<Sign> entries(static_cast<std::size_t>(n) * n, Sign::none);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < s_; ++j) {
      const Sign s = signs_[static_cast<std::size_t>(i) * s_ + j];
      entries[static_cast<std::size_t>(i) * n + r_ + j] = s;
      entries[static_cast<std::size_t>(r_ + j) * n + i] = s;
    }
  }
  return SignedGraph::from_sign_matrix(n, std::move(entries));
}

SignedBipartiteGraph SignedBipartiteGraph::negative_part() const {
  SignedBipartiteGraph h = *this;
  for (auto& s : h.signs_) s = (s == Sign::negative) ? Sign::positive : Sign::none;
  return h;
}

SignedBipartiteGraph SignedBipartiteGraph::with_sign(int i, int j, Sign sign) const {
  (void)this->sign(i, j);
  SignedBipartiteGraph g = *this;
  g.signs_[static_cast<std::size_t>(i) * s_ + j] = sign;
  return g;
}

SignedBipartiteGraph complete_bipartite(int r, int s,
                                        std::span<const std::pair<int, int>> negative_edges) {
  if (r < 1 || s < 1) throw Error(ErrorKind::BadParam, "parts must be non-empty");
  if (r > s) throw Error(ErrorKind::BadParts, fmt::format("parts ({}, {}) must satisfy r <= s", r, s));
  std::vector<Sign> signs(static_cast<std::size_t>(r) * s, Sign::positive);
  for (const auto& [i, j] : negative_edges) {
    if (i < 0 || i >= r || j < 0 || j >= s) {
      throw Error(ErrorKind::BadVertex, fmt::format("negative edge ({}, {}) outside K_{{{},{}}}", i, j, r, s));
    }
    auto& slot = signs[static_cast<std::size_t>(i) * s + j];
    if (slot == Sign::negative) {
      throw Error(ErrorKind::DuplicateEdge, fmt::format("duplicate negative edge ({}, {})", i, j));
    }
    slot = Sign::negative;
  }
  return SignedBipartiteGraph(r, s, std::move(signs));
}

SignedBipartiteGraph double_star(int r, int s, int i, int j) {
  if (r > s) throw Error(ErrorKind::BadParts, fmt::format("parts ({}, {}) must satisfy r <= s", r, s));
  if (i < 1 || i > r || j < 1 || j > s) {
    throw Error(ErrorKind::BadParam, fmt::format("D_{{{},{}}} does not fit in K_{{{},{}}}", i, j, r, s));
  }
  std::vector<std::pair<int, int>> negative;
  for (int t = 0; t < j; ++t) negative.emplace_back(0, t);
  for (int t = 1; t < i; ++t) negative.emplace_back(t, 0);
  return complete_bipartite(r, s, negative);
}

SignedBipartiteGraph gstar(int r, int s) { return double_star(r, s, 1, 1); }

NegativeSubgraphStats negative_stats(const SignedBipartiteGraph& g) {
  const int r = g.r();
  const int s = g.s();
  NegativeSubgraphStats st;
  st.degree_x.assign(r, 0);
  st.degree_y.assign(s, 0);
  st.common_x.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      if (g.sign(i, j) != Sign::negative) continue;
      ++st.degree_x[i];
      ++st.degree_y[j];
      ++st.negative_edges;
    }
  }
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      int common = 0;
      for (int j = 0; j < s; ++j) {
        common += (g.sign(a, j) == Sign::negative && g.sign(b, j) == Sign::negative) ? 1 : 0;
      }
      st.common_x[a][b] = common;
    }
  }
  return st;
}

bool is_chain_graph(const SignedBipartiteGraph& h, Side side) {
  const int count = side == Side::X ? h.r() : h.s();
  const int other = side == Side::X ? h.s() : h.r();
  std::vector<std::vector<bool>> nbr(count, std::vector<bool>(other, false));
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < other; ++b) {
      nbr[a][b] = side == Side::X ? h.has_edge(a, b) : h.has_edge(b, a);
    }
  }
  auto subset = [&](int a, int b) {
    for (int t = 0; t < other; ++t) {
      if (nbr[a][t] && !nbr[b][t]) return false;
    }
    return true;
  };
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (!subset(a, b) && !subset(b, a)) return false;
    }
  }
  return true;
}

}  // namespace signed_spectra
