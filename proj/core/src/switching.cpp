#include "signed_spectra/switching.hpp"

#include <algorithm>
#include <deque>

#include <fmt/core.h>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

namespace {

struct SpanningForest {
  std::vector<int> order;   // BFS visiting order, components concatenated
  std::vector<int> parent;  // -1 for roots
};

SpanningForest bfs_forest(const SignedGraph& g) {
  const int n = g.order();
  SpanningForest f;
  f.parent.assign(n, -1);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = f.order.size();
    f.order.push_back(root);
    for (; head < f.order.size(); ++head) {
      const int u = f.order[head];
      const auto row = g.row(u);
      for (int v = 0; v < n; ++v) {
        if (row[v] != Sign::none && !seen[v]) {
          seen[v] = 1;
          f.parent[v] = u;
          f.order.push_back(v);
        }
      }
    }
  }
  return f;
}

// Potential along the forest: theta(root) = +1, theta(child) = theta(parent) * sigma.
std::vector<Sign> forest_potential(const SignedGraph& g, const SpanningForest& f) {
  std::vector<Sign> theta(g.order(), Sign::positive);
  for (const int v : f.order) {
    const int p = f.parent[v];
    if (p >= 0) theta[v] = theta[p] * g.sign(p, v);
  }
  return theta;
}

bool is_tree_edge(const SpanningForest& f, int u, int v) { return f.parent[v] == u || f.parent[u] == v; }

void require_isomorphism_size(const SignedGraph& g) {
  if (g.order() > kIsomorphismVertexLimit) {
    throw Error(ErrorKind::TooLarge, fmt::format("{} vertices exceeds the switching-isomorphism bound of {}",
                                                 g.order(), kIsomorphismVertexLimit));
  }
}

class SwitchingIsomorphismSearch {
 public:
  SwitchingIsomorphismSearch(const SignedGraph& a, const SignedGraph& b)
      : a_(a), b_(b), n_(a.order()), forest_(bfs_forest(a)) {
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    theta_.assign(n_, Sign::positive);
  }

  bool run() { return place(0); }

 private:
  bool place(int idx) {
    if (idx == n_) return true;
    const int v = forest_.order[idx];
    const int p = forest_.parent[v];
    const int dv = a_.degree(v);
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || b_.degree(w) != dv) continue;
      if (!consistent(idx, v, w, p)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (place(idx + 1)) return true;
      used_[w] = 0;
      map_[v] = -1;
    }
    return false;
  }

  bool consistent(int idx, int v, int w, int p) {
    Sign tv = Sign::positive;
    if (p >= 0) {
      if (b_.sign(map_[p], w) == Sign::none) return false;
      tv = theta_[p] * a_.sign(p, v) * b_.sign(map_[p], w);
    }
    for (int t = 0; t < idx; ++t) {
      const int u = forest_.order[t];
      const Sign sa = a_.sign(u, v);
      const Sign sb = b_.sign(map_[u], w);
      if ((sa == Sign::none) != (sb == Sign::none)) return false;
      if (sa != Sign::none && theta_[u] * sa * tv != sb) return false;
    }
    theta_[v] = tv;
    return true;
  }

  const SignedGraph& a_;
  const SignedGraph& b_;
  int n_;
  SpanningForest forest_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<Sign> theta_;
};

// Complete-host signature matrix is balanced iff it is a rank-one sign pattern.
bool complete_host_balanced(const std::vector<Sign>& signs, int r, int s) {
  for (int i = 1; i < r; ++i) {
    for (int j = 1; j < s; ++j) {
      const auto at = [&](int a, int b) { return signs[static_cast<std::size_t>(a) * s + b]; };
      if (at(i, j) != at(i, 0) * at(0, j) * at(0, 0)) return false;
    }
  }
  return true;
}

}  // namespace

SignedGraph switched(const SignedGraph& g, std::span<const int> subset) {
  std::vector<Sign> theta(g.order(), Sign::positive);
  for (const int v : subset) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::BadVertex, fmt::format("vertex {} out of range", v));
    theta[v] = Sign::negative;
  }
  return switched_by(g, theta);
}

SignedGraph switched_by(const SignedGraph& g, std::span<const Sign> theta) {
  const int n = g.order();
  if (static_cast<int>(theta.size()) != n) throw Error(ErrorKind::BadParam, "theta length differs from order");
  std::vector<Sign> entries(static_cast<std::size_t>(n) * n, Sign::none);
  for (int u = 0; u < n; ++u) {
    const auto row = g.row(u);
    for (int v = 0; v < n; ++v) {
      entries[static_cast<std::size_t>(u) * n + v] = theta[u] * row[v] * theta[v];
    }
  }
  return SignedGraph::from_sign_matrix(n, std::move(entries));
}

SwitchingClass canonical_gauge(const SignedGraph& g) {
  const auto forest = bfs_forest(g);
  const auto theta = forest_potential(g, forest);
  SwitchingClass cls;
  cls.underlying = g.underlying();
  for (const auto& e : g.edges()) {
    if (is_tree_edge(forest, e.u, e.v)) continue;
    cls.cotree_edges.emplace_back(e.u, e.v);
    cls.gauge_signs.push_back(theta[e.u] * e.sign * theta[e.v]);
  }
  return cls;
}

std::optional<std::vector<Sign>> balancing_switch(const SignedGraph& g) {
  const auto forest = bfs_forest(g);
  auto theta = forest_potential(g, forest);
  for (const auto& e : g.edges()) {
    if (theta[e.u] * e.sign * theta[e.v] != Sign::positive) return std::nullopt;
  }
  return theta;
}

bool is_balanced(const SignedGraph& g) {
  const auto cls = canonical_gauge(g);
  return std::all_of(cls.gauge_signs.begin(), cls.gauge_signs.end(),
                     [](Sign s) { return s == Sign::positive; });
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (a.underlying() != b.underlying()) {
    throw Error(ErrorKind::Incomparable, "switching equivalence needs identical labelled underlying graphs");
  }
  return canonical_gauge(a) == canonical_gauge(b);
}

bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  require_isomorphism_size(a);
  require_isomorphism_size(b);
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da;
  std::vector<int> db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return SwitchingIsomorphismSearch(a, b).run();
}

bool balance_structural(const SignedBipartiteGraph& g) {
  if (!g.is_complete_host()) {
    throw Error(ErrorKind::BadInput, "structural balance test needs a complete bipartite host");
  }
  const int r = g.r();
  const int s = g.s();
  const auto negative = g.negative_edges();
  if (negative.empty()) return true;

  // Components of H on vertex ids X = [0, r), Y = [r, r + s).
  std::vector<int> comp(r + s, -1);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> parts;
  const auto neg = [&](int i, int j) { return g.sign(i, j) == Sign::negative; };
  for (int start = 0; start < r + s; ++start) {
    if (comp[start] != -1) continue;
    bool has_edge = false;
    if (start < r) {
      for (int j = 0; j < s && !has_edge; ++j) has_edge = neg(start, j);
    } else {
      for (int i = 0; i < r && !has_edge; ++i) has_edge = neg(i, start - r);
    }
    if (!has_edge) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    std::deque<int> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (u < r) {
        parts[id].first.push_back(u);
        for (int j = 0; j < s; ++j) {
          if (neg(u, j) && comp[r + j] == -1) {
            comp[r + j] = id;
            queue.push_back(r + j);
          }
        }
      } else {
        parts[id].second.push_back(u - r);
        for (int i = 0; i < r; ++i) {
          if (neg(i, u - r) && comp[i] == -1) {
            comp[i] = id;
            queue.push_back(i);
          }
        }
      }
    }
  }

  const auto complete = [&](const std::pair<std::vector<int>, std::vector<int>>& p) {
    for (const int i : p.first) {
      for (const int j : p.second) {
        if (!neg(i, j)) return false;
      }
    }
    return true;
  };
  int covered_x = 0;
  int covered_y = 0;
  for (const auto& p : parts) {
    covered_x += static_cast<int>(p.first.size());
    covered_y += static_cast<int>(p.second.size());
  }
  const int vh = covered_x + covered_y;
  const bool all_complete = std::all_of(parts.begin(), parts.end(), complete);

  const bool item1 = parts.size() == 1 && all_complete && r < vh && vh < r + s &&
                     (covered_x == r || covered_y == s);
  const bool item2 = vh == r + s && parts.size() <= 2 && all_complete;
  return item1 || item2;
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<Sign> entries;
  entries.reserve(static_cast<std::size_t>(g.order()) * g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (const Sign s : g.row(u)) entries.push_back(-s);
  }
  return SignedGraph::from_sign_matrix(g.order(), std::move(entries));
}

bool is_sign_symmetric(const SignedGraph& g) {
  require_isomorphism_size(g);
  return switching_equivalent(g, negate(g));
}

bool is_gstar_class(const SignedBipartiteGraph& g) {
  if (!g.is_complete_host()) throw Error(ErrorKind::BadInput, "Ġ* recognition needs a complete bipartite host");
  const int r = g.r();
  const int s = g.s();
  // K_{1,s} is a tree: every signature is balanced.
  if (r < 2) return false;
  std::vector<Sign> signs(g.signs().begin(), g.signs().end());
  for (std::size_t k = 0; k < signs.size(); ++k) {
    signs[k] = -signs[k];
    const bool balanced = complete_host_balanced(signs, r, s);
    signs[k] = -signs[k];
    if (balanced) return true;
  }
  return false;
}

}  // namespace signed_spectra
