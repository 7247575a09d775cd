#include "signed_spectra/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/core.h>

#include "signed_spectra/error.hpp"
#include "signed_spectra/switching.hpp"

namespace signed_spectra {

SignatureClassEnumerator::SignatureClassEnumerator(const SignedGraph& underlying) : base_(underlying.underlying()) {
  if (!is_connected(base_)) throw Error(ErrorKind::BadInput, "signature classes need a connected graph");
  const int rank = base_.edge_count() - base_.order() + 1;
  if (rank > kMaxCycleRank) {
    throw Error(ErrorKind::TooLarge, fmt::format("cycle rank {} exceeds {}", rank, kMaxCycleRank));
  }
  cotree_ = canonical_gauge(base_).cotree_edges;
}

SignedGraph SignatureClassEnumerator::at(std::uint64_t pattern) const {
  if (pattern >= count()) throw Error(ErrorKind::BadParam, fmt::format("pattern {} out of range", pattern));
  const int n = base_.order();
  std::vector<Sign> entries(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    const auto row = base_.row(u);
    std::copy(row.begin(), row.end(), entries.begin() + static_cast<std::ptrdiff_t>(u) * n);
  }
  for (std::size_t t = 0; t < cotree_.size(); ++t) {
    if ((pattern >> t) & 1U) {
      const auto [u, v] = cotree_[t];
      entries[static_cast<std::size_t>(u) * n + v] = Sign::negative;
      entries[static_cast<std::size_t>(v) * n + u] = Sign::negative;
    }
  }
  return SignedGraph::from_sign_matrix(n, std::move(entries));
}

std::vector<SignedGraph> signature_classes(const SignedGraph& underlying) {
  const SignatureClassEnumerator e(underlying);
  std::vector<SignedGraph> out;
  out.reserve(e.count());
  for (std::uint64_t p = 0; p < e.count(); ++p) out.push_back(e.at(p));
  return out;
}

namespace {

// Column j's code has bit i set iff v_i w_j is an edge.
std::vector<std::uint32_t> column_codes(const SignedBipartiteGraph& g) {
  std::vector<std::uint32_t> codes(g.s(), 0);
  for (int i = 0; i < g.r(); ++i) {
    for (int j = 0; j < g.s(); ++j) {
      if (g.has_edge(i, j)) codes[j] |= 1U << i;
    }
  }
  return codes;
}

std::vector<std::uint32_t> min_over_row_permutations(int r, const std::vector<std::uint32_t>& cols) {
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cur(cols.size());
  do {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::uint32_t code = 0;
      for (int i = 0; i < r; ++i) {
        if ((cols[j] >> perm[i]) & 1U) code |= 1U << i;
      }
      cur[j] = code;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected_pattern(int r, const std::vector<std::uint32_t>& cols) {
  const int s = static_cast<int>(cols.size());
  std::uint32_t rows_seen = 1;  // start from v_1
  std::vector<char> col_seen(s, 0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j = 0; j < s; ++j) {
      if (!col_seen[j] && (cols[j] & rows_seen)) {
        col_seen[j] = 1;
        rows_seen |= cols[j];
        grew = true;
      }
    }
  }
  return rows_seen == (1U << r) - 1 && std::all_of(col_seen.begin(), col_seen.end(), [](char c) { return c; });
}

SignedBipartiteGraph from_column_codes(int r, const std::vector<std::uint32_t>& cols) {
  const int s = static_cast<int>(cols.size());
  std::vector<Sign> signs(static_cast<std::size_t>(r) * s, Sign::none);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      if ((cols[j] >> i) & 1U) signs[static_cast<std::size_t>(i) * s + j] = Sign::positive;
    }
  }
  return SignedBipartiteGraph(r, s, std::move(signs));
}

}  // namespace

std::vector<std::uint32_t> bipartite_canonical_code(const SignedBipartiteGraph& g) {
  auto best = min_over_row_permutations(g.r(), column_codes(g));
  if (g.r() == g.s()) {
    // Transpose: row i of g becomes column i.
    std::vector<std::uint32_t> rows(g.r(), 0);
    for (int i = 0; i < g.r(); ++i) {
      for (int j = 0; j < g.s(); ++j) {
        if (g.has_edge(i, j)) rows[i] |= 1U << j;
      }
    }
    best = std::min(best, min_over_row_permutations(g.s(), rows));
  }
  return best;
}

std::vector<SignedBipartiteGraph> connected_bipartite_hosts(int r, int s) {
  if (r < 1 || r > s || r + s > 12) {
    throw Error(ErrorKind::BadParam, fmt::format("host enumeration needs 1 <= r <= s, r + s <= 12; got ({}, {})", r, s));
  }
  // Column multisets in nondecreasing code order; empty columns are isolated.
  const std::uint32_t top = (1U << r) - 1;
  std::vector<std::uint32_t> cols(s, 1);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<SignedBipartiteGraph> out;
  while (true) {
    if (connected_pattern(r, cols)) {
      const auto g = from_column_codes(r, cols);
      if (seen.insert(bipartite_canonical_code(g)).second) out.push_back(g);
    }
    int j = s - 1;
    while (j >= 0 && cols[j] == top) --j;
    if (j < 0) break;
    ++cols[j];
    for (int t = j + 1; t < s; ++t) cols[t] = cols[j];
  }
  return out;
}

std::vector<SignedBipartiteGraph> connected_bipartite_hosts(int n) {
  std::vector<SignedBipartiteGraph> out;
  for (int r = 1; 2 * r <= n; ++r) {
    auto part = connected_bipartite_hosts(r, n - r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<TreePlacement> tree_placements(int r, int s, int m) {
  if (r < 1 || r > s || m < 1) throw Error(ErrorKind::BadParam, "tree placements need 1 <= r <= s and m >= 1");
  const int total = r * s;
  std::vector<TreePlacement> out;
  if (m > total || m > r + s - 1) return out;

  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<int> parent(r + s);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (const int e : pick) {
      const int a = find(e / s);
      const int b = find(r + e % s);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    // An acyclic edge set with m edges is a tree on its m + 1 touched vertices.
    if (acyclic) {
      TreePlacement t;
      t.is_tree = true;
      t.degree_profile.assign(r, 0);
      t.degree_y.assign(s, 0);
      for (const int e : pick) {
        t.edge_set.emplace_back(e / s, e % s);
        ++t.degree_profile[e / s];
        ++t.degree_y[e % s];
      }
      const int touched = static_cast<int>(std::count_if(t.degree_profile.begin(), t.degree_profile.end(),
                                                         [](int d) { return d > 0; }) +
                                           std::count_if(t.degree_y.begin(), t.degree_y.end(),
                                                         [](int d) { return d > 0; }));
      if (touched == m + 1) out.push_back(std::move(t));
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == total - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < m; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

}  // namespace signed_spectra
