#include <doctest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "signed_spectra/error.hpp"
#include "signed_spectra/enumeration.hpp"
#include "signed_spectra/switching.hpp"

using namespace signed_spectra;

namespace {

SignedGraph cycle(int n) {
  std::vector<SignedEdge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n), Sign::positive});
  return SignedGraph::from_edge_list(n, edges);
}

bool connected_rows(const std::vector<std::uint32_t>& rows, int r, int s) {
  SignedGraph g(r + s);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      if ((rows[i] >> j) & 1U) g = g.with_edge(i, r + j, Sign::positive);
    }
  }
  return is_connected(g);
}

// Canonical form by brute force over all row and column permutations.
std::vector<std::uint32_t> brute_canonical(const std::vector<std::uint32_t>& rows, int r, int s) {
  std::vector<int> rp(r);
  std::vector<int> cp(s);
  std::iota(rp.begin(), rp.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      std::vector<std::uint32_t> m(r, 0);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < s; ++j) {
          if ((rows[rp[i]] >> cp[j]) & 1U) m[i] |= 1U << j;
        }
      }
      if (best.empty() || m < best) best = m;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return best;
}

std::vector<std::uint32_t> transpose_rows(const std::vector<std::uint32_t>& rows, int r, int s) {
  std::vector<std::uint32_t> t(s, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      if ((rows[i] >> j) & 1U) t[j] |= 1U << i;
    }
  }
  return t;
}

std::size_t brute_host_count(int r, int s) {
  std::set<std::vector<std::uint32_t>> seen;
  const std::uint32_t total = 1U << (r * s);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::uint32_t> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = (mask >> (i * s)) & ((1U << s) - 1);
    if (!connected_rows(rows, r, s)) continue;
    auto key = brute_canonical(rows, r, s);
    if (r == s) key = std::min(key, brute_canonical(transpose_rows(rows, r, s), s, r));
    seen.insert(key);
  }
  return seen.size();
}

int brute_tree_count(int r, int s, int m) {
  int count = 0;
  const int e = r * s;
  for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
    if (std::popcount(mask) != m) continue;
    SignedGraph g(r + s);
    std::vector<char> touched(r + s, 0);
    for (int t = 0; t < e; ++t) {
      if ((mask >> t) & 1U) {
        g = g.with_edge(t / s, r + t % s, Sign::positive);
        touched[t / s] = touched[r + t % s] = 1;
      }
    }
    const auto comps = connected_components(g);
    const auto nontrivial = std::count_if(comps.begin(), comps.end(), [](const auto& c) { return c.size() > 1; });
    if (nontrivial == 1 && std::count(touched.begin(), touched.end(), 1) == m + 1) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("signature class counts") {
  CHECK(signature_classes(cycle(4)).size() == 2);
  CHECK(signature_classes(complete_bipartite(2, 3, {}).to_signed_graph()).size() == 4);
  CHECK(signature_classes(complete_bipartite(3, 3, {}).to_signed_graph()).size() == 16);
  const std::array<SignedEdge, 3> path{{{0, 1}, {1, 2}, {1, 3}}};
  CHECK(signature_classes(SignedGraph::from_edge_list(4, path)).size() == 1);
  CHECK(SignatureClassEnumerator(cycle(6)).cycle_rank() == 1);

  CHECK_THROWS_AS(SignatureClassEnumerator(SignedGraph(3)), Error);
  try {
    SignatureClassEnumerator(complete_bipartite(5, 7, {}).to_signed_graph());
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  CHECK_THROWS_AS(SignatureClassEnumerator(cycle(4)).at(2), Error);
}

TEST_CASE("class representatives are pairwise inequivalent and cover every signature") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = test_support::random_signed_graph(rng, 5 + trial % 3, 0.6);
    if (!is_connected(g) || g.edge_count() > 12) continue;
    const auto base = g.underlying();
    const auto reps = signature_classes(base);
    std::set<std::vector<Sign>> gauges;
    for (const auto& rep : reps) {
      CHECK(rep.underlying() == base);
      gauges.insert(canonical_gauge(rep).gauge_signs);
    }
    CHECK(gauges.size() == reps.size());

    // Every signature lands on exactly one representative.
    const auto edges = base.edges();
    for (std::uint32_t mask = 0; mask < (1U << edges.size()); mask += 7) {
      std::vector<SignedEdge> signed_edges = edges;
      for (std::size_t t = 0; t < edges.size(); ++t) {
        if ((mask >> t) & 1U) signed_edges[t].sign = Sign::negative;
      }
      const auto h = SignedGraph::from_edge_list(base.order(), signed_edges);
      const auto hits = std::count_if(reps.begin(), reps.end(), [&](const auto& rep) { return switching_equivalent(rep, h); });
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("connected bipartite host counts") {
  const std::array<std::size_t, 9> expected{0, 0, 1, 1, 3, 5, 17, 44, 182};
  for (int n = 2; n <= 8; ++n) CHECK(connected_bipartite_hosts(n).size() == expected[n]);
  for (int s = 1; s <= 4; ++s) {
    for (int r = 1; r <= s && r + s <= 7; ++r) {
      CAPTURE(r);
      CAPTURE(s);
      CHECK(connected_bipartite_hosts(r, s).size() == brute_host_count(r, s));
    }
  }
  for (const auto& h : connected_bipartite_hosts(7)) {
    CHECK(h.r() <= h.s());
    CHECK(is_connected(h.to_signed_graph()));
    CHECK(h.negative_count() == 0);
  }
}

TEST_CASE("canonical code ignores labelling") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 2 + trial % 3;
    const int s = r + trial % 2;
    const auto g = test_support::random_bipartite(rng, r, s, 0.5);
    std::vector<int> rp(r);
    std::vector<int> cp(s);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<Sign> signs(static_cast<std::size_t>(r) * s);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < s; ++j) signs[static_cast<std::size_t>(rp[i]) * s + cp[j]] = g.sign(i, j);
    }
    CHECK(bipartite_canonical_code(g) == bipartite_canonical_code(SignedBipartiteGraph(r, s, signs)));
  }
}

TEST_CASE("tree placements") {
  CHECK(tree_placements(2, 3, 2).size() == 9);
  CHECK(tree_placements(5, 5, 2).size() == 100);
  CHECK(tree_placements(2, 2, 4).empty());
  for (int s = 2; s <= 4; ++s) {
    for (int r = 1; r <= s; ++r) {
      for (int m = 1; m <= r + s - 1; ++m) {
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(m);
        const auto placements = tree_placements(r, s, m);
        CHECK(static_cast<int>(placements.size()) == brute_tree_count(r, s, m));
        for (const auto& t : placements) {
          CHECK(t.is_tree);
          CHECK(static_cast<int>(t.edge_set.size()) == m);
          CHECK(std::reduce(t.degree_profile.begin(), t.degree_profile.end()) == m);
          CHECK(std::reduce(t.degree_y.begin(), t.degree_y.end()) == m);
          CHECK(std::is_sorted(t.edge_set.begin(), t.edge_set.end()));
        }
      }
    }
  }
  CHECK_THROWS_AS(tree_placements(3, 2, 1), Error);
}
