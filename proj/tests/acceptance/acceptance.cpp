// One [PASS]/[FAIL] line per acceptance criterion. Flags: --extended adds the
// n = 8 enumerations, --only 3,4 restricts the run to the listed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/core.h>

#include "signed_spectra/eigen_solver.hpp"
#include "signed_spectra/extremal.hpp"
#include "signed_spectra/polynomial.hpp"
#include "signed_spectra/spectra.hpp"
#include "signed_spectra/switching.hpp"

using namespace signed_spectra;

namespace {

constexpr double kTol = 1e-8;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::vector<double> nonzero_sorted(std::vector<double> xs) {
  std::erase_if(xs, [](double x) { return std::abs(x) <= 1e-7; });
  std::sort(xs.begin(), xs.end());
  return xs;
}

bool close_lists(const std::vector<double>& a, const std::vector<double>& b, double tol = kTol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

bool family_valid(int c, int r, int s, int k) {
  switch (c) {
    case 1: return k <= r;
    case 2: return k >= r;
    case 3: return k <= s;
    default: return k >= s;
  }
}

Outcome closed_forms() {
  Outcome o;
  int checked = 0;
  for (int s = 2; s <= 8; ++s) {
    for (int r = 2; r <= s; ++r) {
      for (int k = 1; k <= r + s - 1; ++k) {
        for (int d = std::max(1, k + 1 - r); d <= std::min(k, s); ++d) {
          const auto c = double_star_charpoly(r, s, k, d);
          const auto roots = nonzero_sorted(real_roots(c.polynomial.to_real()));
          const auto block = nonzero_sorted(eigenvalues(x_block_of_square(double_star(r, s, c.l, d))));
          if (!close_lists(roots, block)) fail(o, fmt::format("cubic roots differ at (r,s,k,d) = ({},{},{},{})", r, s, k, d));
          ++checked;
        }
        for (int fc = 1; fc <= 4; ++fc) {
          if (!family_valid(fc, r, s, k)) continue;
          const auto f = family_spectrum(fc, r, s, k);
          const auto full = eigenvalues(adjacency(double_star(r, s, f.i, f.j)));
          if (std::abs(f.rho - full.front()) > kTol || !close_lists(f.spectrum, full)) {
            fail(o, fmt::format("family {} spectrum differs at (r,s,k) = ({},{},{})", fc, r, s, k));
          }
          ++checked;
        }
      }
    }
  }
  if (o.pass) o.detail = fmt::format("{} closed forms", checked);
  return o;
}

Outcome from_reports(const std::vector<ExtremalReport>& reports) {
  Outcome o;
  std::int64_t space = 0;
  for (const auto& r : reports) {
    space += r.search_space;
    if (r.verdict != Verdict::Confirmed) {
      std::string params;
      for (const auto& [k, v] : r.params) {
        if (const auto* i = std::get_if<std::int64_t>(&v)) params += fmt::format(" {}={}", k, *i);
      }
      fail(o, fmt::format("{}{}: {}", r.theorem, params, to_string(r.verdict)));
    }
  }
  if (o.pass) o.detail = fmt::format("{} runs, {} objects", reports.size(), space);
  return o;
}

Outcome complete_bipartite_max() {
  std::vector<ExtremalReport> reports;
  for (int s = 2; s <= 13; ++s) {
    for (int r = 2; r <= s && (r - 1) * (s - 1) <= 12; ++r) reports.push_back(verify_complete_bipartite_max(r, s));
  }
  auto o = from_reports(reports);
  for (const auto& rep : reports) {
    const auto r = std::get<std::int64_t>(rep.params[0].second);
    const auto s = std::get<std::int64_t>(rep.params[1].second);
    const double rs = static_cast<double>(r * s);
    const double closed = std::sqrt((rs + std::sqrt(rs * rs - 16.0 * (r - 1) * (s - 1))) / 2.0);
    if (std::abs(rep.extremal_value - closed) > kTol) fail(o, fmt::format("value differs at ({}, {})", r, s));
    if (rep.ties.size() != 1) fail(o, fmt::format("{} maximizer groups at ({}, {})", rep.ties.size(), r, s));
  }
  return o;
}

Outcome extrema(ExtremeMode mode, bool extended) {
  std::vector<ExtremalReport> reports;
  for (int n = 4; n <= (extended ? 8 : 7); ++n) reports.push_back(enumerate_bipartite_extrema(n, mode));
  auto o = from_reports(reports);
  if (mode == ExtremeMode::Min && std::abs(reports.front().extremal_value - std::sqrt(2.0)) > 1e-10) {
    fail(o, "n = 4 minimum differs from sqrt 2");
  }
  if (mode == ExtremeMode::Max) {
    for (std::size_t t = 0; t < reports.size(); ++t) {
      const int n = 4 + static_cast<int>(t);
      if (std::abs(reports[t].extremal_value - gstar_bound(n / 2, n - n / 2)) > kTol) {
        fail(o, fmt::format("n = {} maximum differs from the gstar bound", n));
      }
    }
  }
  return o;
}

Outcome balance() {
  std::vector<ExtremalReport> reports;
  for (int r = 1; r <= 4; ++r) {
    for (int s = r; r * s <= 16; ++s) reports.push_back(verify_balance_characterization(r, s));
  }
  auto o = from_reports(reports);
  for (const auto& r : reports) {
    if (r.extremal_value != 0.0) fail(o, "disagreements found");
  }
  return o;
}

Outcome trees() {
  std::vector<ExtremalReport> reports;
  for (const auto [r, s, m] : {std::tuple{5, 5, 2}, {5, 6, 2}, {6, 6, 2}, {6, 7, 2}, {7, 7, 3}, {7, 8, 3}}) {
    reports.push_back(verify_tree_extremal(r, s, m));
  }
  return from_reports(reports);
}

Outcome double_stars() {
  std::vector<ExtremalReport> reports;
  for (int s = 2; s <= 8; ++s) {
    for (int r = 2; r <= s; ++r) {
      for (int k = 1; k <= r + s - 1; ++k) reports.push_back(verify_kds(r, s, k));
    }
  }
  return from_reports(reports);
}

// Random symmetric integer matrix with entries in [-2, 2].
Matrix random_symmetric(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  }
  return m;
}

Matrix random_rect(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

SignedGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution neg(0.5);
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.push_back({u, v, neg(rng) ? Sign::negative : Sign::positive});
    }
  }
  return SignedGraph::from_edge_list(n, edges);
}

// Symmetric matrix with an equitable partition: symmetric circulant diagonal
// blocks and constant off-diagonal blocks.
std::pair<Matrix, Partition> random_equitable(std::mt19937_64& rng, int blocks) {
  std::uniform_int_distribution<int> size(1, 3);
  std::uniform_int_distribution<int> entry(-2, 2);
  Partition partition;
  int n = 0;
  for (int b = 0; b < blocks; ++b) {
    std::vector<int> cell(size(rng));
    std::iota(cell.begin(), cell.end(), n);
    n += static_cast<int>(cell.size());
    partition.push_back(std::move(cell));
  }
  Matrix m(n, n);
  for (int a = 0; a < blocks; ++a) {
    const auto& pa = partition[a];
    const int na = static_cast<int>(pa.size());
    std::vector<int> c(na);
    for (int t = 0; t <= na / 2; ++t) c[t] = c[(na - t) % na] = entry(rng);
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < na; ++j) m(pa[i], pa[j]) = c[((j - i) % na + na) % na];
    }
    for (int b = a + 1; b < blocks; ++b) {
      const int value = entry(rng);
      for (const int i : pa) {
        for (const int j : partition[b]) m(i, j) = m(j, i) = value;
      }
    }
  }
  return {m, partition};
}

Outcome spectral_properties() {
  Outcome o;
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<int> order(2, 10);
  constexpr int kInstances = 1000;
  int equal_cases = 0;
  for (int t = 0; t < kInstances; ++t) {
    // rho(C) = sqrt(rho(C^2)).
    {
      const auto c = random_symmetric(rng, order(rng));
      const double direct = spectral_radius(DenseSymmetricMatrix(c));
      const double squared = spectral_radius(DenseSymmetricMatrix(c * c));
      if (std::abs(direct - std::sqrt(squared)) > kTol) fail(o, "rho(C) != sqrt(rho(C^2))");
    }
    // Nonzero spectra of AB and BA.
    {
      const int p = order(rng);
      const int q = std::uniform_int_distribution<int>(1, p)(rng);
      const auto m = random_rect(rng, p, q);
      const auto ab = nonzero_sorted(eigenvalues(DenseSymmetricMatrix(m * m.transpose())));
      const auto ba = nonzero_sorted(eigenvalues(DenseSymmetricMatrix(m.transpose() * m)));
      if (!close_lists(ab, ba, 1e-7)) fail(o, "nonzero spectra of M M^T and M^T M differ");
      const auto b = random_rect(rng, q, p);
      const auto pab = faddeev_leverrier(m * b);
      const auto pba = faddeev_leverrier(b * m).times_x(p - q);
      if (!coefficients_close(pab, pba, 1e-9)) fail(o, "charpoly(AB) != x^(p-q) charpoly(BA)");
    }
    // Equitable quotient eigenvalues lie in the spectrum.
    {
      const auto [m, partition] = random_equitable(rng, std::uniform_int_distribution<int>(1, 4)(rng));
      const auto q = quotient_matrix(m, partition);
      if (!q.is_equitable) fail(o, "constructed partition not equitable");
      const int k = q.matrix.rows();
      Matrix sym(k, k);
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          const double na = static_cast<double>(partition[a].size());
          const double nb = static_cast<double>(partition[b].size());
          sym(a, b) = q.matrix(a, b) * std::sqrt(na / nb);
        }
      }
      // sym is D^{1/2} Q D^{-1/2}; average the rounding asymmetry away.
      const auto symmetric = 0.5 * (sym + sym.transpose());
      const auto full = eigenvalues(DenseSymmetricMatrix(m));
      for (const double mu : eigenvalues(DenseSymmetricMatrix(symmetric))) {
        const bool found = std::any_of(full.begin(), full.end(), [mu](double x) { return std::abs(x - mu) <= kTol; });
        if (!found) fail(o, "quotient eigenvalue missing from the spectrum");
      }
    }
    // Switching invariance.
    {
      const int n = order(rng);
      const auto g = random_graph(rng, n, 0.5);
      std::vector<int> subset;
      for (int v = 0; v < n; ++v) {
        if (rng() & 1U) subset.push_back(v);
      }
      if (!close_lists(eigenvalues(adjacency(g)), eigenvalues(adjacency(switched(g, subset))))) {
        fail(o, "switching changed the spectrum");
      }
    }
    // Bipartite spectral symmetry.
    {
      const int r = std::uniform_int_distribution<int>(1, 5)(rng);
      const int s = std::uniform_int_distribution<int>(1, 10 - r)(rng);
      std::bernoulli_distribution edge(0.6);
      std::vector<Sign> signs(static_cast<std::size_t>(r) * s, Sign::none);
      for (auto& x : signs) {
        if (edge(rng)) x = (rng() & 1U) ? Sign::negative : Sign::positive;
      }
      const auto values = eigenvalues(adjacency(SignedBipartiteGraph(r, s, signs)));
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::abs(values[i] + values[values.size() - 1 - i]) > kTol) fail(o, "bipartite spectrum not symmetric");
      }
    }
    // lambda_1 of a signature against the all-positive graph.
    {
      SignedGraph g;
      do {
        g = random_graph(rng, std::uniform_int_distribution<int>(3, 10)(rng), 0.5);
      } while (!is_connected(g));
      // Half the instances are switched copies of the all-positive graph.
      if (t % 2 == 0) {
        std::vector<int> subset;
        for (int v = 0; v < g.order(); ++v) {
          if (rng() & 1U) subset.push_back(v);
        }
        g = switched(g.underlying(), subset);
      }
      const double signed_index = index(g);
      const double positive_index = index(g.underlying());
      const bool balanced = is_balanced(g);
      if (signed_index > positive_index + kTol) fail(o, "signed index above the unsigned index");
      if (balanced != (std::abs(signed_index - positive_index) <= kTol)) fail(o, "equality does not match balance");
      equal_cases += balanced;
    }
  }
  if (o.pass) o.detail = fmt::format("6 x {} instances, {} balanced", kInstances, equal_cases);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

std::set<int> parse_only(const std::string& list) {
  std::set<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--extended") {
      extended = true;
    } else if (arg == "--only" && i + 1 < argc) {
      only = parse_only(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--extended] [--only N,M,...]\n";
      return 1;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "double-star cubic and family spectra against eigensolves", closed_forms},
      {2, "complete bipartite maximum over switching classes", complete_bipartite_max},
      {3, "maximum rho over unbalanced bipartite graphs", [&] { return extrema(ExtremeMode::Max, extended); }},
      {4, "minimum rho over unbalanced bipartite graphs", [&] { return extrema(ExtremeMode::Min, extended); }},
      {5, "structural balance against cycle parity", balance},
      {6, "tree maximizers are stars", trees},
      {7, "double-star argmax table", double_stars},
      {8, "edge-deleted gstar polynomials and gap", [] { return from_reports({verify_minus_edge(8)}); }},
      {9, "spectral identity property suite", spectral_properties},
      {10, "greedy monotone completion", [] { return from_reports({run_completion_property(200, 1)}); }},
      {11, "shift property", [] { return from_reports({run_shift_property(1000, 1)}); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      fail(o, fmt::format("exception: {}", e.what()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << fmt::format("[{}] criterion {}: {} ({}; {:.2f} s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                             o.detail, secs);
  }
  return failures == 0 ? 0 : 1;
}
