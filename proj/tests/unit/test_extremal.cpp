#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "helpers.hpp"
#include "signed_spectra/error.hpp"
#include "signed_spectra/extremal.hpp"
#include "signed_spectra/spectra.hpp"
#include "signed_spectra/switching.hpp"

using namespace signed_spectra;

namespace {

ExtremalReport without_clock(ExtremalReport r) {
  r.elapsed_seconds = 0.0;
  return r;
}

}  // namespace

TEST_CASE("bipartite spectral radius matches the full eigensolve") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = test_support::random_bipartite(rng, 1 + trial % 5, 5 + trial % 3, 0.7);
    CHECK(std::abs(bipartite_spectral_radius(g) - spectral_radius(g.to_signed_graph())) <= 1e-9);
  }
}

TEST_CASE("shift examples") {
  const std::array<std::pair<int, int>, 2> matching{{{0, 0}, {1, 1}}};
  const auto g = complete_bipartite(2, 3, matching);
  const auto shifted = shift_toward(g, 0, 1);
  REQUIRE(shifted.has_value());
  CHECK(shifted->negative_edges() == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});
  CHECK(shifted->negative_count() == 2);

  const std::array<std::pair<int, int>, 3> chain{{{0, 0}, {0, 1}, {1, 0}}};
  const auto c = complete_bipartite(2, 3, chain);
  CHECK_FALSE(shift_toward(c, 0, 1).has_value());
  CHECK(shift_toward(c, 1, 0).has_value());
  CHECK(shift_to_chain(c).size() == 1);

  CHECK_THROWS_AS(shift_toward(g, 0, 0), Error);
  CHECK_THROWS_AS(shift_toward(g, 0, 3), Error);
  CHECK_THROWS_AS(shift_toward(g.with_sign(0, 2, Sign::none), 0, 1), Error);
}

TEST_CASE("shift_to_chain preserves the negative count and ends at a chain graph") {
  std::mt19937_64 rng(83);
  std::bernoulli_distribution neg(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + trial % 4;
    const int s = r + trial % 3;
    std::vector<Sign> signs(static_cast<std::size_t>(r) * s);
    for (auto& x : signs) x = neg(rng) ? Sign::negative : Sign::positive;
    const SignedBipartiteGraph g(r, s, signs);
    const auto path = shift_to_chain(g);
    CHECK(path.front() == g);
    for (const auto& step : path) CHECK(step.negative_count() == g.negative_count());
    CHECK(is_chain_graph(path.back().negative_part(), Side::Y));
    for (std::size_t i = 1; i < path.size(); ++i) {
      const auto a = negative_stats(path[i - 1]).degree_y;
      const auto b = negative_stats(path[i]).degree_y;
      const auto sq = [](const std::vector<int>& d) {
        return std::transform_reduce(d.begin(), d.end(), 0, std::plus<>(), [](int x) { return x * x; });
      };
      CHECK(sq(b) > sq(a));
    }
  }
}

TEST_CASE("complete bipartite maximum") {
  const auto r23 = verify_complete_bipartite_max(2, 3);
  CHECK(r23.theorem == "thm-5.2");
  CHECK(r23.search_space == 3);
  CHECK(r23.extremal_value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r23.verdict == Verdict::Confirmed);

  const auto r22 = verify_complete_bipartite_max(2, 2);
  CHECK(r22.search_space == 1);
  CHECK(r22.extremal_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  const auto r44 = verify_complete_bipartite_max(4, 4);
  CHECK(r44.search_space == 511);
  CHECK(r44.verdict == Verdict::Confirmed);
  CHECK(r44.extremal_value == doctest::Approx(gstar_bound(4, 4)).epsilon(1e-12));
  REQUIRE(r44.ties.size() == 1);
  CHECK(r44.ties[0].multiplicity == 16);

  CHECK_THROWS_AS(verify_complete_bipartite_max(1, 3), Error);
  CHECK_THROWS_AS(verify_complete_bipartite_max(5, 6), Error);
}

TEST_CASE("tree extremal") {
  const auto t = verify_tree_extremal(5, 5, 2);
  CHECK(t.theorem == "thm-4.5");
  CHECK(t.verdict == Verdict::Confirmed);
  CHECK(t.search_space == 100);
  CHECK(t.ties.size() == 2);
  CHECK(t.extremal_value == doctest::Approx(family_spectrum(1, 5, 5, 2).rho).epsilon(1e-12));
  CHECK(verify_tree_extremal(4, 4, 2).verdict == Verdict::Inconclusive);
}

TEST_CASE("double star sweep") {
  const auto k = verify_kds(3, 4, 5);
  CHECK(k.theorem == "lem-4.4");
  CHECK(k.verdict == Verdict::Confirmed);
  CHECK(k.extremal_value == doctest::Approx(family_spectrum(4, 3, 4, 5).rho).epsilon(1e-10));
  CHECK(verify_kds(2, 2, 1).verdict == Verdict::Confirmed);
  for (int s = 2; s <= 5; ++s) {
    for (int r = 2; r <= s; ++r) {
      for (int kk = 1; kk <= r + s - 1; ++kk) CHECK(verify_kds(r, s, kk).verdict == Verdict::Confirmed);
    }
  }
}

TEST_CASE("small exhaustive extrema") {
  const auto mn = enumerate_bipartite_extrema(4, ExtremeMode::Min);
  CHECK(mn.verdict == Verdict::Confirmed);
  CHECK(std::abs(mn.extremal_value - std::sqrt(2.0)) <= 1e-10);
  const auto mx = enumerate_bipartite_extrema(5, ExtremeMode::Max);
  CHECK(mx.verdict == Verdict::Confirmed);
  CHECK(mx.extremal_value == doctest::Approx(gstar_bound(2, 3)).epsilon(1e-12));
  CHECK_THROWS_AS(enumerate_bipartite_extrema(3, ExtremeMode::Max), Error);
  CHECK_THROWS_AS(enumerate_bipartite_extrema(9, ExtremeMode::Min), Error);
  CHECK(minimum_catalog(6).size() == 3);
}

TEST_CASE("monotone completion") {
  const std::array<std::pair<int, int>, 1> one{{{0, 0}}};
  const auto c4 = complete_bipartite(2, 2, one);
  const auto chain = monotone_completion(c4);
  CHECK(chain.chain.size() == 1);
  CHECK(chain.monotone);

  const auto pendant = complete_bipartite(2, 3, one).with_sign(1, 2, Sign::none);
  const auto c2 = monotone_completion(pendant);
  CHECK(c2.chain.size() == 2);
  CHECK(c2.chain.back().is_complete_host());
  CHECK(c2.index.back() >= c2.index.front());

  CHECK_THROWS_AS(monotone_completion(complete_bipartite(2, 3, {})), Error);
  CHECK_THROWS_AS(monotone_completion(c4.with_sign(0, 0, Sign::none).with_sign(1, 1, Sign::none)), Error);
}

TEST_CASE("balance characterization and random properties") {
  const auto b = verify_balance_characterization(3, 3);
  CHECK(b.verdict == Verdict::Confirmed);
  CHECK(b.search_space == 512);
  CHECK(b.extremal_value == 0.0);
  CHECK_THROWS_AS(verify_balance_characterization(3, 2), Error);
  CHECK_THROWS_AS(verify_balance_characterization(4, 5), Error);

  CHECK(run_completion_property(20, 5).verdict == Verdict::Confirmed);
  CHECK(run_shift_property(50, 5).verdict == Verdict::Confirmed);
  CHECK(verify_minus_edge(4).verdict == Verdict::Confirmed);
  CHECK(verify_minus_edge(8, std::pair{3, 7}).verdict == Verdict::Confirmed);
}

TEST_CASE("reports do not depend on the worker count") {
  const auto run = [](const char* workers) {
    ::setenv("SIGNED_SPECTRA_WORKERS", workers, 1);
    return std::array<std::string, 3>{
        report_to_json(without_clock(verify_complete_bipartite_max(3, 4))),
        report_to_json(without_clock(enumerate_bipartite_extrema(6, ExtremeMode::Min))),
        report_to_json(without_clock(run_shift_property(40, 9))),
    };
  };
  const auto one = run("1");
  const auto three = run("3");
  ::unsetenv("SIGNED_SPECTRA_WORKERS");
  CHECK(one == three);
}

TEST_CASE("rho is invariant under relabelling, switching and negation") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 8;
    const auto g = test_support::random_signed_graph(rng, n, 0.5);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double rho = spectral_radius(g);
    CHECK(std::abs(spectral_radius(test_support::relabel(g, perm)) - rho) <= 1e-9);
    const std::vector<int> subset(perm.begin(), perm.begin() + n / 2);
    CHECK(std::abs(spectral_radius(switched(g, subset)) - rho) <= 1e-9);
    CHECK(std::abs(spectral_radius(negate(g)) - rho) <= 1e-9);
  }
}
