#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "signed_spectra/catalog.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

// Tie tolerance on spectral radii.
inline constexpr double kTieTolerance = 1e-8;

enum class Verdict { Confirmed, Counterexample, Inconclusive };

std::string_view to_string(Verdict v);

struct TieEntry {
  std::string witness;  // signed-graph v1 text
  double value = 0.0;
  std::int64_t multiplicity = 0;  // enumerated objects in this group
};

using ParamValue = std::variant<std::int64_t, double, std::string>;

struct ExtremalReport {
  std::string theorem;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::int64_t search_space = 0;
  double extremal_value = 0.0;
  // One representative per group of tied (or violating) objects.
  std::vector<std::string> witnesses;
  std::vector<TieEntry> ties;
  Verdict verdict = Verdict::Inconclusive;
  double elapsed_seconds = 0.0;
  // Human-readable findings; text output only.
  std::vector<std::string> notes;
};

// Field order: theorem, params, search_space, extremal_value, witnesses,
// ties, verdict, elapsed_seconds. Reals rounded to 12 decimals.
std::string report_to_json(const ExtremalReport& report);
std::string report_to_text(const ExtremalReport& report);

// Progress lines for long runs; never mixed into report output.
using ProgressSink = std::function<void(const std::string&)>;

// rho of a bipartite signed graph from the smaller Gram block M M^T.
double bipartite_spectral_radius(const SignedBipartiteGraph& g);

// Negative edges of the private neighbours of w_source (those not adjacent
// to w_target in H) are moved onto w_target. nullopt when that set is empty.
// BadInput for non-complete hosts, BadVertex for indices outside Y.
std::optional<SignedBipartiteGraph> shift_toward(const SignedBipartiteGraph& g, int target, int source);

// Repeats shift_toward on incomparable pairs of Y vertices, always towards
// the vertex of larger H-degree (lower index on ties), until H is a chain
// graph. Every step raises the sum of squared Y-degrees, so this terminates.
std::vector<SignedBipartiteGraph> shift_to_chain(const SignedBipartiteGraph& g);

// Maximum rho over unbalanced switching classes of K_{r,s}, checked against
// gstar_bound and the single-negative-edge class. 2 <= r <= s and
// (r-1)(s-1) <= 14, TooLarge beyond.
ExtremalReport verify_complete_bipartite_max(int r, int s, const ProgressSink& progress = {});

// Maximizers of rho over (K_{r,s}, T^-) for m-edge trees T. CONFIRMED when
// every maximizer is a star with its centre in Y (or in X too when r = s).
// m >= r/2 runs anyway with verdict INCONCLUSIVE.
ExtremalReport verify_tree_extremal(int r, int s, int m, const ProgressSink& progress = {});

// Sweep over the stars and double stars D_{l,d} with k = l + d - 1 edges.
// The argmax must lie in the union of the shapes selected by the cases whose
// conditions hold for k: D_{k,1} (k <= (r+s)/2, k <= r), D_{r,k+1-r}
// (k <= (r+s)/2, k > r), D_{1,k} (k >= (r+s)/2, k < s) and D_{k+1-s,s}
// (k >= (r+s)/2, k >= s), each also mirrored when r = s.
ExtremalReport verify_kds(int r, int s, int k);

enum class ExtremeMode { Max, Min };

// Every switching class of every connected unbalanced signed bipartite graph
// on n vertices, 4 <= n <= 8 (TooLarge otherwise).
ExtremalReport enumerate_bipartite_extrema(int n, ExtremeMode mode, const ProgressSink& progress = {});

struct CatalogEntry {
  CatalogGraph name;
  CatalogParams params;
  std::string label;
};

// Minimum-rho unbalanced catalogue members on n vertices, 4 <= n <= 8.
std::vector<CatalogEntry> minimum_catalog(int n);

// Minimum-rho unbalanced switching class of a connected bipartite graph.
SignedGraph min_unbalanced_class(const SignedGraph& underlying);

struct CompletionChain {
  std::vector<SignedBipartiteGraph> chain;  // starts with the input
  std::vector<double> index;                // lambda_1 along the chain
  bool monotone = true;
};

// Adds the missing edges of the host in lexicographic order, choosing each
// sign to maximize lambda_1 (positive on ties). BadInput for balanced or
// disconnected input.
CompletionChain monotone_completion(const SignedBipartiteGraph& g);

// balance_structural against is_balanced over all 2^(rs) signatures of
// K_{r,s}; rs <= 16, TooLarge beyond.
ExtremalReport verify_balance_characterization(int r, int s);

// Random connected unbalanced bipartite seeds on at most 8 vertices.
ExtremalReport run_completion_property(int count, std::uint64_t seed);

// Random complete-host instances whose X-degree sums satisfy the strict
// sparse (< s/2) or dense (> 3s/2) bound on every pair, shifted once along a
// random incomparable Y pair.
ExtremalReport run_shift_property(int count, std::uint64_t seed);

// Edge-deleted gstar polynomials against numeric quotient polynomials, and
// the strict gap below gstar_bound for unbalanced deletions. Covers all
// (r, s) with 2 <= r <= s <= max_s, or the single pair when given.
ExtremalReport verify_minus_edge(int max_s, std::optional<std::pair<int, int>> only = std::nullopt);

}  // namespace signed_spectra
