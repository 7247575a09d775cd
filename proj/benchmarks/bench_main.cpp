#include <random>

#include <benchmark/benchmark.h>

#include "signed_spectra/eigen_solver.hpp"
#include "signed_spectra/enumeration.hpp"
#include "signed_spectra/extremal.hpp"
#include "signed_spectra/spectra.hpp"

using namespace signed_spectra;

namespace {

DenseSymmetricMatrix random_signed_adjacency(int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<int> entry(-1, 1);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  }
  return DenseSymmetricMatrix(m);
}

void BM_JacobiEigenvalues(benchmark::State& state) {
  const auto m = random_signed_adjacency(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(m));
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_BipartiteRadius(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto g = gstar(r, r + 1);
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_spectral_radius(g));
}
BENCHMARK(BM_BipartiteRadius)->Arg(4)->Arg(8)->Arg(16);

void BM_ConnectedHosts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connected_bipartite_hosts(n));
}
BENCHMARK(BM_ConnectedHosts)->DenseRange(6, 9);

void BM_SignatureClasses(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto host = complete_bipartite(r, r, {}).to_signed_graph();
  for (auto _ : state) benchmark::DoNotOptimize(signature_classes(host));
}
BENCHMARK(BM_SignatureClasses)->DenseRange(2, 4);

void BM_MaxEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bipartite_extrema(n, ExtremeMode::Max));
}
BENCHMARK(BM_MaxEnumeration)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
