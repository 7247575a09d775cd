#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace signed_spectra {

// SIGNED_SPECTRA_WORKERS when it parses as a positive integer, otherwise the
// hardware concurrency (at least 1).
int worker_count();

// Evaluates fn(0..n-1) on contiguous chunks, one per worker, and returns the
// results in index order, so the output never depends on the worker count.
// The first exception thrown by any chunk is rethrown on the caller.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn, int workers = worker_count()) {
  std::vector<T> out(n);
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(workers), n));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t c = 0; c < w; ++c) {
    const std::size_t lo = n * c / w;
    const std::size_t hi = n * (c + 1) / w;
    threads.emplace_back([&, c, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace signed_spectra
