#include "signed_spectra/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace signed_spectra {

int worker_count() {
  if (const char* env = std::getenv("SIGNED_SPECTRA_WORKERS")) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace signed_spectra
