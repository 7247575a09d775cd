#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signed_spectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitCounterexample = 2;

// args excludes the program name. Results go to `out`, progress and
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signed_spectra::cli
