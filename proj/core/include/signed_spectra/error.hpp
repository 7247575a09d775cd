#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace signed_spectra {

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  BadVertex,
  BadParts,
  BadParam,
  BadInput,
  NotBipartite,
  Incomparable,
  TooLarge,
  NotSymmetric,
  BadPartition,
  NumericDomain,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every contract violation in the library is reported through this type; the
// kind names the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the text-format reader; line() is 1-based, 0 when the problem is
// not tied to a particular line (e.g. a truncated file).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::Parse, what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace signed_spectra
