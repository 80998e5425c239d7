#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcc {

/// Raised when two arrows, objects or matrices are combined with
/// incompatible sources or targets.
class TypeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when explicit cobordism data violates the boundary invariants.
class InvalidCobordism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A position in `.ccc` source text. Lines and columns are 1-based;
/// line 0 means "no location".
struct SourceLoc {
  std::size_t line = 0;
  std::size_t column = 0;

  bool known() const { return line != 0; }
  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc loc, const std::string& message)
      : std::runtime_error(loc.str() + ": " + message), loc_(loc) {}
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

class TypeError : public std::runtime_error {
 public:
  TypeError(SourceLoc loc, const std::string& message)
      : std::runtime_error(loc.known() ? loc.str() + ": " + message : message),
        loc_(loc) {}
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

}  // namespace dcc
