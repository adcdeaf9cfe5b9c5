#pragma once

#include <stdexcept>
#include <string>

namespace nilmult {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed presentation text or catalog spec string.
struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& what, int line_, int col_)
      : Error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

// Input outside the supported range: generator or class caps, infinite or
// non-prime-power quotients.
struct UnsupportedError : Error {
  using Error::Error;
};

// A violated internal contract. Indicates a bug, never bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace nilmult
