#pragma once

#include <stdexcept>
#include <string>

namespace ambix {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded (element cap, coset limit,
/// tuple budget, ...). The computation did not produce a wrong answer,
/// it refused to continue.
struct LimitExceeded : Error {
  explicit LimitExceeded(const std::string& what) : Error(what) {}
};

/// A machine check rejected the input (bad cover recipe, non-central
/// kernel, map not well-defined, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Text input could not be parsed; `pos` is a 0-based offset when known.
struct ParseError : Error {
  long pos;
  ParseError(const std::string& what, long position = -1)
      : Error(position >= 0 ? what + " (at offset " + std::to_string(position) + ")" : what),
        pos(position) {}
};

}  // namespace ambix
