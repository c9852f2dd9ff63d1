#pragma once

#include <stdexcept>
#include <string>

namespace vmrt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when two independent computation routes disagree. Always a bug.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace vmrt
