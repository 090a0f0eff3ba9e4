#pragma once

#include <stdexcept>
#include <string>

namespace divar {

// Bad argument to a library operation (wrong alphabet, degree, permutation, ...).
struct ArgumentError : std::runtime_error {
  explicit ArgumentError(const std::string& what) : std::runtime_error(what) {}
};

// Input text does not conform to the term grammar / presentation file format.
struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& what, int line_, int col_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + what),
        line(line_), col(col_) {}
};

// A configured degree/size limit was exceeded.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace divar
