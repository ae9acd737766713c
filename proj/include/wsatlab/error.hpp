#pragma once

#include <stdexcept>
#include <string>

namespace wsatlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or parameter-range violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A computed value contradicts the closed-form bounds table. Always a bug.
class DiscrepancyError : public Error {
 public:
  using Error::Error;
};

/// Hyperforest bookkeeping failure at a given erase step (1-based).
class TraceError : public Error {
 public:
  TraceError(const std::string& what, int step)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

}  // namespace wsatlab
