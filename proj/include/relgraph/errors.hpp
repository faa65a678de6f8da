#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relgraph {

// Caller supplied something outside an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked to run above its size guard.
class ThresholdError : public std::runtime_error {
 public:
  ThresholdError(const std::string& what, std::size_t n, std::size_t limit)
      : std::runtime_error(what + ": n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  std::size_t n() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

// Text input that does not follow a file format; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace relgraph
