#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nochka {

/// Malformed textual input. Carries the byte offset (or line) of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configurable budget (Buchberger steps, q_m cap, quadrature depth) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical postcondition that the code verifies before returning failed.
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on a domain object (invalid oracle, degenerate curve, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nochka
