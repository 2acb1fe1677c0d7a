#pragma once

#include <stdexcept>
#include <string>

namespace arrcov {

/// Raised when an input violates a documented precondition (bad shapes,
/// out-of-range generators, failed arrangement or character constraints).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two routes that must agree do not (chain condition broken,
/// oracle mismatch). Always a bug or a violated mathematical assumption.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Outcome of a check that does not throw.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace arrcov
