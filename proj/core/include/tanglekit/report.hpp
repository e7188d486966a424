#pragma once

#include <string>
#include <utility>

namespace tk {

/// Outcome of a verifier: either ok, or the name of the first failed clause
/// plus a human-readable explanation.
struct CheckReport {
  bool ok = true;
  std::string clause;
  std::string message;

  explicit operator bool() const { return ok; }

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string clause, std::string message) {
    return {false, std::move(clause), std::move(message)};
  }
};

}  // namespace tk
