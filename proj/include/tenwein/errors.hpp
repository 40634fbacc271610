#pragma once

#include <stdexcept>
#include <string>

namespace tenwein {

// Malformed textual input (permutations, partitions, tensor files, ...).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input outside an operation's domain (degree mismatch,
// N < n, block not stabilized, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds the configured enumeration budgets.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariant; indicates a bug, never a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

inline void check_invariant(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace tenwein
