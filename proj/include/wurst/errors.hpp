#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wurst {

/// Malformed input: bad indices, mismatched caps, non-directed objects.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested degree lies beyond a truncation bound.
class CapError : public InputError {
 public:
  using InputError::InputError;
};

/// A backtracking search visited more nodes than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Node-count limit for exhaustive searches. Shared by reference across nested
/// searches so one limit governs the whole computation.
struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > max_nodes) {
      throw BudgetExceeded("search budget of " + std::to_string(max_nodes) + " nodes exhausted");
    }
  }
};

}  // namespace wurst
