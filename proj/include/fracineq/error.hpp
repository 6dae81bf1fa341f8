#pragma once

#include <stdexcept>
#include <string>

namespace fracineq {

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exponent relation or theorem admissibility gate fails.
/// `gate()` names the violated condition, e.g. "0 <= s1 < s".
class GateError : public InvalidArgument {
 public:
  GateError(std::string relation, std::string gate)
      : InvalidArgument(relation + ": gate violated: " + gate),
        relation_(std::move(relation)),
        gate_(std::move(gate)) {}

  const std::string& relation() const noexcept { return relation_; }
  const std::string& gate() const noexcept { return gate_; }

 private:
  std::string relation_;
  std::string gate_;
};

}  // namespace fracineq
