#include <algorithm>

#include <fmt/format.h>

#include "fracineq/acceptance.hpp"

int main() {
  const auto run = fracineq::run_acceptance();
  for (const auto& c : run.criteria) {
    fmt::print("[{}] criterion {:>2} {}: {} ({:.2f} s)\n", c.pass ? "PASS" : "FAIL", c.id, c.name, c.detail,
               c.seconds);
  }
  const auto passed = std::count_if(run.criteria.begin(), run.criteria.end(), [](const auto& c) { return c.pass; });
  fmt::print("{}/{} criteria passed\n", passed, run.criteria.size());
  return run.all_pass() ? 0 : 1;
}
