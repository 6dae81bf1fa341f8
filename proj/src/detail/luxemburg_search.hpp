#pragma once

#include <cmath>
#include <stdexcept>

namespace fracineq::detail {

/// Bisection in mu = log lambda for the root of modular(mu) = 1, where
/// modular is non-increasing in mu. Starts from [log_lo, log_hi] and widens it
/// geometrically when needed. Returns exp(hi) so modular(hi) <= 1 always holds.
template <class Modular>
double luxemburg_search(Modular&& modular, double log_lo, double log_hi) {
  constexpr int kMaxIterations = 200;
  constexpr double kLogTolerance = 1e-13;
  double width = log_hi - log_lo;
  for (int i = 0; modular(log_lo) <= 1.0; ++i) {
    if (i == kMaxIterations) throw std::runtime_error("luxemburg_search: no lower bracket");
    log_hi = log_lo;
    log_lo -= width;
    width *= 2.0;
  }
  width = log_hi - log_lo;
  for (int i = 0; modular(log_hi) > 1.0; ++i) {
    if (i == kMaxIterations) throw std::runtime_error("luxemburg_search: no upper bracket");
    log_lo = log_hi;
    log_hi += width;
    width *= 2.0;
  }
  for (int i = 0; i < kMaxIterations && log_hi - log_lo > kLogTolerance; ++i) {
    const double mid = 0.5 * (log_lo + log_hi);
    if (mid <= log_lo || mid >= log_hi) break;
    if (modular(mid) > 1.0) {
      log_lo = mid;
    } else {
      log_hi = mid;
    }
  }
  return std::exp(log_hi);
}

}  // namespace fracineq::detail
