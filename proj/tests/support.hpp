#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fracineq/field.hpp"
#include "fracineq/generators.hpp"

namespace fracineq::check {

/// Seeded source of random test inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::uint64_t seed() { return rng_(); }

  SampledField band_limited(const DomainSpec& d, int max_band) {
    return sample(d, GeneratorSpec::random_band_limited(seed(), max_band));
  }

  /// Band-limited field with a random mean and random overall scale.
  SampledField field(const DomainSpec& d, int max_band) {
    const auto f = band_limited(d, max_band);
    return f.scaled(uniform(0.1, 10.0)) + SampledField::constant(d, uniform(-1.0, 1.0));
  }

  std::vector<double> nonnegative(std::size_t n, double hi = 1.0) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(0.0, hi);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

/// Runs `body` on `count` generators derived from `seed`.
template <class F>
void for_all(std::uint64_t seed, int count, F&& body) {
  Gen root(seed);
  for (int i = 0; i < count; ++i) {
    Gen g(root.seed());
    body(g);
  }
}

inline double rel_diff(const SampledField& a, const SampledField& b) {
  const double scale = b.max_abs();
  return (a - b).max_abs() / (scale > 0.0 ? scale : 1.0);
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace fracineq::check
