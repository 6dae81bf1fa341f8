#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fracineq/field.hpp"

namespace fracineq {

/// exp(2 pi i k.x / L). Only k[0] is used in one dimension.
struct FourierMode {
  std::array<long, 2> k{1, 0};
};

/// (4 pi sigma^2)^{-n/2} exp(-|x - c|^2 / (4 sigma^2)), distance taken on the torus.
struct Gaussian {
  double sigma = 1.0;
  std::array<double, 2> center{0.0, 0.0};
};

/// exp(1 - 1 / (1 - (|x - c| / R)^2)) inside the ball of radius R, zero outside.
/// Peak value 1 at the center.
struct SmoothBump {
  double radius = 1.0;
  std::array<double, 2> center{0.0, 0.0};
};

/// Real trigonometric polynomial sum_k a_k cos(xi_k.x) + b_k sin(xi_k.x) over the
/// half-lattice 1 <= |k|_inf <= max_band, with a_k, b_k uniform in [-1, 1] drawn
/// from a seeded 64-bit Mersenne twister. The coefficients do not depend on the
/// grid, so the same seed gives the same function at every resolution.
struct RandomBandLimited {
  std::uint64_t seed = 0;
  int max_band = 1;
};

/// A weighted sum of elementary generators. A single generator is a one-term sum.
class GeneratorSpec {
 public:
  using Term = std::variant<FourierMode, Gaussian, SmoothBump, RandomBandLimited>;
  struct Weighted {
    double weight = 1.0;
    Term term;
  };

  GeneratorSpec() = default;
  GeneratorSpec(Term term, double weight = 1.0) { terms_.push_back({weight, std::move(term)}); }

  static GeneratorSpec fourier_mode(long k0, long k1 = 0) { return {FourierMode{{k0, k1}}}; }
  static GeneratorSpec gaussian(double sigma, std::array<double, 2> center = {0.0, 0.0}) {
    return {Gaussian{sigma, center}};
  }
  static GeneratorSpec smooth_bump(double radius, std::array<double, 2> center = {0.0, 0.0}) {
    return {SmoothBump{radius, center}};
  }
  static GeneratorSpec random_band_limited(std::uint64_t seed, int max_band) {
    return {RandomBandLimited{seed, max_band}};
  }

  GeneratorSpec operator+(const GeneratorSpec& other) const;
  GeneratorSpec scaled(double weight) const;

  const std::vector<Weighted>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::string describe() const;

 private:
  std::vector<Weighted> terms_;
};

/// Evaluates the generator at every grid point.
/// Throws InvalidArgument for a mode outside [-N/2, N/2), sigma < 2h, a
/// nonpositive bump radius, or max_band outside [1, N/2).
SampledField sample(const DomainSpec& domain, const GeneratorSpec& generator);

/// max|f| on the cube boundary divided by max|f|: the truncation diagnostic for
/// fields standing in for functions on R^n (design target < 1e-10).
double boundary_decay(const SampledField& field);

/// Names and parameter lists of the available generator kinds.
std::vector<std::string> generator_catalog();

}  // namespace fracineq
