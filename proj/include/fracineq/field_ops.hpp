#pragma once

#include <limits>

#include "fracineq/field.hpp"

namespace fracineq {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// How dilation treats points x with lambda x outside the cube.
enum class Extension {
  /// Zero outside the cube: the field stands for a function on R^n and
  /// f_lambda(x) = f(lambda x) is an honest change of variables, so
  /// ||f_lambda||_q = lambda^{-n/q} ||f||_q on the Riemann sums.
  zero,
  /// Wrap lambda x back onto the torus: mode k maps to mode lambda k and
  /// every L^q norm is preserved.
  periodic,
};

/// f_lambda(x_m) = f(lambda x_m) for lambda = 2^m, m >= 0. Grid-exact: the
/// source point is always a grid point. Throws unless lambda is a power of two.
SampledField dilate(const SampledField& field, long lambda, Extension ext = Extension::zero);

/// Riemann-sum norm (h^n sum |f|^p)^{1/p}; p = kInfinity gives max|f|.
/// Throws for p < 1.
double lp_norm(const SampledField& field, double p);
double lp_norm(const DomainSpec& domain, std::span<const double> magnitudes, double p);

}  // namespace fracineq
