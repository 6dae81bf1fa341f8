#pragma once

#include <optional>

#include "fracineq/exponent.hpp"
#include "fracineq/field.hpp"

namespace fracineq {

/// Riemann sum h^n sum |f(x)|^{p(x)}. Throws on grid mismatch.
double modular(const SampledField& field, const VariableExponent& p);

/// inf{lambda > 0 : modular(f / lambda) <= 1}, by bisection in log lambda to
/// relative 1e-12. The returned lambda always satisfies modular(f / lambda) <= 1.
/// Zero field gives 0. Throws on grid mismatch.
double luxemburg_norm(const SampledField& field, const VariableExponent& p);

struct LogHolderConstants {
  /// max over pairs of |1/p(x) - 1/p(y)| log(e + 1/|x - y|), torus distance.
  double local = 0.0;
  /// max over points of |1/p(x) - 1/p_infty| log(e + |x|), |x| from the cube
  /// center. Absent when the exponent has no declared p_infty.
  std::optional<double> infty;
};

/// Exact scan over all pairs, ordered by distance and cut off once
/// (max 1/p - min 1/p) log(e + 1/d) cannot beat the running maximum.
LogHolderConstants log_holder_constants(const VariableExponent& p);

/// ||(-Delta)^{s/2} f||_{L^{p(.)}}. Requires s >= 0; vanishes on constants.
double sobolev_norm(const SampledField& field, double s, const VariableExponent& p);

/// L^{p(.)} intersected with L^frak_p, and its homogeneous Sobolev analogue of
/// order s.
struct MixedSpaceSpec {
  VariableExponent p;
  double frak_p = 2.0;
  double s = 0.0;

  /// Throws unless 1 < frak_p < infinity and s >= 0.
  void validate() const;
};

/// max(||f||_{p(.)}, ||f||_{frak_p}).
double mixed_lebesgue_norm(const SampledField& field, const MixedSpaceSpec& spec);
/// max(||(-Delta)^{s/2} f||_{p(.)}, ||(-Delta)^{s/2} f||_{frak_p}).
double mixed_sobolev_norm(const SampledField& field, const MixedSpaceSpec& spec);

}  // namespace fracineq
