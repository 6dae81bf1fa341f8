#pragma once

#include <array>
#include <functional>
#include <vector>

#include "fracineq/fft.hpp"
#include "fracineq/field.hpp"

namespace fracineq {

enum class ZeroMode { annihilate, preserve };

/// A radial symbol given as a function of |xi|^2; evaluated once per distinct
/// |k|^2 on the grid, never at xi = 0 when the zero mode is annihilated.
using RadialSymbol = std::function<double(double xi_squared)>;

SpectralCoefficients apply_symbol(const SpectralCoefficients& coeffs, const RadialSymbol& symbol,
                                  ZeroMode zero_mode);
SampledField apply_symbol(const SampledField& field, const RadialSymbol& symbol, ZeroMode zero_mode);

/// (-Delta)^{s/2}: symbol |xi|^s, zero mode removed. s >= 0.
SampledField fractional_laplacian(const SampledField& field, double s);

/// I_s: symbol |xi|^{-s}, zero mode removed. Requires 0 < s < n.
SampledField riesz_potential(const SampledField& field, double s);

/// K_s(x) = |x|^{s-n}. Requires x != 0 and 0 < s < n.
double riesz_kernel_eval(std::span<const double> x, int n, double s);

/// h_t * f: symbol exp(-t |xi|^2), mean preserved. Requires t > 0.
SampledField heat_convolve(const SampledField& field, double t);

/// Low-pass profile of the Littlewood-Paley decomposition as a function of
/// r = |xi|: 1 for r <= 1/2, 0 for r >= 1, and 1 - S((r - 1/2) / (1/2)) in
/// between with the quintic smoothstep S(u) = 6u^5 - 15u^4 + 10u^3.
double littlewood_paley_profile(double r);

/// Log-uniform nodes t_i on [t_min, t_max] with trapezoid weights in log t.
struct LogGridSpec {
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t nodes = 0;

  /// Throws when the grid is empty or the range is not positive and increasing.
  void validate() const;
  std::vector<double> times() const;
  /// Trapezoid weights for integrals in d(log t).
  std::vector<double> log_weights() const;

  /// Range reaching far enough past the resolved scales (L/(pi N))^2 and
  /// (L/(2 pi))^2 that both dropped tails are below 1e-12 relative for
  /// k - s1/2 >= 0.1, with a log-step of at most 0.25.
  static LogGridSpec riemann_liouville_default(const DomainSpec& domain);
};

/// Smallest integer k with k > s/2.
int default_riemann_liouville_order(double s);

/// (-Delta)^{s1/2} f via
///   (1 / Gamma(k - s1/2)) int_0^inf t^{k - s1/2 - 1} (-Delta)^k (h_t * f) dt,
/// with the t-integral replaced by the trapezoid rule in log t on `quadrature`
/// and (-Delta)^k (h_t * f) applied spectrally. `k = 0` selects
/// default_riemann_liouville_order(s). Throws if k <= s1/2, s1 <= 0, s < s1 or
/// the quadrature grid is empty.
SampledField riemann_liouville_fraclap(const SampledField& field, double s1, double s, int k,
                                       const LogGridSpec& quadrature);

/// The scalar factor the quadrature applies to a mode with |xi|^2 = xi2.
/// Exact value is |xi|^{s1}.
double riemann_liouville_symbol(double xi2, double s1, int k, const LogGridSpec& quadrature);

}  // namespace fracineq
