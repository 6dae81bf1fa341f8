#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fracineq/exponent.hpp"
#include "fracineq/field.hpp"
#include "fracineq/fft.hpp"

namespace fracineq {

/// Log-uniform times for the thermic sup over t > 0.
struct TGrid {
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t count = 256;

  /// [(h/pi)^2, (L/2)^2] with 256 nodes.
  static TGrid defaults(const DomainSpec& domain);
  /// Throws unless 0 < t_min < t_max and count >= 100.
  void validate() const;
  std::vector<double> times() const;
};

/// max over t of t^{beta/2} ||h_t * (f - mean f)||_inf. Requires beta > 0.
double besov_norm_thermic(const SampledField& field, double beta, const TGrid& tg);
double besov_norm_thermic(const SampledField& field, double beta);

/// Littlewood-Paley blocks psi_j-hat(xi) = phi-hat(xi / 2^{j+1}) - phi-hat(xi / 2^j)
/// on a fixed grid. j runs from floor(log2(2 pi / L)) to ceil(log2 max|xi|), so
/// the blocks sum to exactly 1 at every nonzero grid frequency.
class LittlewoodPaleyBasis {
 public:
  explicit LittlewoodPaleyBasis(const DomainSpec& domain);

  const DomainSpec& domain() const noexcept { return domain_; }
  int j_min() const noexcept { return j_min_; }
  int j_max() const noexcept { return j_max_; }
  std::size_t block_count() const noexcept { return static_cast<std::size_t>(j_max_ - j_min_ + 1); }

  static double phi_hat(double xi_norm);
  static double psi_hat(int j, double xi_norm);

  /// Spectral coefficients of Delta_j f. Throws if j is outside [j_min, j_max]
  /// or the grids differ.
  SpectralCoefficients block_coefficients(const SpectralCoefficients& coeffs, int j) const;
  /// All blocks j_min..j_max of one field, in order.
  std::vector<SampledField> blocks(const SampledField& field) const;

 private:
  DomainSpec domain_;
  int j_min_;
  int j_max_;
};

/// Delta_j f: spectral multiplication by psi_j-hat.
SampledField dyadic_block(const SampledField& field, int j, const LittlewoodPaleyBasis& basis);

/// max over j of 2^{-beta j} ||Delta_j f||_inf. Requires beta > 0.
double besov_norm_lp(const SampledField& field, double beta, const LittlewoodPaleyBasis& basis);

/// (sum_j 2^{2 s j} |Delta_j f|^2)^{1/2} as a field. Requires s >= 0.
SampledField lp_square_function(const SampledField& field, double s, const LittlewoodPaleyBasis& basis);

/// Luxemburg norm of lp_square_function(field, s, basis).
double lp_square_function_norm(const SampledField& field, double s, const VariableExponent& p,
                               const LittlewoodPaleyBasis& basis);

struct InterpolationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs / rhs; absent when rhs is 0.
  std::optional<double> ratio;
};

/// Both sides of ||2^{js} a_j||_{l^r} <= C ||2^{j s0} a_j||_{l^r1}^{1-theta} ||2^{j s1} a_j||_{l^r2}^theta
/// with s = (1 - theta) s0 + theta s1, for a_j stored from index j0 on. r, r1, r2
/// in [1, inf] (kInfinity for the sup norm). Throws for theta outside (0, 1),
/// s0 == s1, or an exponent below 1.
InterpolationCheck sequence_interpolation_check(std::span<const double> a, int j0, double s0,
                                                double s1, double theta, double r, double r1,
                                                double r2);

}  // namespace fracineq
