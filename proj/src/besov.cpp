#include "fracineq/besov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fracineq/error.hpp"
#include "fracineq/luxemburg.hpp"
#include "fracineq/spectral.hpp"

namespace fracineq {

TGrid TGrid::defaults(const DomainSpec& domain) {
  const double a = domain.spacing() / std::numbers::pi;
  const double b = 0.5 * domain.period();
  return TGrid{a * a, b * b, 256};
}

void TGrid::validate() const {
  if (!(t_min > 0.0 && t_max > t_min) || count < 100) {
    throw InvalidArgument(
        fmt::format("TGrid: need 0 < t_min < t_max and count >= 100 (got [{}, {}], {})", t_min, t_max, count));
  }
}

std::vector<double> TGrid::times() const {
  validate();
  return LogGridSpec{t_min, t_max, count}.times();
}

double besov_norm_thermic(const SampledField& field, double beta, const TGrid& tg) {
  if (!(beta > 0.0)) throw InvalidArgument(fmt::format("besov_norm_thermic: beta = {} <= 0", beta));
  const auto coeffs = dft(field);
  double best = 0.0;
  for (double t : tg.times()) {
    const auto smoothed =
        idft(apply_symbol(coeffs, [t](double xi2) { return std::exp(-t * xi2); }, ZeroMode::annihilate));
    best = std::max(best, std::pow(t, 0.5 * beta) * smoothed.max_abs());
  }
  return best;
}

double besov_norm_thermic(const SampledField& field, double beta) {
  return besov_norm_thermic(field, beta, TGrid::defaults(field.domain()));
}

LittlewoodPaleyBasis::LittlewoodPaleyBasis(const DomainSpec& domain) : domain_(domain) {
  const FrequencyGrid grid(domain);
  const double xi_min = 2.0 * std::numbers::pi / domain.period();
  const double xi_max = std::sqrt(grid.base_squared() * static_cast<double>(grid.max_k_squared()));
  j_min_ = static_cast<int>(std::floor(std::log2(xi_min)));
  j_max_ = static_cast<int>(std::ceil(std::log2(xi_max)));
}

double LittlewoodPaleyBasis::phi_hat(double xi_norm) { return littlewood_paley_profile(xi_norm); }

double LittlewoodPaleyBasis::psi_hat(int j, double xi_norm) {
  return phi_hat(std::ldexp(xi_norm, -(j + 1))) - phi_hat(std::ldexp(xi_norm, -j));
}

SpectralCoefficients LittlewoodPaleyBasis::block_coefficients(const SpectralCoefficients& coeffs, int j) const {
  if (j < j_min_ || j > j_max_) {
    throw InvalidArgument(fmt::format("dyadic_block: j = {} outside [{}, {}]", j, j_min_, j_max_));
  }
  require_same_domain(coeffs.domain, domain_, "dyadic_block");
  return apply_symbol(
      coeffs, [j](double xi2) { return psi_hat(j, std::sqrt(xi2)); }, ZeroMode::annihilate);
}

std::vector<SampledField> LittlewoodPaleyBasis::blocks(const SampledField& field) const {
  const auto coeffs = dft(field);
  std::vector<SampledField> out;
  out.reserve(block_count());
  for (int j = j_min_; j <= j_max_; ++j) out.push_back(idft(block_coefficients(coeffs, j)));
  return out;
}

SampledField dyadic_block(const SampledField& field, int j, const LittlewoodPaleyBasis& basis) {
  return idft(basis.block_coefficients(dft(field), j));
}

double besov_norm_lp(const SampledField& field, double beta, const LittlewoodPaleyBasis& basis) {
  if (!(beta > 0.0)) throw InvalidArgument(fmt::format("besov_norm_lp: beta = {} <= 0", beta));
  const auto blocks = basis.blocks(field);
  double best = 0.0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int j = basis.j_min() + static_cast<int>(i);
    best = std::max(best, std::exp2(-beta * j) * blocks[i].max_abs());
  }
  return best;
}

SampledField lp_square_function(const SampledField& field, double s, const LittlewoodPaleyBasis& basis) {
  if (!(s >= 0.0)) throw InvalidArgument(fmt::format("lp_square_function: s = {} < 0", s));
  const auto blocks = basis.blocks(field);
  std::vector<double> acc(field.size(), 0.0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int j = basis.j_min() + static_cast<int>(i);
    const double w = std::exp2(2.0 * s * j);
    for (std::size_t m = 0; m < acc.size(); ++m) acc[m] += w * std::norm(blocks[i][m]);
  }
  for (double& v : acc) v = std::sqrt(v);
  return SampledField::from_real(field.domain(), acc);
}

double lp_square_function_norm(const SampledField& field, double s, const VariableExponent& p,
                               const LittlewoodPaleyBasis& basis) {
  return luxemburg_norm(lp_square_function(field, s, basis), p);
}

namespace {

double weighted_lr(std::span<const double> a, int j0, double weight_exp, double r) {
  double peak = 0.0;
  std::vector<double> w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    w[i] = std::exp2(weight_exp * (j0 + static_cast<int>(i))) * std::abs(a[i]);
    peak = std::max(peak, w[i]);
  }
  if (std::isinf(r) || peak == 0.0) return peak;
  double sum = 0.0;
  for (double v : w) sum += std::pow(v / peak, r);
  return peak * std::pow(sum, 1.0 / r);
}

}  // namespace

InterpolationCheck sequence_interpolation_check(std::span<const double> a, int j0, double s0,
                                                double s1, double theta, double r, double r1,
                                                double r2) {
  if (!(theta > 0.0 && theta < 1.0)) throw GateError("sequence-interpolation", "0 < theta < 1");
  if (s0 == s1) throw GateError("sequence-interpolation", "s0 != s1");
  if (!(r >= 1.0 && r1 >= 1.0 && r2 >= 1.0)) throw GateError("sequence-interpolation", "r, r1, r2 in [1, inf]");
  const double s = (1.0 - theta) * s0 + theta * s1;
  InterpolationCheck out;
  out.lhs = weighted_lr(a, j0, s, r);
  out.rhs = std::pow(weighted_lr(a, j0, s0, r1), 1.0 - theta) * std::pow(weighted_lr(a, j0, s1, r2), theta);
  if (out.rhs > 0.0) out.ratio = out.lhs / out.rhs;
  return out;
}

}  // namespace fracineq
