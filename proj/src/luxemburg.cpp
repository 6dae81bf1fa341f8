#include "fracineq/luxemburg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "detail/luxemburg_search.hpp"
#include "fracineq/error.hpp"
#include "fracineq/field_ops.hpp"
#include "fracineq/spectral.hpp"

namespace fracineq {

double modular(const SampledField& field, const VariableExponent& p) {
  require_same_domain(field.domain(), p.domain(), "modular");
  double sum = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) sum += std::pow(std::abs(field[i]), p[i]);
  return field.domain().cell_volume() * sum;
}

double luxemburg_norm(const SampledField& field, const VariableExponent& p) {
  require_same_domain(field.domain(), p.domain(), "luxemburg_norm");
  const double peak = field.max_abs();
  if (peak == 0.0) return 0.0;
  std::vector<double> log_mag;
  std::vector<double> expo;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double m = std::abs(field[i]);
    if (m == 0.0) continue;
    log_mag.push_back(std::log(m));
    expo.push_back(p[i]);
  }
  const double cell = field.domain().cell_volume();
  auto rho = [&](double mu) {
    double sum = 0.0;
    for (std::size_t i = 0; i < log_mag.size(); ++i) sum += std::exp(expo[i] * (log_mag[i] - mu));
    return cell * sum;
  };
  const double log_lo = std::log(peak * 1e-6);
  const double log_hi = std::log(peak * 1e6) + std::log(field.domain().measure()) / p.p_minus();
  return detail::luxemburg_search(rho, log_lo, std::max(log_hi, log_lo + 1.0));
}

LogHolderConstants log_holder_constants(const VariableExponent& p) {
  const auto& d = p.domain();
  const std::size_t n = d.points();
  const bool two_d = d.dimension() == 2;
  std::vector<double> u(p.values().size());
  std::transform(p.values().begin(), p.values().end(), u.begin(), [](double v) { return 1.0 / v; });
  const auto [umin, umax] = std::minmax_element(u.begin(), u.end());
  const double spread = *umax - *umin;
  const double e = std::numbers::e;

  LogHolderConstants out;
  if (spread > 0.0) {
    // Offsets (dx, dy) with dx, dy in [0, N) stand for torus displacements;
    // sorted by wrapped length.
    struct Offset {
      long dx, dy;
      double dist;
    };
    std::vector<Offset> offsets;
    const long nn = static_cast<long>(n);
    auto wrapped = [nn](long a) { return std::min(a, nn - a); };
    for (long dx = 0; dx < nn; ++dx) {
      for (long dy = 0; dy < (two_d ? nn : 1); ++dy) {
        if (dx == 0 && dy == 0) continue;
        const double wx = static_cast<double>(wrapped(dx));
        const double wy = static_cast<double>(wrapped(dy));
        offsets.push_back({dx, dy, d.spacing() * std::sqrt(wx * wx + wy * wy)});
      }
    }
    std::stable_sort(offsets.begin(), offsets.end(),
                     [](const Offset& a, const Offset& b) { return a.dist < b.dist; });
    double best = 0.0;
    for (const auto& off : offsets) {
      const double weight = std::log(e + 1.0 / off.dist);
      if (spread * weight <= best) break;
      double diff = 0.0;
      for (std::size_t flat = 0; flat < u.size(); ++flat) {
        const auto idx = d.unflatten(flat);
        const std::size_t i0 = (idx[0] + static_cast<std::size_t>(off.dx)) % n;
        const std::size_t other = two_d ? i0 * n + (idx[1] + static_cast<std::size_t>(off.dy)) % n : i0;
        diff = std::max(diff, std::abs(u[flat] - u[other]));
      }
      best = std::max(best, diff * weight);
    }
    out.local = best;
  }
  if (p.p_infty()) {
    const double u_inf = 1.0 / *p.p_infty();
    double best = 0.0;
    for (std::size_t flat = 0; flat < u.size(); ++flat) {
      const auto x = d.point(flat);
      const double r = std::sqrt(x[0] * x[0] + (two_d ? x[1] * x[1] : 0.0));
      best = std::max(best, std::abs(u[flat] - u_inf) * std::log(e + r));
    }
    out.infty = best;
  }
  return out;
}

double sobolev_norm(const SampledField& field, double s, const VariableExponent& p) {
  if (!(s >= 0.0)) throw InvalidArgument(fmt::format("sobolev_norm: s = {} < 0", s));
  return luxemburg_norm(fractional_laplacian(field, s), p);
}

void MixedSpaceSpec::validate() const {
  if (!(frak_p > 1.0 && std::isfinite(frak_p))) {
    throw GateError("mixed-space", fmt::format("1 < frak_p < inf (got {})", frak_p));
  }
  if (!(s >= 0.0)) throw GateError("mixed-space", fmt::format("s >= 0 (got {})", s));
}

double mixed_lebesgue_norm(const SampledField& field, const MixedSpaceSpec& spec) {
  spec.validate();
  return std::max(luxemburg_norm(field, spec.p), lp_norm(field, spec.frak_p));
}

double mixed_sobolev_norm(const SampledField& field, const MixedSpaceSpec& spec) {
  spec.validate();
  const auto deriv = fractional_laplacian(field, spec.s);
  return std::max(luxemburg_norm(deriv, spec.p), lp_norm(deriv, spec.frak_p));
}

}  // namespace fracineq
