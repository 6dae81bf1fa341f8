#include "fracineq/spectral.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "fracineq/error.hpp"

namespace fracineq {

SpectralCoefficients apply_symbol(const SpectralCoefficients& coeffs, const RadialSymbol& symbol,
                                  ZeroMode zero_mode) {
  const FrequencyGrid grid(coeffs.domain);
  // One evaluation per distinct |k|^2.
  std::vector<double> cache(static_cast<std::size_t>(grid.max_k_squared()) + 1,
                            std::numeric_limits<double>::quiet_NaN());
  SpectralCoefficients out{coeffs.domain, coeffs.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const long k2 = grid.k_squared(i);
    if (k2 == 0 && zero_mode == ZeroMode::annihilate) {
      out.values[i] = 0.0;
      continue;
    }
    double& m = cache[static_cast<std::size_t>(k2)];
    if (std::isnan(m)) m = symbol(grid.xi_squared(i));
    out.values[i] *= m;
  }
  return out;
}

SampledField apply_symbol(const SampledField& field, const RadialSymbol& symbol,
                          ZeroMode zero_mode) {
  return idft(apply_symbol(dft(field), symbol, zero_mode));
}

SampledField fractional_laplacian(const SampledField& field, double s) {
  if (!(s >= 0.0)) throw InvalidArgument(fmt::format("fractional_laplacian: s = {} < 0", s));
  return apply_symbol(
      field, [s](double xi2) { return std::pow(xi2, 0.5 * s); }, ZeroMode::annihilate);
}

SampledField riesz_potential(const SampledField& field, double s) {
  const int n = field.domain().dimension();
  if (!(s > 0.0 && s < n)) {
    throw InvalidArgument(fmt::format("riesz_potential: s = {} outside (0, n = {})", s, n));
  }
  return apply_symbol(
      field, [s](double xi2) { return std::pow(xi2, -0.5 * s); }, ZeroMode::annihilate);
}

double riesz_kernel_eval(std::span<const double> x, int n, double s) {
  if (!(s > 0.0 && s < n)) {
    throw InvalidArgument(fmt::format("riesz_kernel_eval: s = {} outside (0, n = {})", s, n));
  }
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  if (r2 == 0.0) throw InvalidArgument("riesz_kernel_eval: kernel is singular at x = 0");
  return std::pow(r2, 0.5 * (s - n));
}

SampledField heat_convolve(const SampledField& field, double t) {
  if (!(t > 0.0)) throw InvalidArgument(fmt::format("heat_convolve: t = {} must be positive", t));
  return apply_symbol(
      field, [t](double xi2) { return std::exp(-t * xi2); }, ZeroMode::preserve);
}

double littlewood_paley_profile(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  const double u = 2.0 * r - 1.0;
  return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

void LogGridSpec::validate() const {
  if (nodes == 0) throw InvalidArgument("LogGridSpec: empty quadrature grid");
  if (!(t_min > 0.0) || !(t_max >= t_min) || (nodes > 1 && !(t_max > t_min))) {
    throw InvalidArgument(fmt::format("LogGridSpec: invalid range [{}, {}]", t_min, t_max));
  }
}

std::vector<double> LogGridSpec::times() const {
  validate();
  std::vector<double> t(nodes);
  if (nodes == 1) {
    t[0] = t_min;
    return t;
  }
  const double lo = std::log(t_min);
  const double step = (std::log(t_max) - lo) / static_cast<double>(nodes - 1);
  for (std::size_t i = 0; i < nodes; ++i) t[i] = std::exp(lo + step * static_cast<double>(i));
  return t;
}

std::vector<double> LogGridSpec::log_weights() const {
  validate();
  std::vector<double> w(nodes, 0.0);
  if (nodes == 1) return w;
  const double step = (std::log(t_max) - std::log(t_min)) / static_cast<double>(nodes - 1);
  for (std::size_t i = 0; i < nodes; ++i) w[i] = step;
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

LogGridSpec LogGridSpec::riemann_liouville_default(const DomainSpec& domain) {
  const double pi = std::numbers::pi;
  const double fine = std::pow(domain.period() / (pi * static_cast<double>(domain.points())), 2);
  const double coarse = std::pow(domain.period() / (2.0 * pi), 2);
  LogGridSpec g;
  g.t_min = fine * 1e-50;
  g.t_max = coarse * 60.0;
  const double span = std::log(g.t_max / g.t_min);
  g.nodes = std::max<std::size_t>(200, static_cast<std::size_t>(std::ceil(span / 0.25)) + 1);
  return g;
}

int default_riemann_liouville_order(double s) { return static_cast<int>(std::floor(s / 2.0)) + 1; }

double riemann_liouville_symbol(double xi2, double s1, int k, const LogGridSpec& quadrature) {
  if (xi2 == 0.0) return 0.0;
  const double a = k - 0.5 * s1;
  const auto t = quadrature.times();
  const auto w = quadrature.log_weights();
  const double log_xi2 = std::log(xi2);
  double sum = 0.0;
  // t^{a} |xi|^{2k} e^{-t |xi|^2} d(log t), assembled in the log domain.
  for (std::size_t i = 0; i < t.size(); ++i) {
    sum += w[i] * std::exp(a * std::log(t[i]) + k * log_xi2 - t[i] * xi2);
  }
  return sum / std::tgamma(a);
}

SampledField riemann_liouville_fraclap(const SampledField& field, double s1, double s, int k,
                                       const LogGridSpec& quadrature) {
  if (!(s1 > 0.0)) throw InvalidArgument(fmt::format("riemann_liouville_fraclap: s1 = {} <= 0", s1));
  if (!(s >= s1)) throw InvalidArgument(fmt::format("riemann_liouville_fraclap: s = {} < s1 = {}", s, s1));
  if (k == 0) k = default_riemann_liouville_order(s);
  if (!(k > 0.5 * s1)) {
    throw InvalidArgument(fmt::format(
        "riemann_liouville_fraclap: k = {} <= s1/2 = {} (Gamma argument must be positive)", k,
        0.5 * s1));
  }
  quadrature.validate();
  const auto t = quadrature.times();
  const auto w = quadrature.log_weights();
  const double a = k - 0.5 * s1;
  const double inv_gamma = 1.0 / std::tgamma(a);
  std::vector<double> log_t(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) log_t[i] = std::log(t[i]);
  return apply_symbol(
      field,
      [&](double xi2) {
        const double log_xi2 = std::log(xi2);
        double sum = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
          sum += w[i] * std::exp(a * log_t[i] + k * log_xi2 - t[i] * xi2);
        }
        return sum * inv_gamma;
      },
      ZeroMode::annihilate);
}

}  // namespace fracineq
