#include "fracineq/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "fracineq/error.hpp"
#include "fracineq/fft.hpp"

namespace fracineq {

namespace {

long isqrt(long v) {
  if (v < 0) return -1;
  auto r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::size_t wrap(long i, std::size_t n) {
  const long nn = static_cast<long>(n);
  long w = i % nn;
  if (w < 0) w += nn;
  return static_cast<std::size_t>(w);
}

// 1-D: direct window sums in a fixed order, so the result is monotone in |f|
// under round-to-nearest.
void sweep_1d(std::span<const double> mag, const BallFamily& balls, std::vector<double>& out) {
  const std::size_t n = mag.size();
  for (std::size_t j = 0; j < balls.radii_in_cells().size(); ++j) {
    const long r = balls.radii_in_cells()[j];
    if (r <= 1) continue;
    const long w = BallFamily::row_half_width(r, 0);
    const double inv = 1.0 / static_cast<double>(2 * w + 1);
    for (std::size_t c = 0; c < n; ++c) {
      double sum = 0.0;
      for (long d = -w; d <= w; ++d) sum += mag[wrap(static_cast<long>(c) + d, n)];
      out[c] = std::max(out[c], sum * inv);
    }
  }
}

// 2-D: per-row prefix sums over a doubled row (periodic windows in O(1)),
// accumulated in long double.
void sweep_2d(std::span<const double> mag, const BallFamily& balls, std::vector<double>& out) {
  const std::size_t n = balls.domain().points();
  std::vector<long double> prefix(n * (2 * n + 1));
  for (std::size_t row = 0; row < n; ++row) {
    long double* p = &prefix[row * (2 * n + 1)];
    p[0] = 0.0L;
    for (std::size_t c = 0; c < 2 * n; ++c) p[c + 1] = p[c] + mag[row * n + (c % n)];
  }
  auto row_sum = [&](std::size_t row, long lo, long hi) {
    // Columns lo..hi with 0 <= lo + n, hi - lo < n.
    const long nn = static_cast<long>(n);
    const long shift = lo < 0 ? nn : 0;
    const long double* p = &prefix[row * (2 * n + 1)];
    return p[hi + shift + 1] - p[lo + shift];
  };
  for (std::size_t j = 0; j < balls.radii_in_cells().size(); ++j) {
    const long r = balls.radii_in_cells()[j];
    if (r <= 1) continue;
    std::vector<long> half(static_cast<std::size_t>(r));
    for (long dy = 0; dy < r; ++dy) half[static_cast<std::size_t>(dy)] = BallFamily::row_half_width(r, dy);
    const long double inv = 1.0L / static_cast<long double>(balls.cell_count(j));
    for (std::size_t i0 = 0; i0 < n; ++i0) {
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        long double sum = 0.0L;
        for (long dy = -(r - 1); dy <= r - 1; ++dy) {
          const long w = half[static_cast<std::size_t>(std::abs(dy))];
          if (w < 0) continue;
          const std::size_t row = wrap(static_cast<long>(i0) + dy, n);
          sum += row_sum(row, static_cast<long>(i1) - w, static_cast<long>(i1) + w);
        }
        double& m = out[i0 * n + i1];
        m = std::max(m, static_cast<double>(sum * inv));
      }
    }
  }
}

}  // namespace

BallFamily BallFamily::dyadic(const DomainSpec& domain) {
  std::vector<long> radii;
  for (long r = static_cast<long>(domain.points() / 2); r >= 1; r /= 2) radii.push_back(r);
  return BallFamily(domain, std::move(radii));
}

long BallFamily::row_half_width(long radius_cells, long dy) {
  return isqrt(radius_cells * radius_cells - dy * dy - 1);
}

std::size_t BallFamily::cell_count(std::size_t j) const {
  const long r = radii_.at(j);
  if (domain_.dimension() == 1) return static_cast<std::size_t>(2 * row_half_width(r, 0) + 1);
  std::size_t count = 0;
  for (long dy = -(r - 1); dy <= r - 1; ++dy) {
    const long w = row_half_width(r, dy);
    if (w >= 0) count += static_cast<std::size_t>(2 * w + 1);
  }
  return count;
}

SampledField hl_maximal(const SampledField& field, const BallFamily& balls) {
  require_same_domain(field.domain(), balls.domain(), "hl_maximal");
  const auto mag = field.abs();
  std::vector<double> out = mag;
  if (field.domain().dimension() == 1) {
    sweep_1d(mag, balls, out);
  } else {
    sweep_2d(mag, balls, out);
  }
  return SampledField::from_real(field.domain(), out);
}

SampledField hl_maximal(const SampledField& field) {
  return hl_maximal(field, BallFamily::dyadic(field.domain()));
}

double SmoothProfile::symbol(double t_xi_squared) const {
  switch (kind) {
    case Kind::heat:
      return std::exp(-t_xi_squared);
    case Kind::heat_derivative:
      if (t_xi_squared == 0.0) return order == 0.0 ? 1.0 : 0.0;
      return std::pow(t_xi_squared, 0.5 * order) * std::exp(-t_xi_squared);
    case Kind::littlewood_paley:
      return littlewood_paley_profile(std::sqrt(t_xi_squared));
  }
  return 0.0;
}

std::string SmoothProfile::describe() const {
  switch (kind) {
    case Kind::heat:
      return "heat";
    case Kind::heat_derivative:
      return fmt::format("heat_derivative({})", order);
    case Kind::littlewood_paley:
      return "littlewood_paley";
  }
  return "unknown";
}

LogGridSpec default_phi_grid(const DomainSpec& domain) {
  const double h = domain.spacing();
  return LogGridSpec{h * h, 0.25 * domain.period() * domain.period(), 128};
}

SampledField phi_maximal(const SampledField& field, const SmoothProfile& phi,
                         const LogGridSpec& t_grid) {
  if (t_grid.nodes == 0) throw InvalidArgument("phi_maximal: empty t-grid");
  if (phi.kind == SmoothProfile::Kind::heat_derivative && !(phi.order >= 0.0)) {
    throw InvalidArgument(fmt::format("phi_maximal: derivative order {} < 0", phi.order));
  }
  const auto coeffs = dft(field);
  std::vector<double> best(field.size(), 0.0);
  for (double t : t_grid.times()) {
    const auto smoothed =
        idft(apply_symbol(coeffs, [&](double xi2) { return phi.symbol(t * xi2); }, ZeroMode::preserve));
    for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], std::abs(smoothed[i]));
  }
  return SampledField::from_real(field.domain(), best);
}

double weak_lorentz_norm(const DomainSpec& domain, std::span<const double> magnitudes, double r) {
  if (!(r >= 1.0)) throw InvalidArgument(fmt::format("weak_lorentz_norm: r = {} < 1", r));
  std::vector<double> v(magnitudes.size());
  std::transform(magnitudes.begin(), magnitudes.end(), v.begin(), [](double x) { return std::abs(x); });
  std::sort(v.begin(), v.end(), std::greater<>());
  double best = 0.0;
  const double cell = domain.cell_volume();
  // sup over lambda just below each distinct value v_i of v_i * |{|f| >= v_i}|^{1/r}.
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) break;
    if (i + 1 < v.size() && v[i + 1] == v[i]) continue;
    const double measure = cell * static_cast<double>(i + 1);
    best = std::max(best, v[i] * std::pow(measure, 1.0 / r));
  }
  return best;
}

double weak_lorentz_norm(const SampledField& field, double r) {
  const auto mags = field.abs();
  return weak_lorentz_norm(field.domain(), mags, r);
}

SampledField riesz_kernel_on_grid(const DomainSpec& domain, double s) {
  const int n = domain.dimension();
  if (!(s > 0.0 && s < n)) {
    throw InvalidArgument(fmt::format("riesz_kernel_on_grid: s = {} outside (0, n = {})", s, n));
  }
  std::vector<double> values(domain.size(), 0.0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    const auto x = domain.point(flat);
    const std::span<const double> xs(x.data(), static_cast<std::size_t>(n));
    if (x[0] == 0.0 && (n == 1 || x[1] == 0.0)) continue;
    values[flat] = riesz_kernel_eval(xs, n, s);
  }
  return SampledField::from_real(domain, values);
}

}  // namespace fracineq
