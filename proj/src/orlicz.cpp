#include "fracineq/orlicz.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "detail/luxemburg_search.hpp"
#include "fracineq/error.hpp"

namespace fracineq {

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0 && std::isfinite(p))) throw InvalidArgument(fmt::format("YoungFunction::power: p = {} < 1", p));
  YoungFunction a(Kind::power);
  a.p_ = p;
  a.validate();
  return a;
}

YoungFunction YoungFunction::capped_power(double p, double q, double knee) {
  if (!(q > 1.0 && q <= p && std::isfinite(p)) || !(knee > 0.0)) {
    throw InvalidArgument(
        fmt::format("YoungFunction::capped_power: need 1 < q <= p, knee > 0 (got p = {}, q = {}, knee = {})", p, q, knee));
  }
  YoungFunction a(Kind::capped_power);
  a.p_ = p;
  a.q_ = q;
  a.knee_ = knee;
  a.validate();
  return a;
}

YoungFunction YoungFunction::exp_type() {
  YoungFunction a(Kind::exp_type);
  a.validate();
  return a;
}

YoungFunction YoungFunction::table(std::vector<double> knots, std::vector<double> densities) {
  if (knots.size() != densities.size() || knots.size() < 2) {
    throw InvalidArgument("YoungFunction::table: need at least two (knot, density) pairs");
  }
  if (knots[0] != 0.0 || densities[0] != 0.0) {
    throw InvalidArgument("YoungFunction::table: first knot and density must be 0");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1]) || !std::isfinite(knots[i])) {
      throw InvalidArgument("YoungFunction::table: knots must increase strictly");
    }
    if (!(densities[i] >= densities[i - 1]) || !std::isfinite(densities[i])) {
      throw InvalidArgument("YoungFunction::table: density must be non-decreasing");
    }
  }
  if (!(densities.back() > 0.0)) throw InvalidArgument("YoungFunction::table: density is identically 0");
  YoungFunction a(Kind::table);
  a.cumulative_.assign(knots.size(), 0.0);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    a.cumulative_[i] = a.cumulative_[i - 1] + 0.5 * (densities[i] + densities[i - 1]) * (knots[i] - knots[i - 1]);
  }
  a.knots_ = std::move(knots);
  a.densities_ = std::move(densities);
  a.validate();
  return a;
}

void YoungFunction::validate() const {
  if (!check_convex()) throw InvalidArgument(fmt::format("YoungFunction {}: not convex", describe()));
}

double YoungFunction::value(double t) const {
  if (t <= 0.0) return 0.0;
  switch (kind_) {
    case Kind::power:
      return std::pow(t, p_);
    case Kind::capped_power:
      if (t <= knee_) return std::pow(t, p_);
      return std::pow(knee_, p_) + (p_ / q_) * std::pow(knee_, p_ - q_) * (std::pow(t, q_) - std::pow(knee_, q_));
    case Kind::exp_type:
      if (t < 1e-3) return t * t * (0.5 + t * (1.0 / 6.0 + t * (1.0 / 24.0 + t / 120.0)));
      return std::expm1(t) - t;
    case Kind::table: {
      const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
      const auto i = static_cast<std::size_t>(it - knots_.begin()) - 1;
      const double delta = t - knots_[i];
      if (i + 1 == knots_.size()) return cumulative_[i] + densities_[i] * delta;
      const double slope = (densities_[i + 1] - densities_[i]) / (knots_[i + 1] - knots_[i]);
      return cumulative_[i] + densities_[i] * delta + 0.5 * slope * delta * delta;
    }
  }
  return 0.0;
}

double YoungFunction::density(double t) const {
  if (t <= 0.0) return 0.0;
  switch (kind_) {
    case Kind::power:
      return p_ * std::pow(t, p_ - 1.0);
    case Kind::capped_power:
      if (t <= knee_) return p_ * std::pow(t, p_ - 1.0);
      return p_ * std::pow(knee_, p_ - q_) * std::pow(t, q_ - 1.0);
    case Kind::exp_type:
      return std::expm1(t);
    case Kind::table: {
      // Left-continuous: a(knot) is the limit from the left, which for a
      // continuous piecewise-linear density is the knot value itself.
      const auto it = std::lower_bound(knots_.begin(), knots_.end(), t);
      const auto i = static_cast<std::size_t>(it - knots_.begin());
      if (i == knots_.size()) return densities_.back();
      if (knots_[i] == t) return densities_[i];
      const double w = (t - knots_[i - 1]) / (knots_[i] - knots_[i - 1]);
      return densities_[i - 1] + w * (densities_[i] - densities_[i - 1]);
    }
  }
  return 0.0;
}

std::string YoungFunction::describe() const {
  switch (kind_) {
    case Kind::power:
      return fmt::format("power({})", p_);
    case Kind::capped_power:
      return fmt::format("capped_power({};{};{})", p_, q_, knee_);
    case Kind::exp_type:
      return "exp_type";
    case Kind::table:
      return fmt::format("table({})", knots_.size());
  }
  return "unknown";
}

bool YoungFunction::check_convex() const {
  if (value(0.0) != 0.0) return false;
  constexpr std::size_t kNodes = 2001;
  const double lo = std::log(1e-6);
  const double step = (std::log(1e6) - lo) / static_cast<double>(kNodes - 1);
  double prev_t = 0.0;
  double prev_a = 0.0;
  double prev_slope = 0.0;
  for (std::size_t i = 0; i < kNodes; ++i) {
    const double t = std::exp(lo + step * static_cast<double>(i));
    const double a = value(t);
    if (std::isinf(a)) break;
    if (!(a >= prev_a)) return false;
    const double slope = (a - prev_a) / (t - prev_t);
    if (slope < prev_slope * (1.0 - 1e-9)) return false;
    prev_t = t;
    prev_a = a;
    prev_slope = slope;
  }
  return true;
}

namespace {

double orlicz_search(const SampledField& field, double sigma, const YoungFunction& a) {
  const double peak = field.max_abs();
  if (peak == 0.0) return 0.0;
  std::vector<double> log_mag;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double m = std::abs(field[i]);
    if (m > 0.0) log_mag.push_back(std::log(m));
  }
  const double cell = field.domain().cell_volume();
  auto rho = [&](double mu) {
    double sum = 0.0;
    for (double lm : log_mag) sum += a.value(std::exp(sigma * (lm - mu)));
    return cell * sum;
  };
  return detail::luxemburg_search(rho, std::log(peak * 1e-6), std::log(peak * 1e6));
}

}  // namespace

double orlicz_luxemburg_norm(const SampledField& field, const YoungFunction& a) {
  return orlicz_search(field, 1.0, a);
}

double rescaled_orlicz_norm(const SampledField& field, const YoungFunction& a, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument(fmt::format("rescaled_orlicz_norm: sigma = {} <= 0", sigma));
  return orlicz_search(field, sigma, a);
}

std::optional<double> nabla2_constant(const YoungFunction& a, const Nabla2Scan& scan) {
  if (!(scan.r_min > 0.0 && scan.r_min <= 1e-6 && scan.r_max >= 1e6 && scan.r_nodes >= 1000)) {
    throw InvalidArgument("nabla2_constant: scan must cover [1e-6, 1e6] with at least 1000 nodes");
  }
  if (scan.steps_per_octave < 1 || !(scan.c_max > 1.0)) {
    throw InvalidArgument("nabla2_constant: invalid C scan");
  }
  std::vector<double> r(scan.r_nodes);
  std::vector<double> ar(scan.r_nodes);
  const double lo = std::log(scan.r_min);
  const double step = (std::log(scan.r_max) - lo) / static_cast<double>(scan.r_nodes - 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = std::exp(lo + step * static_cast<double>(i));
    ar[i] = a.value(r[i]);
  }
  std::size_t last_fail = 0;
  for (long i = 1;; ++i) {
    const double c = std::exp2(static_cast<double>(i) / scan.steps_per_octave);
    if (c > scan.c_max) return std::nullopt;
    auto holds = [&](std::size_t k) { return ar[k] <= a.value(c * r[k]) / (2.0 * c); };
    if (!holds(last_fail)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (!holds(k)) {
        last_fail = k;
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
}

}  // namespace fracineq
