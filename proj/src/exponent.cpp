#include "fracineq/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fracineq/error.hpp"

namespace fracineq {

namespace {

struct Describe {
  std::string operator()(const ConstantExponent& c) const { return fmt::format("const({})", c.p); }
  std::string operator()(const SinusoidExponent& s) const {
    return fmt::format("sin({};{};{})", s.mean, s.amplitude, s.mode);
  }
  std::string operator()(const TwoPhaseExponent& t) const {
    return fmt::format("two_phase({};{})", t.left, t.right);
  }
  std::string operator()(const BumpExponent& b) const {
    return fmt::format("bump({};{};{})", b.base, b.peak, b.width);
  }
  std::string operator()(const TableExponent& t) const {
    return fmt::format("table({})", fmt::join(t.values, ";"));
  }
};

}  // namespace

std::string describe(const ExponentSpec& spec) { return std::visit(Describe{}, spec); }

VariableExponent::VariableExponent(DomainSpec domain, std::vector<double> values,
                                   std::optional<double> p_infty, std::string descriptor)
    : domain_(domain), values_(std::move(values)), p_infty_(p_infty), descriptor_(std::move(descriptor)) {
  if (values_.size() != domain_.size()) {
    throw InvalidArgument(fmt::format("VariableExponent: {} values for a grid of {} points",
                                      values_.size(), domain_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("VariableExponent: non-finite exponent value");
  }
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  p_minus_ = *lo;
  p_plus_ = *hi;
  if (!(p_minus_ > 1.0)) {
    throw GateError("variable-exponent", fmt::format("1 < p^- (got p^- = {})", p_minus_));
  }
  if (p_infty_ && !(*p_infty_ > 1.0 && std::isfinite(*p_infty_))) {
    throw GateError("variable-exponent", fmt::format("1 < p_infty < inf (got {})", *p_infty_));
  }
}

VariableExponent VariableExponent::constant(const DomainSpec& domain, double p) {
  return sample(domain, ConstantExponent{p});
}

VariableExponent VariableExponent::sample(const DomainSpec& domain, const ExponentSpec& spec) {
  std::vector<double> v(domain.size());
  std::optional<double> p_infty;
  const double pi = std::numbers::pi;
  const double l = domain.period();
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    const auto x = domain.point(flat);
    const double r2 = x[0] * x[0] + (domain.dimension() == 2 ? x[1] * x[1] : 0.0);
    v[flat] = std::visit(
        [&](const auto& s) -> double {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ConstantExponent>) {
            return s.p;
          } else if constexpr (std::is_same_v<T, SinusoidExponent>) {
            return s.mean + s.amplitude * std::sin(2.0 * pi * s.mode * x[0] / l);
          } else if constexpr (std::is_same_v<T, TwoPhaseExponent>) {
            return x[0] < 0.0 ? s.left : s.right;
          } else if constexpr (std::is_same_v<T, BumpExponent>) {
            return s.base + (s.peak - s.base) * std::exp(-r2 / (s.width * s.width));
          } else {
            if (s.values.empty()) throw InvalidArgument("TableExponent: no values");
            const auto cells = s.values.size();
            const auto idx = domain.unflatten(flat)[0] * cells / domain.points();
            return s.values[idx];
          }
        },
        spec);
  }
  if (const auto* c = std::get_if<ConstantExponent>(&spec)) p_infty = c->p;
  if (const auto* b = std::get_if<BumpExponent>(&spec)) {
    if (!(b->width > 0.0)) throw InvalidArgument("BumpExponent: width must be positive");
    p_infty = b->base;
  }
  if (const auto* t = std::get_if<TableExponent>(&spec)) p_infty = t->p_infty;
  return VariableExponent(domain, std::move(v), p_infty, describe(spec));
}

VariableExponent VariableExponent::scaled(double factor) const {
  if (!(factor > 0.0)) throw InvalidArgument("VariableExponent::scaled: factor must be positive");
  std::vector<double> v(values_);
  for (double& x : v) x *= factor;
  std::optional<double> inf = p_infty_;
  if (inf) *inf *= factor;
  return VariableExponent(domain_, std::move(v), inf, fmt::format("{}*{}", descriptor_, factor));
}

}  // namespace fracineq
