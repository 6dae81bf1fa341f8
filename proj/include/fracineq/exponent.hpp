#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fracineq/field.hpp"

namespace fracineq {

/// p(x) = p.
struct ConstantExponent {
  double p = 2.0;
};

/// p(x) = mean + amplitude sin(2 pi mode x_0 / L). No limit at infinity.
struct SinusoidExponent {
  double mean = 3.0;
  double amplitude = 1.0;
  int mode = 1;
};

/// p(x) = left for x_0 < 0, right for x_0 >= 0. No limit at infinity.
struct TwoPhaseExponent {
  double left = 2.0;
  double right = 4.0;
};

/// p(x) = base + (peak - base) exp(-|x|^2 / width^2); p_infty = base.
struct BumpExponent {
  double base = 2.0;
  double peak = 3.0;
  double width = 1.0;
};

/// Piecewise constant along axis 0: the cube is cut into values.size() equal
/// slabs and slab i carries values[i]. p_infty as declared.
struct TableExponent {
  std::vector<double> values;
  std::optional<double> p_infty;
};

using ExponentSpec =
    std::variant<ConstantExponent, SinusoidExponent, TwoPhaseExponent, BumpExponent, TableExponent>;

std::string describe(const ExponentSpec& spec);

/// A sampled exponent p(x_m) with 1 < p^- <= p^+ < infinity.
class VariableExponent {
 public:
  /// Throws unless every value is finite and 1 < p^- <= p^+ < infinity, or if the
  /// value count does not match the domain.
  VariableExponent(DomainSpec domain, std::vector<double> values,
                   std::optional<double> p_infty = std::nullopt, std::string descriptor = "table");

  static VariableExponent constant(const DomainSpec& domain, double p);
  static VariableExponent sample(const DomainSpec& domain, const ExponentSpec& spec);

  const DomainSpec& domain() const noexcept { return domain_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double p_minus() const noexcept { return p_minus_; }
  double p_plus() const noexcept { return p_plus_; }
  std::optional<double> p_infty() const noexcept { return p_infty_; }
  bool is_constant() const noexcept { return p_minus_ == p_plus_; }
  const std::string& descriptor() const noexcept { return descriptor_; }

  /// x -> factor * p(x) (and p_infty scaled alike). Requires factor * p^- > 1.
  VariableExponent scaled(double factor) const;

 private:
  DomainSpec domain_;
  std::vector<double> values_;
  std::optional<double> p_infty_;
  std::string descriptor_;
  double p_minus_ = 0.0;
  double p_plus_ = 0.0;
};

}  // namespace fracineq
