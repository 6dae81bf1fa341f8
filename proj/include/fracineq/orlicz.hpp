#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracineq/field.hpp"

namespace fracineq {

/// A(t) = int_0^t a, with a left-continuous, non-decreasing and a(0) = 0.
class YoungFunction {
 public:
  /// A(t) = t^p, p >= 1.
  static YoungFunction power(double p);
  /// A(t) = t^p up to the knee, then grows like t^q: density p t^{p-1} below the
  /// knee and p knee^{p-q} t^{q-1} above it. Requires 1 < q <= p, knee > 0.
  static YoungFunction capped_power(double p, double q, double knee);
  /// A(t) = e^t - 1 - t.
  static YoungFunction exp_type();
  /// Piecewise-linear density through (knots[i], densities[i]), knots[0] = 0,
  /// densities[0] = 0, constant past the last knot. A is integrated exactly.
  /// Throws unless the knots increase strictly, the densities do not decrease,
  /// and the last density is positive.
  static YoungFunction table(std::vector<double> knots, std::vector<double> densities);

  double operator()(double t) const { return value(t); }
  double value(double t) const;
  double density(double t) const;
  std::string describe() const;

  /// Checks A(0) = 0, A non-decreasing and midpoint-convex on a log grid over
  /// [1e-6, 1e6]. Every factory already runs this.
  bool check_convex() const;

 private:
  enum class Kind { power, capped_power, exp_type, table };
  YoungFunction(Kind kind) : kind_(kind) {}
  void validate() const;

  Kind kind_;
  double p_ = 1.0;
  double q_ = 1.0;
  double knee_ = 1.0;
  std::vector<double> knots_;
  std::vector<double> densities_;
  std::vector<double> cumulative_;
};

/// inf{lambda > 0 : h^n sum A(|f| / lambda) <= 1}, bisection in log lambda to
/// relative 1e-12; the result satisfies the constraint. Zero field gives 0.
double orlicz_luxemburg_norm(const SampledField& field, const YoungFunction& a);

/// Luxemburg norm for A_sigma(t) = A(t^sigma). Requires sigma > 0.
double rescaled_orlicz_norm(const SampledField& field, const YoungFunction& a, double sigma);

struct Nabla2Scan {
  double r_min = 1e-6;
  double r_max = 1e6;
  std::size_t r_nodes = 1001;
  /// C runs over 2^{i / steps_per_octave} for i = 1, 2, ... up to c_max.
  int steps_per_octave = 1024;
  double c_max = 1024.0;
};

/// Smallest scanned C > 1 with A(r) <= A(C r) / (2 C) at every r of the scan,
/// or nothing if no C up to c_max works. Throws if the scan grid does not cover
/// [1e-6, 1e6] with at least 1000 nodes.
std::optional<double> nabla2_constant(const YoungFunction& a, const Nabla2Scan& scan = {});

}  // namespace fracineq
