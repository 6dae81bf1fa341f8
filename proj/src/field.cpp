#include "fracineq/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracineq/error.hpp"

namespace fracineq {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

DomainSpec::DomainSpec(int dimension, double period, std::size_t points_per_axis)
    : dimension_(dimension), period_(period), points_(points_per_axis) {
  if (dimension != 1 && dimension != 2) {
    throw InvalidArgument("DomainSpec: dimension must be 1 or 2, got " + std::to_string(dimension));
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw InvalidArgument("DomainSpec: period must be positive and finite");
  }
  if (points_per_axis < 8 || !is_power_of_two(points_per_axis)) {
    throw InvalidArgument("DomainSpec: points per axis must be a power of two >= 8, got " +
                          std::to_string(points_per_axis));
  }
}

std::size_t DomainSpec::size() const noexcept {
  return dimension_ == 1 ? points_ : points_ * points_;
}

double DomainSpec::cell_volume() const noexcept {
  const double h = spacing();
  return dimension_ == 1 ? h : h * h;
}

double DomainSpec::measure() const noexcept {
  return dimension_ == 1 ? period_ : period_ * period_;
}

std::array<std::size_t, 2> DomainSpec::unflatten(std::size_t flat) const noexcept {
  if (dimension_ == 1) return {flat, 0};
  return {flat / points_, flat % points_};
}

std::array<double, 2> DomainSpec::point(std::size_t flat) const noexcept {
  const auto idx = unflatten(flat);
  if (dimension_ == 1) return {coord(idx[0]), 0.0};
  return {coord(idx[0]), coord(idx[1])};
}

DomainSpec DomainSpec::refined() const { return DomainSpec(dimension_, period_, 2 * points_); }

FrequencyGrid::FrequencyGrid(const DomainSpec& domain)
    : domain_(domain),
      base2_(std::pow(2.0 * std::numbers::pi / domain.period(), 2)),
      k2_(domain.size()) {
  for (std::size_t flat = 0; flat < k2_.size(); ++flat) {
    const auto k = multi_index(flat);
    k2_[flat] = k[0] * k[0] + k[1] * k[1];
    max_k2_ = std::max(max_k2_, k2_[flat]);
  }
}

std::array<long, 2> FrequencyGrid::multi_index(std::size_t flat) const noexcept {
  const std::size_t n = domain_.points();
  if (domain_.dimension() == 1) return {wavenumber(flat, n), 0};
  return {wavenumber(flat / n, n), wavenumber(flat % n, n)};
}

double FrequencyGrid::xi_norm(std::size_t flat) const noexcept {
  return std::sqrt(xi_squared(flat));
}

SampledField::SampledField(DomainSpec domain, std::vector<cplx> values)
    : domain_(domain), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw InvalidArgument("SampledField: expected " + std::to_string(domain_.size()) +
                          " values, got " + std::to_string(values_.size()));
  }
  const double peak = max_abs();
  mean_zero_ = std::abs(mean()) <= 1e-12 * peak;
}

SampledField SampledField::zeros(const DomainSpec& domain) {
  return SampledField(domain, std::vector<cplx>(domain.size()));
}

SampledField SampledField::constant(const DomainSpec& domain, cplx value) {
  return SampledField(domain, std::vector<cplx>(domain.size(), value));
}

SampledField SampledField::from_real(const DomainSpec& domain, std::span<const double> values) {
  return SampledField(domain, std::vector<cplx>(values.begin(), values.end()));
}

cplx SampledField::mean() const noexcept {
  cplx sum = 0.0;
  for (const auto& v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

double SampledField::max_abs() const noexcept {
  double peak = 0.0;
  for (const auto& v : values_) peak = std::max(peak, std::abs(v));
  return peak;
}

SampledField SampledField::without_mean() const {
  const cplx m = mean();
  std::vector<cplx> out(values_);
  for (auto& v : out) v -= m;
  return SampledField(domain_, std::move(out));
}

std::vector<double> SampledField::abs() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](const cplx& v) { return std::abs(v); });
  return out;
}

std::vector<double> SampledField::real() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](const cplx& v) { return v.real(); });
  return out;
}

SampledField SampledField::operator+(const SampledField& other) const {
  require_same_domain(domain_, other.domain_, "SampledField::operator+");
  std::vector<cplx> out(values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.values_[i];
  return SampledField(domain_, std::move(out));
}

SampledField SampledField::operator-(const SampledField& other) const {
  require_same_domain(domain_, other.domain_, "SampledField::operator-");
  std::vector<cplx> out(values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.values_[i];
  return SampledField(domain_, std::move(out));
}

SampledField SampledField::scaled(cplx factor) const {
  std::vector<cplx> out(values_);
  for (auto& v : out) v *= factor;
  return SampledField(domain_, std::move(out));
}

void require_same_domain(const DomainSpec& a, const DomainSpec& b, const char* what) {
  if (!(a == b)) throw InvalidArgument(std::string(what) + ": grid mismatch");
}

}  // namespace fracineq
