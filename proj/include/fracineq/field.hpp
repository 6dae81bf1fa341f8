#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fracineq {

using cplx = std::complex<double>;

/// Uniform periodic grid on the cube [-L/2, L/2)^n, n in {1, 2}.
///
/// Flat storage is row-major: for n = 2 the flat index of (i0, i1) is
/// i0 * N + i1, with axis 1 contiguous.
class DomainSpec {
 public:
  DomainSpec(int dimension, double period, std::size_t points_per_axis);

  int dimension() const noexcept { return dimension_; }
  double period() const noexcept { return period_; }
  std::size_t points() const noexcept { return points_; }

  double spacing() const noexcept { return period_ / static_cast<double>(points_); }
  std::size_t size() const noexcept;
  double cell_volume() const noexcept;
  double measure() const noexcept;

  /// Coordinate of grid index m along any axis: -L/2 + m h.
  double coord(std::size_t m) const noexcept {
    return -0.5 * period_ + static_cast<double>(m) * spacing();
  }
  std::array<double, 2> point(std::size_t flat) const noexcept;
  std::array<std::size_t, 2> unflatten(std::size_t flat) const noexcept;

  /// Same cube with twice the points per axis.
  DomainSpec refined() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

 private:
  int dimension_;
  double period_;
  std::size_t points_;
};

/// Signed wavenumber of FFT index i on an N-point axis, in [-N/2, N/2).
inline long wavenumber(std::size_t i, std::size_t n) noexcept {
  const auto k = static_cast<long>(i);
  const auto half = static_cast<long>(n / 2);
  return k < half ? k : k - static_cast<long>(n);
}

/// Frequencies xi_k = 2 pi k / L of a domain, stored as the integer |k|^2 per
/// flat FFT index. |xi|^2 = (2 pi / L)^2 |k|^2, and |xi| = 0 only at k = 0.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(const DomainSpec& domain);

  const DomainSpec& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return k2_.size(); }
  long k_squared(std::size_t flat) const noexcept { return k2_[flat]; }
  double xi_squared(std::size_t flat) const noexcept {
    return base2_ * static_cast<double>(k2_[flat]);
  }
  double xi_norm(std::size_t flat) const noexcept;
  /// (2 pi / L)^2.
  double base_squared() const noexcept { return base2_; }
  /// Largest |k|^2 present on the grid.
  long max_k_squared() const noexcept { return max_k2_; }
  /// Signed multi-index of a flat FFT index (second entry 0 for n = 1).
  std::array<long, 2> multi_index(std::size_t flat) const noexcept;

 private:
  DomainSpec domain_;
  double base2_;
  long max_k2_ = 0;
  std::vector<long> k2_;
};

/// Values of a function on the grid of a DomainSpec.
class SampledField {
 public:
  SampledField(DomainSpec domain, std::vector<cplx> values);

  static SampledField zeros(const DomainSpec& domain);
  static SampledField constant(const DomainSpec& domain, cplx value);
  static SampledField from_real(const DomainSpec& domain, std::span<const double> values);

  const DomainSpec& domain() const noexcept { return domain_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }

  /// True when |mean| <= 1e-12 max|f|; computed once at construction.
  bool mean_zero() const noexcept { return mean_zero_; }
  cplx mean() const noexcept;
  double max_abs() const noexcept;

  SampledField without_mean() const;
  std::vector<double> abs() const;
  std::vector<double> real() const;

  SampledField operator+(const SampledField& other) const;
  SampledField operator-(const SampledField& other) const;
  SampledField scaled(cplx factor) const;

 private:
  DomainSpec domain_;
  std::vector<cplx> values_;
  bool mean_zero_ = false;
};

void require_same_domain(const DomainSpec& a, const DomainSpec& b, const char* what);

}  // namespace fracineq
