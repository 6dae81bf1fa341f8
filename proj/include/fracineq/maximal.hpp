#pragma once

#include <span>
#include <string>
#include <vector>

#include "fracineq/field.hpp"
#include "fracineq/spectral.hpp"

namespace fracineq {

/// Dyadic radii r_j = h 2^j, from L/2 down to h, used as open balls
/// |x - c| < r_j in the torus metric. The smallest ball holds only its center cell.
class BallFamily {
 public:
  static BallFamily dyadic(const DomainSpec& domain);

  const DomainSpec& domain() const noexcept { return domain_; }
  /// Radii in units of h, decreasing (N/2, N/4, ..., 1).
  const std::vector<long>& radii_in_cells() const noexcept { return radii_; }
  /// Number of cells in the ball of radius radii_in_cells()[j].
  std::size_t cell_count(std::size_t j) const;
  /// Half-width (in cells) of the ball's row at vertical offset dy (2-D), or of
  /// the segment itself (1-D, dy = 0). -1 when the row is empty.
  static long row_half_width(long radius_cells, long dy);

 private:
  BallFamily(DomainSpec domain, std::vector<long> radii) : domain_(domain), radii_(std::move(radii)) {}
  DomainSpec domain_;
  std::vector<long> radii_;
};

/// Sup over the ball family of cell-count-normalized averages of |f| around
/// each grid point. Real-valued output with M(f) >= |f| pointwise.
SampledField hl_maximal(const SampledField& field, const BallFamily& balls);
SampledField hl_maximal(const SampledField& field);

/// Smooth approximate-identity profiles phi for the phi-maximal function,
/// given by their Fourier symbols at scale t: phi_t-hat(xi) = m(t |xi|^2).
struct SmoothProfile {
  enum class Kind {
    heat,             ///< exp(-t |xi|^2): the Gaussian h_t
    heat_derivative,  ///< (t |xi|^2)^{order/2} exp(-t |xi|^2): t^{order/2} (-Delta)^{order/2} h_t
    littlewood_paley  ///< phi-hat(sqrt(t) |xi|) with the Littlewood-Paley low-pass profile
  };
  Kind kind = Kind::heat;
  double order = 0.0;

  static SmoothProfile heat() { return {Kind::heat, 0.0}; }
  static SmoothProfile heat_derivative(double order) { return {Kind::heat_derivative, order}; }
  static SmoothProfile littlewood_paley() { return {Kind::littlewood_paley, 0.0}; }

  double symbol(double t_xi_squared) const;
  std::string describe() const;
};

/// M_phi(f)(x) = max over the t-grid of |f * phi_t (x)|, phi_t applied spectrally.
/// Throws if the t-grid is empty.
SampledField phi_maximal(const SampledField& field, const SmoothProfile& phi,
                         const LogGridSpec& t_grid);

/// Default t-grid for phi_maximal: [h^2, (L/2)^2], 128 log-spaced nodes.
LogGridSpec default_phi_grid(const DomainSpec& domain);

/// sup_{lambda > 0} lambda d_f(lambda)^{1/r}, d_f(lambda) the Riemann-sum measure
/// of {|f| > lambda}; evaluated at the distinct values of |f|. Requires r >= 1.
double weak_lorentz_norm(const SampledField& field, double r);
double weak_lorentz_norm(const DomainSpec& domain, std::span<const double> magnitudes, double r);

/// K_s(x) = |x|^{s-n} sampled on the grid with the x = 0 cell set to zero
/// (punctured grid), distances measured from the cube center.
SampledField riesz_kernel_on_grid(const DomainSpec& domain, double s);

}  // namespace fracineq
