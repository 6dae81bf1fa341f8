#include <cmath>

#include <gtest/gtest.h>

#include "fracineq/error.hpp"
#include "fracineq/field_ops.hpp"
#include "fracineq/maximal.hpp"
#include "support.hpp"

using namespace fracineq;
using fracineq::check::for_all;
using fracineq::check::Gen;

namespace {

// Direct evaluation: for every point and every dyadic radius R (in cells),
// average |f| over all cells at torus offset d with |d|^2 < R^2.
std::vector<double> brute_force_maximal(const SampledField& f) {
  const auto& d = f.domain();
  const long n = static_cast<long>(d.points());
  const auto mag = f.abs();
  std::vector<double> out(mag);
  auto at = [&](long i0, long i1) {
    i0 = ((i0 % n) + n) % n;
    i1 = ((i1 % n) + n) % n;
    return d.dimension() == 1 ? mag[static_cast<std::size_t>(i0)] : mag[static_cast<std::size_t>(i0 * n + i1)];
  };
  for (std::size_t flat = 0; flat < mag.size(); ++flat) {
    const auto idx = d.unflatten(flat);
    for (long r = n / 2; r >= 1; r /= 2) {
      double sum = 0.0;
      long count = 0;
      const long reach = d.dimension() == 1 ? 0 : r;
      for (long a = -r; a <= r; ++a) {
        for (long b = -reach; b <= reach; ++b) {
          if (a * a + b * b >= r * r) continue;
          sum += at(static_cast<long>(idx[0]) + a, static_cast<long>(idx[1]) + b);
          ++count;
        }
      }
      out[flat] = std::max(out[flat], sum / static_cast<double>(count));
    }
  }
  return out;
}

}  // namespace

TEST(BallFamily, DyadicRadiiAndCounts) {
  const DomainSpec d1(1, 16.0, 64);
  const auto b1 = BallFamily::dyadic(d1);
  EXPECT_EQ(b1.radii_in_cells(), (std::vector<long>{32, 16, 8, 4, 2, 1}));
  EXPECT_EQ(b1.cell_count(0), 63u);
  EXPECT_EQ(b1.cell_count(5), 1u);
  const auto b2 = BallFamily::dyadic(DomainSpec(2, 16.0, 16));
  // Lattice points strictly inside the circle of radius 2: 9 of them.
  EXPECT_EQ(b2.cell_count(2), 9u);
  EXPECT_EQ(BallFamily::row_half_width(2, 1), 1);
  EXPECT_EQ(BallFamily::row_half_width(2, 2), -1);
}

TEST(HardyLittlewood, MatchesBruteForce) {
  for_all(201, 6, [](Gen& g) {
    const int n = g.integer(1, 2);
    const DomainSpec d(n, 16.0, n == 1 ? 64 : 16);
    const auto f = g.field(d, 4);
    const auto m = hl_maximal(f);
    const auto expected = brute_force_maximal(f);
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(m[i].real(), expected[i], 1e-12 * expected[i]);
  });
}

TEST(HardyLittlewood, DominatesAndFixesConstants) {
  for_all(211, 10, [](Gen& g) {
    const DomainSpec d(g.integer(1, 2), 16.0, 32);
    const auto f = g.field(d, 6);
    const auto m = hl_maximal(f);
    const auto mag = f.abs();
    for (std::size_t i = 0; i < mag.size(); ++i) EXPECT_GE(m[i].real(), mag[i]);
  });
  const DomainSpec d(2, 16.0, 32);
  const auto c = hl_maximal(SampledField::constant(d, -2.5));
  for (const auto& v : c.values()) EXPECT_NEAR(v.real(), 2.5, 1e-13);
}

TEST(HardyLittlewood, MonotoneInModulus) {
  for_all(221, 10, [](Gen& g) {
    const int n = g.integer(1, 2);
    const DomainSpec d(n, 16.0, 32);
    const auto f = g.field(d, 6);
    std::vector<cplx> bigger(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) bigger[i] = f[i] * g.uniform(1.0, 2.0);
    const auto mf = hl_maximal(f);
    const auto mg = hl_maximal(SampledField(d, std::move(bigger)));
    // 1-D sums are exact in order; 2-D prefix sums round in long double.
    const double slack = n == 1 ? 0.0 : 1e-12;
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_LE(mf[i].real(), mg[i].real() * (1.0 + slack));
  });
}

TEST(PhiMaximal, ConstantFieldGivesModulus) {
  const DomainSpec d(1, 16.0, 64);
  const auto c = SampledField::constant(d, 3.0);
  for (const auto& profile : {SmoothProfile::heat(), SmoothProfile::littlewood_paley()}) {
    const auto m = phi_maximal(c, profile, default_phi_grid(d));
    for (const auto& v : m.values()) EXPECT_NEAR(v.real(), 3.0, 1e-13);
  }
  EXPECT_THROW(phi_maximal(c, SmoothProfile::heat(), LogGridSpec{}), InvalidArgument);
}

TEST(PhiMaximal, HeatDominatedByHardyLittlewood) {
  for_all(231, 5, [](Gen& g) {
    const DomainSpec d(1, 16.0, 128);
    const auto f = g.field(d, 8);
    const auto mphi = phi_maximal(f, SmoothProfile::heat(), LogGridSpec{1e-8, 16.0, 160});
    const auto m = hl_maximal(f);
    const auto mag = f.abs();
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_GE(mphi[i].real(), mag[i] * (1.0 - 1e-2));
      EXPECT_LE(mphi[i].real(), 4.0 * m[i].real());
    }
  });
}

TEST(SmoothProfile, Symbols) {
  EXPECT_NEAR(SmoothProfile::heat().symbol(2.0), std::exp(-2.0), 1e-16);
  EXPECT_NEAR(SmoothProfile::heat_derivative(1.0).symbol(4.0), 2.0 * std::exp(-4.0), 1e-16);
  EXPECT_EQ(SmoothProfile::littlewood_paley().symbol(0.0), 1.0);
  EXPECT_EQ(SmoothProfile::littlewood_paley().symbol(1.0), 0.0);
  EXPECT_FALSE(SmoothProfile::heat_derivative(2.0).describe().empty());
}

TEST(WeakLorentz, StepFunctionByHand) {
  const DomainSpec d(1, 1.0, 8);
  const std::vector<double> mags{8, 4, 2, 1, 0, 0, 0, 0};
  // v (count(>= v) / 8)^{1/r}: r = 1 -> max(1, 1, 0.75, 0.5).
  EXPECT_NEAR(weak_lorentz_norm(d, mags, 1.0), 1.0, 1e-15);
  // r = 2 -> max(8 sqrt(1/8), 4 sqrt(2/8), 2 sqrt(3/8), sqrt(4/8)).
  EXPECT_NEAR(weak_lorentz_norm(d, mags, 2.0), 8.0 * std::sqrt(0.125), 1e-14);
  EXPECT_EQ(weak_lorentz_norm(d, std::vector<double>(8, 0.0), 2.0), 0.0);
  EXPECT_THROW(weak_lorentz_norm(d, mags, 0.5), InvalidArgument);
}

TEST(WeakLorentz, BoundedByStrongNorm) {
  for_all(241, 10, [](Gen& g) {
    const DomainSpec d(1, 16.0, 64);
    const auto f = g.field(d, 6);
    for (double r : {1.0, 2.0, 3.5}) EXPECT_LE(weak_lorentz_norm(f, r), lp_norm(f, r) * (1.0 + 1e-14));
  });
}

TEST(RieszKernelGrid, PuncturedCentre) {
  const DomainSpec d(1, 16.0, 16);
  const auto k = riesz_kernel_on_grid(d, 0.5);
  EXPECT_EQ(k[8], cplx(0.0));
  EXPECT_NEAR(k[12].real(), std::pow(4.0, -0.5), 1e-15);
  EXPECT_THROW(riesz_kernel_on_grid(d, 1.0), InvalidArgument);
}
