#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fracineq/error.hpp"
#include "fracineq/fft.hpp"
#include "fracineq/field_ops.hpp"
#include "support.hpp"

using namespace fracineq;
using fracineq::check::for_all;
using fracineq::check::Gen;

TEST(DomainSpec, RejectsBadShapes) {
  EXPECT_THROW(DomainSpec(3, 1.0, 16), InvalidArgument);
  EXPECT_THROW(DomainSpec(1, 0.0, 16), InvalidArgument);
  EXPECT_THROW(DomainSpec(1, 1.0, 24), InvalidArgument);
  EXPECT_THROW(DomainSpec(1, 1.0, 4), InvalidArgument);
}

TEST(DomainSpec, Geometry) {
  const DomainSpec d(2, 8.0, 16);
  EXPECT_EQ(d.size(), 256u);
  EXPECT_DOUBLE_EQ(d.spacing(), 0.5);
  EXPECT_DOUBLE_EQ(d.cell_volume(), 0.25);
  EXPECT_DOUBLE_EQ(d.measure(), 64.0);
  EXPECT_DOUBLE_EQ(d.coord(0), -4.0);
  const auto p = d.point(3 * 16 + 5);
  EXPECT_DOUBLE_EQ(p[0], -2.5);
  EXPECT_DOUBLE_EQ(p[1], -1.5);
  EXPECT_EQ(d.refined().points(), 32u);
}

TEST(Wavenumber, FftOrder) {
  EXPECT_EQ(wavenumber(0, 8), 0);
  EXPECT_EQ(wavenumber(3, 8), 3);
  EXPECT_EQ(wavenumber(4, 8), -4);
  EXPECT_EQ(wavenumber(7, 8), -1);
}

TEST(SampledField, MeanProjection) {
  const DomainSpec d(1, 16.0, 64);
  Gen g(11);
  const auto f = g.field(d, 6);
  const auto c = f.without_mean();
  EXPECT_TRUE(c.mean_zero());
  EXPECT_LT(std::abs(c.mean()), 1e-13 * f.max_abs());
  EXPECT_THROW(SampledField(d, std::vector<cplx>(3)), InvalidArgument);
}

TEST(Fft, RoundTripAndParseval) {
  for_all(21, 20, [](Gen& g) {
    const DomainSpec d(g.integer(1, 2), 16.0, 64);
    const auto f = g.field(d, 8);
    const auto coeffs = dft(f);
    EXPECT_LT(check::rel_diff(idft(coeffs), f), 1e-14);
    double lhs = 0.0, rhs = 0.0;
    for (const auto& v : f.values()) lhs += std::norm(v);
    for (const auto& v : coeffs.values) rhs += std::norm(v);
    EXPECT_NEAR(lhs, rhs / static_cast<double>(f.size()), 1e-10 * lhs);
  });
}

TEST(Fft, SingleModeHasOneCoefficient) {
  const DomainSpec d(2, 16.0, 32);
  const auto f = sample(d, GeneratorSpec::fourier_mode(3, -2));
  const auto c = dft(f);
  const FrequencyGrid grid(d);
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const auto k = grid.multi_index(i);
    const double expected = (k[0] == 3 && k[1] == -2) ? static_cast<double>(d.size()) : 0.0;
    EXPECT_NEAR(std::abs(c.values[i]), expected, 1e-9);
  }
}

TEST(LpNorm, Examples) {
  const DomainSpec unit(1, 1.0, 32);
  EXPECT_NEAR(lp_norm(SampledField::constant(unit, 2.0), 3.0), 2.0, 1e-15);
  EXPECT_NEAR(lp_norm(SampledField::constant(unit, -5.0), kInfinity), 5.0, 0.0);
  EXPECT_EQ(lp_norm(SampledField::zeros(unit), 2.0), 0.0);
  EXPECT_THROW(lp_norm(SampledField::zeros(unit), 0.5), InvalidArgument);
  // |e^{i k x}| = 1 on a cube of side 16: ||.||_p = 16^{1/p}.
  const DomainSpec d(1, 16.0, 64);
  EXPECT_NEAR(lp_norm(sample(d, GeneratorSpec::fourier_mode(5)), 4.0), 2.0, 1e-14);
}

TEST(Dilate, ZeroExtensionScalesL2Exactly) {
  // For q = 2 and small bands the subsampled Riemann sum is exact.
  for_all(31, 10, [](Gen& g) {
    const DomainSpec d(g.integer(1, 2), 16.0, 128);
    const auto f = g.band_limited(d, 3);
    const double base = lp_norm(f, 2.0);
    for (long lambda : {2L, 4L, 8L}) {
      const double expected = base * std::pow(static_cast<double>(lambda), -d.dimension() / 2.0);
      EXPECT_NEAR(lp_norm(dilate(f, lambda), 2.0), expected, 1e-12 * expected);
    }
  });
}

TEST(Dilate, PeriodicPreservesNormsAndMovesModes) {
  const DomainSpec d(1, 16.0, 64);
  const auto f = sample(d, GeneratorSpec::fourier_mode(3));
  const auto f2 = dilate(f, 2, Extension::periodic);
  EXPECT_LT(check::rel_diff(f2, sample(d, GeneratorSpec::fourier_mode(6))), 1e-12);
  // The stride-4 subsample integrates trig polynomials of degree < 16 exactly.
  Gen g(41);
  const auto h = g.field(d, 7);
  EXPECT_NEAR(lp_norm(dilate(h, 4, Extension::periodic), 2.0), lp_norm(h, 2.0), 1e-12 * lp_norm(h, 2.0));
  const auto h3 = g.field(d, 3);
  EXPECT_NEAR(lp_norm(dilate(h3, 4, Extension::periodic), 4.0), lp_norm(h3, 4.0), 1e-12 * lp_norm(h3, 4.0));
}

TEST(Dilate, IdentityAndErrors) {
  const DomainSpec d(2, 16.0, 16);
  Gen g(51);
  const auto f = g.field(d, 3);
  EXPECT_EQ(check::rel_diff(dilate(f, 1), f), 0.0);
  EXPECT_THROW(dilate(f, 3), InvalidArgument);
  EXPECT_THROW(dilate(f, 0), InvalidArgument);
}
