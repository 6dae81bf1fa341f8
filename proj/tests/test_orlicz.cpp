#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fracineq/error.hpp"
#include "fracineq/field_ops.hpp"
#include "fracineq/orlicz.hpp"
#include "support.hpp"

using namespace fracineq;
using fracineq::check::for_all;
using fracineq::check::Gen;
using fracineq::check::rel_diff;

TEST(YoungFunction, PowerAndCappedPower) {
  const auto a = YoungFunction::power(3.0);
  EXPECT_DOUBLE_EQ(a(2.0), 8.0);
  EXPECT_DOUBLE_EQ(a.density(2.0), 12.0);
  const auto c = YoungFunction::capped_power(3.0, 2.0, 0.5);
  EXPECT_DOUBLE_EQ(c(0.25), 0.015625);
  // Past the knee: knee^p + (p/q) knee^{p-q} (t^q - knee^q).
  EXPECT_NEAR(c(2.0), 0.125 + 1.5 * 0.5 * (4.0 - 0.25), 1e-15);
  EXPECT_NEAR(c(0.5 - 1e-12), c(0.5 + 1e-12), 1e-11);
  EXPECT_NEAR(c.density(2.0), 3.0 * 0.5 * 2.0, 1e-15);
  EXPECT_THROW(YoungFunction::power(0.5), InvalidArgument);
  EXPECT_THROW(YoungFunction::capped_power(2.0, 3.0, 1.0), InvalidArgument);
  EXPECT_EQ(a.describe(), "power(3)");
}

TEST(YoungFunction, ExpType) {
  const auto a = YoungFunction::exp_type();
  EXPECT_NEAR(a(1.0), std::numbers::e - 2.0, 1e-15);
  EXPECT_NEAR(a(1e-4), 0.5e-8 + 1e-12 / 6.0 + 1e-16 / 24.0, 1e-22);
  EXPECT_EQ(a(0.0), 0.0);
}

TEST(YoungFunction, TableIntegratesDensityExactly) {
  const auto a = YoungFunction::table({0.0, 1.0, 2.0}, {0.0, 1.0, 3.0});
  EXPECT_NEAR(a(1.0), 0.5, 1e-15);
  EXPECT_NEAR(a(2.0), 2.5, 1e-15);
  EXPECT_NEAR(a(3.0), 5.5, 1e-15);
  EXPECT_NEAR(a(1.5), 0.5 + 0.5 * (1.0 + 2.0) / 2.0, 1e-15);
  EXPECT_NEAR(a.density(1.5), 2.0, 1e-15);
  EXPECT_THROW(YoungFunction::table({0.0, 1.0}, {0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(YoungFunction::table({0.0, 2.0, 1.0}, {0.0, 1.0, 2.0}), InvalidArgument);
  EXPECT_THROW(YoungFunction::table({0.0, 1.0, 2.0}, {0.0, 2.0, 1.0}), InvalidArgument);
  EXPECT_THROW(YoungFunction::table({0.5, 1.0}, {0.0, 1.0}), InvalidArgument);
  EXPECT_TRUE(a.check_convex());
}

TEST(OrliczNorm, PowerReducesToLebesgue) {
  for_all(401, 30, [](Gen& g) {
    const DomainSpec d(g.integer(1, 2), 16.0, 32);
    const auto f = g.field(d, 6);
    for (double p : {1.5, 2.0, 4.0}) {
      EXPECT_LT(rel_diff(orlicz_luxemburg_norm(f, YoungFunction::power(p)), lp_norm(f, p)), 1e-10);
    }
  });
  const DomainSpec d(1, 1.0, 8);
  EXPECT_EQ(orlicz_luxemburg_norm(SampledField::zeros(d), YoungFunction::exp_type()), 0.0);
}

TEST(OrliczNorm, HomogeneityAndOrder) {
  const DomainSpec d(1, 16.0, 64);
  for (const auto& a : {YoungFunction::capped_power(3.0, 2.0, 0.5), YoungFunction::exp_type(),
                        YoungFunction::table({0.0, 1.0, 2.0}, {0.0, 1.0, 3.0})}) {
    for_all(411, 10, [&](Gen& g) {
      const auto f = g.field(d, 6);
      const double nf = orlicz_luxemburg_norm(f, a);
      EXPECT_LT(rel_diff(orlicz_luxemburg_norm(f.scaled(-3.0), a), 3.0 * nf), 1e-10);
      std::vector<cplx> bigger(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) bigger[i] = f[i] * g.uniform(1.0, 1.5);
      EXPECT_LE(nf, orlicz_luxemburg_norm(SampledField(d, std::move(bigger)), a) * (1.0 + 1e-12));
    });
  }
}

TEST(RescaledOrlicz, IdentityAndSpecialCases) {
  const DomainSpec d(1, 16.0, 64);
  Gen g(421);
  const auto f = g.field(d, 6);
  const auto cp = YoungFunction::capped_power(3.0, 2.0, 0.5);
  EXPECT_LT(rel_diff(rescaled_orlicz_norm(f, cp, 1.0), orlicz_luxemburg_norm(f, cp)), 1e-12);
  EXPECT_LT(rel_diff(rescaled_orlicz_norm(f, YoungFunction::power(2.0), 2.0), lp_norm(f, 4.0)), 1e-10);
  for_all(431, 20, [&](Gen& h) {
    const auto u = h.field(d, 6);
    const double sigma = h.uniform(0.5, 3.0);
    auto mags = u.abs();
    for (double& m : mags) m = std::pow(m, sigma);
    EXPECT_LT(rel_diff(std::pow(rescaled_orlicz_norm(u, cp, sigma), sigma),
                       orlicz_luxemburg_norm(SampledField::from_real(d, mags), cp)),
              1e-9);
  });
  EXPECT_THROW(rescaled_orlicz_norm(f, cp, 0.0), InvalidArgument);
}

TEST(Nabla2, PowersWithinScanResolution) {
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const auto c = nabla2_constant(YoungFunction::power(p));
    ASSERT_TRUE(c) << p;
    const double offset = std::log2(*c) - 1.0 / (p - 1.0);
    EXPECT_GE(offset, -1e-12);
    EXPECT_LE(offset, 1.0 / 1024.0 + 1e-12);
  }
}

TEST(Nabla2, LinearFunctionFailsAndCertificateHolds) {
  EXPECT_FALSE(nabla2_constant(YoungFunction::power(1.0)));
  const auto a = YoungFunction::capped_power(3.0, 2.0, 0.5);
  const auto c = nabla2_constant(a);
  ASSERT_TRUE(c);
  for (int i = 0; i <= 1000; ++i) {
    const double r = std::pow(10.0, -6.0 + 12.0 * i / 1000.0);
    EXPECT_LE(a(r), a(*c * r) / (2.0 * *c));
  }
  Nabla2Scan thin;
  thin.r_nodes = 10;
  EXPECT_THROW(nabla2_constant(a, thin), InvalidArgument);
}
