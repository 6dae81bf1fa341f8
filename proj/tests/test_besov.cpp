#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fracineq/besov.hpp"
#include "fracineq/error.hpp"
#include "fracineq/field_ops.hpp"
#include "fracineq/luxemburg.hpp"
#include "support.hpp"

using namespace fracineq;
using fracineq::check::for_all;
using fracineq::check::Gen;
using fracineq::check::rel_diff;

TEST(ThermicBesov, SingleModeMatchesDenseMaximization) {
  // sup_t t^{beta/2} e^{-t |xi|^2} for |xi| = 1, beta = 1, found on a fine grid.
  double oracle = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double t = std::exp(-10.0 + 15.0 * i / 200000.0);
    oracle = std::max(oracle, std::sqrt(t) * std::exp(-t));
  }
  EXPECT_NEAR(oracle, 0.42888, 1e-5);
  const DomainSpec d(1, 2.0 * std::numbers::pi, 64);
  const auto f = sample(d, GeneratorSpec::fourier_mode(1));
  EXPECT_NEAR(besov_norm_thermic(f, 1.0), oracle, 1e-4 * oracle);
}

TEST(ThermicBesov, ZeroHomogeneityAndErrors) {
  const DomainSpec d(1, 16.0, 64);
  EXPECT_EQ(besov_norm_thermic(SampledField::zeros(d), 1.0), 0.0);
  EXPECT_EQ(besov_norm_thermic(SampledField::constant(d, 5.0), 1.0), 0.0);
  Gen g(501);
  const auto f = g.field(d, 6);
  EXPECT_LT(rel_diff(besov_norm_thermic(f.scaled(-2.5), 0.7), 2.5 * besov_norm_thermic(f, 0.7)), 1e-14);
  EXPECT_THROW(besov_norm_thermic(f, 0.0), InvalidArgument);
  EXPECT_THROW((TGrid{1e-3, 1.0, 50}).validate(), InvalidArgument);
}

TEST(LittlewoodPaley, RangeAndPartitionOfUnity) {
  for (const auto& d : {DomainSpec(1, 16.0, 256), DomainSpec(2, 16.0, 64), DomainSpec(1, 2.0 * std::numbers::pi, 32)}) {
    const LittlewoodPaleyBasis basis(d);
    const FrequencyGrid grid(d);
    EXPECT_LE(std::ldexp(1.0, basis.j_min()), 2.0 * std::numbers::pi / d.period() + 1e-15);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid.k_squared(i) == 0) continue;
      double sum = 0.0;
      for (int j = basis.j_min(); j <= basis.j_max(); ++j) sum += LittlewoodPaleyBasis::psi_hat(j, grid.xi_norm(i));
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(LittlewoodPaley, BlocksOfModesAndOrthogonality) {
  const DomainSpec d(1, 2.0 * std::numbers::pi, 64);
  const LittlewoodPaleyBasis basis(d);
  const auto mode = sample(d, GeneratorSpec::fourier_mode(3));
  for (int j = basis.j_min(); j <= basis.j_max(); ++j) {
    EXPECT_LT((dyadic_block(mode, j, basis) - mode.scaled(LittlewoodPaleyBasis::psi_hat(j, 3.0))).max_abs(), 1e-14);
  }
  Gen g(511);
  const auto f = g.field(d, 30);
  for (int j = basis.j_min(); j <= basis.j_max(); ++j) {
    for (int k = j + 2; k <= basis.j_max(); ++k) {
      EXPECT_LT(dyadic_block(dyadic_block(f, j, basis), k, basis).max_abs(), 1e-14 * f.max_abs());
    }
  }
  EXPECT_THROW(dyadic_block(f, basis.j_max() + 1, basis), InvalidArgument);
  EXPECT_THROW(dyadic_block(f, basis.j_min() - 1, basis), InvalidArgument);
}

TEST(LittlewoodPaley, Reconstruction) {
  for_all(521, 10, [](Gen& g) {
    const int n = g.integer(1, 2);
    const DomainSpec d(n, 16.0, n == 1 ? 128 : 32);
    const LittlewoodPaleyBasis basis(d);
    const auto f = g.field(d, n == 1 ? 60 : 15);
    auto total = SampledField::zeros(d);
    for (const auto& b : basis.blocks(f)) total = total + b;
    EXPECT_EQ(basis.blocks(f).size(), basis.block_count());
    EXPECT_LT((total - f.without_mean()).max_abs(), 1e-10 * f.max_abs());
  });
}

TEST(LittlewoodPaley, BesovNormOfPureBlockMode) {
  // |xi| = 4 = 2^2 sits where psi_2 = 1 and every other block vanishes.
  const DomainSpec d(1, 2.0 * std::numbers::pi, 64);
  const LittlewoodPaleyBasis basis(d);
  const auto f = sample(d, GeneratorSpec::fourier_mode(4));
  EXPECT_NEAR(besov_norm_lp(f, 1.0, basis), 0.25, 1e-14);
  EXPECT_NEAR(besov_norm_lp(f, 0.5, basis), 0.5, 1e-14);
  EXPECT_EQ(besov_norm_lp(SampledField::zeros(d), 1.0, basis), 0.0);
  EXPECT_THROW(besov_norm_lp(f, -1.0, basis), InvalidArgument);
}

TEST(LittlewoodPaley, SquareFunctionOfModes) {
  const DomainSpec d(1, 2.0 * std::numbers::pi, 64);
  const LittlewoodPaleyBasis basis(d);
  const auto p2 = VariableExponent::constant(d, 2.0);
  for (long k : {1L, 3L, 4L, 5L, 13L}) {
    double overlap = 0.0;
    for (int j = basis.j_min(); j <= basis.j_max(); ++j) {
      overlap += std::pow(LittlewoodPaleyBasis::psi_hat(j, static_cast<double>(k)), 2);
    }
    EXPECT_GE(overlap, 0.5);
    EXPECT_LE(overlap, 1.0 + 1e-15);
    const auto f = sample(d, GeneratorSpec::fourier_mode(k));
    EXPECT_NEAR(lp_square_function_norm(f, 0.0, p2, basis), std::sqrt(overlap * 2.0 * std::numbers::pi), 1e-10);
  }
  EXPECT_EQ(lp_square_function_norm(SampledField::constant(d, 2.0), 0.0, p2, basis), 0.0);
  EXPECT_THROW(lp_square_function(SampledField::zeros(d), -0.5, basis), InvalidArgument);
}

TEST(LittlewoodPaley, SquareFunctionEnergyBrackets) {
  // Pointwise sum_j |Delta_j f|^2 integrates to the psi^2-weighted energy, which
  // lies between half and all of ||f - mean||_2^2.
  for_all(531, 10, [](Gen& g) {
    const DomainSpec d(1, 16.0, 128);
    const LittlewoodPaleyBasis basis(d);
    const auto f = g.field(d, 40);
    const double sq = lp_square_function_norm(f, 0.0, VariableExponent::constant(d, 2.0), basis);
    const double l2 = lp_norm(f.without_mean(), 2.0);
    EXPECT_GE(sq, std::sqrt(0.5) * l2 * (1.0 - 1e-12));
    EXPECT_LE(sq, l2 * (1.0 + 1e-12));
  });
}

TEST(SequenceInterpolation, DeltaAndZero) {
  const std::vector<double> delta{1.0};
  for (double theta : {0.25, 0.5, 0.75}) {
    const auto c = sequence_interpolation_check(delta, 0, 1.0, -1.0, theta, 2.0, 2.0, kInfinity);
    EXPECT_EQ(c.lhs, 1.0);
    EXPECT_EQ(c.rhs, 1.0);
    ASSERT_TRUE(c.ratio);
    EXPECT_EQ(*c.ratio, 1.0);
  }
  const std::vector<double> zero(5, 0.0);
  const auto z = sequence_interpolation_check(zero, -2, 1.0, -1.0, 0.5, 2.0, 2.0, kInfinity);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  EXPECT_FALSE(z.ratio);
}

TEST(SequenceInterpolation, GeometricSequenceByDirectSummation) {
  // a_j = 2^{-j} for j = 0..20, s0 = 1, s1 = -1, theta = 1/2, (r, r1, r2) = (2, 2, inf).
  std::vector<double> a(21);
  for (int j = 0; j <= 20; ++j) a[static_cast<std::size_t>(j)] = std::exp2(-j);
  double lhs2 = 0.0, s0_2 = 0.0, s1_inf = 0.0;
  for (int j = 0; j <= 20; ++j) {
    lhs2 += std::pow(std::exp2(-j), 2);           // s = 0
    s0_2 += 1.0;                                   // 2^{j} 2^{-j}
    s1_inf = std::max(s1_inf, std::exp2(-2 * j));  // 2^{-j} 2^{-j}
  }
  const double lhs = std::sqrt(lhs2), rhs = std::sqrt(std::sqrt(s0_2)) * std::sqrt(s1_inf);
  const auto c = sequence_interpolation_check(a, 0, 1.0, -1.0, 0.5, 2.0, 2.0, kInfinity);
  EXPECT_NEAR(c.lhs, lhs, 1e-14);
  EXPECT_NEAR(c.rhs, rhs, 1e-14);
  ASSERT_TRUE(c.ratio);
  EXPECT_LT(*c.ratio, 4.0);
}

TEST(SequenceInterpolation, ReseededSuitesGiveStableConstant) {
  auto suite = [](std::uint64_t seed) {
    Gen g(seed);
    double c_fit = 0.0;
    for (int i = 0; i < 300; ++i) {
      const auto a = g.nonnegative(static_cast<std::size_t>(g.integer(1, 30)));
      const auto c = sequence_interpolation_check(a, -10, 1.0, -1.0, 0.5, 2.0, 2.0, kInfinity);
      if (c.ratio) c_fit = std::max(c_fit, *c.ratio);
    }
    return c_fit;
  };
  const double c1 = suite(541), c2 = suite(542);
  EXPECT_TRUE(std::isfinite(c1));
  EXPECT_GE(c1, 1.0);
  EXPECT_LT(std::abs(c2 / c1 - 1.0), 0.2);
}

TEST(SequenceInterpolation, Gates) {
  const std::vector<double> a{1.0, 2.0};
  EXPECT_THROW(sequence_interpolation_check(a, 0, 1.0, -1.0, 0.0, 2.0, 2.0, 2.0), GateError);
  EXPECT_THROW(sequence_interpolation_check(a, 0, 1.0, -1.0, 1.0, 2.0, 2.0, 2.0), GateError);
  EXPECT_THROW(sequence_interpolation_check(a, 0, 1.0, 1.0, 0.5, 2.0, 2.0, 2.0), GateError);
  EXPECT_THROW(sequence_interpolation_check(a, 0, 1.0, -1.0, 0.5, 0.5, 2.0, 2.0), GateError);
}
