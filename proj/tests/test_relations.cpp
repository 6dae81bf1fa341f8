#include <gtest/gtest.h>

#include <boost/rational.hpp>

#include "fracineq/relations.hpp"

using namespace fracineq;
namespace rel = fracineq::relations;
using Q = boost::rational<long long>;

TEST(Relations, WorkedExamples) {
  EXPECT_EQ(rel::sobolev_conjugate(4.0, 1.0, 2.0), 4.0);
  EXPECT_EQ(rel::hedberg_theta(1.0, 0.0, 1.0), 0.5);
  EXPECT_EQ(rel::lorentz_exponent(Q(3), Q(1)), Q(3, 2));
  EXPECT_EQ(rel::young_oneil_exponent(Q(3), Q(1), Q(2)), Q(6));
  EXPECT_EQ(rel::sobolev_conjugate(Q(3), Q(1), Q(2)), Q(6));
  EXPECT_EQ(rel::sigma_exponent(Q(2), Q(1, 2), Q(2), Q(3, 2)), Q(3));
  EXPECT_EQ(rel::sigma_exponent(Q(2), Q(1, 2), Q(2), Q(3)), Q(6));
  EXPECT_EQ(rel::mixed_theta(Q(2), Q(1, 2), Q(2)), Q(1, 2));
  EXPECT_EQ(rel::mixed_beta(Q(2), Q(1, 2), Q(2)), Q(1, 2));
  EXPECT_EQ(rel::q_pointwise(Q(2), Q(1, 4), Q(1)), Q(4));
}

TEST(Relations, GatesNameTheCondition) {
  try {
    rel::hedberg_theta(1.0, 1.0, 1.0);
    FAIL();
  } catch (const GateError& e) {
    EXPECT_EQ(e.relation(), "hedberg-theta");
    EXPECT_NE(e.gate().find("0 <= s1 < s"), std::string::npos);
  }
  EXPECT_THROW(rel::sobolev_conjugate(1.0, 0.5, 2.0), GateError);
  EXPECT_THROW(rel::sobolev_conjugate(1.0, 0.25, 1.0), GateError);
  EXPECT_THROW(rel::hedberg_theta(1.0, 0.0, 0.0), GateError);
  EXPECT_THROW(rel::lorentz_exponent(1.0, 1.0), GateError);
  EXPECT_THROW(rel::young_oneil_exponent(1.0, 0.5, 2.0), GateError);
  EXPECT_THROW(rel::sigma_exponent(2.0, 1.0, 2.0, 3.0), GateError);
  EXPECT_THROW(rel::q_pointwise(2.0, 0.5, 1.0), GateError);
  EXPECT_THROW(rel::mixed_beta(1.0, 0.6, 2.0), GateError);
}

TEST(Relations, RationalScanIsExactlyConsistent) {
  for (long long n = 1; n <= 4; ++n) {
    for (const Q& p : {Q(3, 2), Q(2), Q(3)}) {
      for (long long k = 1; k < 16; ++k) {
        const Q s = Q(n) / p * Q(k, 16);
        const Q q = rel::sobolev_conjugate(Q(n), s, p);
        EXPECT_EQ(rel::young_oneil_exponent(Q(n), s, p), q);
        EXPECT_EQ(rel::q_pointwise(p, s, Q(n)), q);
        EXPECT_EQ(rel::sigma_exponent(Q(n), s, p, p), q);
        EXPECT_EQ(Q(1) / q, (Q(1) - rel::mixed_theta(Q(n), s, p)) / p);
      }
    }
  }
}
