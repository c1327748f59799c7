#include "anacci/qkernel.hpp"
#include "anacci/solver.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace anacci;

TEST(EvalP, Examples) {
  EXPECT_EQ(eval_P(1.0, 1.0, 1), 0.0);
  EXPECT_EQ(eval_P(2.0, 1.0, 2), 1.0);
  EXPECT_NEAR(eval_P(solve_lambda(1.0, 2.0).value, 1.0, 2), 0.0, 1e-12);
}

TEST(EvalQ, Examples) {
  EXPECT_EQ(eval_Q({1.0, 0.7, 3.2}), 0.0);
  EXPECT_NEAR(eval_Q({3.0, 2.0, 5.0}), 2.0, 1e-9);
  EXPECT_NEAR(eval_Q({2.0, 1.0, 2.0}), 1.0, 1e-15);
}

TEST(EvalQ, OverflowKeepsSign) {
  // 1.5^5000 is far beyond double range. lambda(1, 5000) is just below 2, so
  // Q is negative at 1.5 and positive at 2.5.
  EXPECT_LT(eval_Q({1.5, 1.0, 5000.0}), 0.0);
  EXPECT_EQ(eval_Q_log({1.5, 1.0, 5000.0}).sign, -1);
  EXPECT_GT(eval_Q({2.5, 1.0, 5000.0}), 0.0);
  EXPECT_EQ(eval_Q_log({2.5, 1.0, 5000.0}).sign, 1);
}

TEST(EvalQ, LogMagnitudeMatchesDirectValue) {
  const QPoint pt{2.5, 1.0, 10.0};
  const SignedLog s = eval_Q_log(pt);
  EXPECT_NEAR(s.value(), eval_Q(pt), 1e-9 * std::fabs(eval_Q(pt)));
}

TEST(EvalQ, ZeroOnTheUnitPlane) {
  for (double p = 0.05; p < 6.0; p += 0.37) {
    for (double q = 0.05; q < 45.0; q += 1.3) EXPECT_EQ(eval_Q({1.0, p, q}), 0.0);
  }
}

TEST(EvalQFactored, Examples) {
  EXPECT_EQ(eval_Q_factored(1.0, 0.4, 3), 0.0);
  EXPECT_NEAR(eval_Q_factored(2.0, 1.0, 2), 1.0, 1e-15);
  EXPECT_NEAR(eval_Q_factored(3.0, 2.0, 1), 2.0, 1e-15);
}

TEST(EvalQFactored, AgreesWithEvalQAtIntegerOrder) {
  for (int n = 1; n <= 12; ++n) {
    for (double p = 0.1; p < 5.0; p += 0.45) {
      for (double lambda = 0.05; lambda <= p + 2.0; lambda += 0.11) {
        const double q = eval_Q({lambda, p, static_cast<double>(n)});
        // Both forms cancel terms of size lambda^n (lambda + p + 1).
        const double scale = 1.0 + std::pow(lambda, n) * (lambda + p + 1.0);
        EXPECT_LE(std::fabs(q - eval_Q_factored(lambda, p, n)), 1e-14 * scale)
            << lambda << " " << p << " " << n;
      }
    }
  }
}

TEST(DQ, Examples) {
  EXPECT_NEAR(dQ_dlambda({4.0 / 3.0, 1.0, 2.0}), 0.0, 1e-15);
  EXPECT_EQ(dQ_dlambda({1.0, 1.0, 1.0}), 0.0);
  EXPECT_NEAR(dQ_dlambda({2.0, 1.0, 2.0}), 4.0, 1e-14);
}

TEST(DQ, SignAroundTheMinimum) {
  for (double p : {0.3, 1.0, 2.5}) {
    for (double q : {0.5, 2.0, 7.0}) {
      const double lmin = lambda_min(p, q);
      EXPECT_LT(dQ_dlambda({0.9 * lmin, p, q}), 0.0);
      EXPECT_GT(dQ_dlambda({1.1 * lmin, p, q}), 0.0);
    }
  }
}

TEST(DQ, MatchesCentralDifference) {
  for (double p : {0.3, 1.0, 2.5}) {
    for (double q : {0.5, 2.0, 3.7, 9.0}) {
      for (double lambda : {0.3, 0.7, 1.6, 2.9}) {
        const double lmin = lambda_min(p, q);
        if (std::fabs(lambda - lmin) < 0.05) continue;
        const double h = 1e-6 * lambda;
        const double fd = static_cast<double>((oracle::raw_Q(lambda + h, p, q) - oracle::raw_Q(lambda - h, p, q)) / (2 * h));
        const double d = dQ_dlambda({lambda, p, q});
        EXPECT_LE(std::fabs(d - fd), 1e-6 * std::fabs(d)) << lambda << " " << p << " " << q;
      }
    }
  }
}

TEST(LambdaMin, Examples) {
  EXPECT_NEAR(lambda_min(1.0, 2.0), 4.0 / 3.0, 1e-15);
  EXPECT_EQ(lambda_min(1.0, 1.0), 1.0);
  EXPECT_NEAR(lambda_min(2.0, 5.0), 2.5, 1e-15);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(1.0, 1.0, 0.0), RegionClass::Critical);
  EXPECT_EQ(classify(1.0, 2.0, 1e-12), RegionClass::Super);
  EXPECT_EQ(classify(0.25, 2.0, 1e-12), RegionClass::Sub);
}

TEST(Classify, ToleranceBandAndExactRationals) {
  EXPECT_EQ(classify(1.0 + 1e-13, 1.0), RegionClass::Critical);
  EXPECT_EQ(classify(1.0 + 1e-9, 1.0), RegionClass::Super);
  EXPECT_EQ(classify(Rational(3, 7), Rational(7, 3)), RegionClass::Critical);
  EXPECT_EQ(classify(Rational(3, 7), Rational(7, 3) + Rational(1, 1000000000)), RegionClass::Super);
  EXPECT_EQ(classify(Rational(3, 7), Rational(7, 3) - Rational(1, 1000000000)), RegionClass::Sub);
}

TEST(SignPattern, NegativeExactlyBetweenOneAndTheRoot) {
  for (double p : {0.1, 0.4, 1.0, 2.0, 4.5}) {
    for (double q : {0.3, 0.8, 1.5, 2.0, 5.0, 12.0}) {
      const AnacciConstant c = solve_lambda(p, q);
      for (int i = 1; i <= 400; ++i) {
        const double lambda = (p + 2.0) * i / 400.0;
        const double near_root = std::fabs(lambda - c.value) / c.value;
        if (near_root < 1e-6 || std::fabs(lambda - 1.0) < 1e-6) continue;
        const double v = eval_Q({lambda, p, q});
        const bool between = (lambda - 1.0) * (lambda - c.value) < 0.0;
        if (c.region == RegionClass::Critical) {
          EXPECT_GT(v, 0.0);
        } else {
          EXPECT_EQ(v < 0.0, between) << p << " " << q << " " << lambda;
        }
      }
    }
  }
}
