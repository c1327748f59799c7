#include "anacci/error.hpp"
#include "anacci/recurrence.hpp"
#include "anacci/solver.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

using namespace anacci;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Generate, Examples) {
  EXPECT_EQ(generate(RealRecurrence{1.0, 2, {0, 1}}, 8), (std::vector<double>{0, 1, 1, 2, 3, 5, 8, 13}));
  EXPECT_EQ(generate(RealRecurrence{2.0, 2, {0, 1}}, 6), (std::vector<double>{0, 1, 2, 6, 16, 44}));
  EXPECT_EQ(generate(RealRecurrence{1.0, 3, {0, 0, 1}}, 7), (std::vector<double>{0, 0, 1, 1, 2, 4, 7}));
}

TEST(Generate, Errors) {
  EXPECT_EQ(code_of([] { generate(RealRecurrence{1.0, 2, {0, 0}}, 5); }), ErrorCode::AllZeroInit);
  EXPECT_EQ(code_of([] { generate(RealRecurrence{1.0, 3, {0, 1}}, 5); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { generate(ExactRecurrence{Rational(1), 2, {Rational(0), Rational(0)}}, 5); }),
            ErrorCode::AllZeroInit);
  EXPECT_THROW(generate(RealRecurrence{1.0, 3, {0, 0, 1}}, 2), Error);
}

TEST(Generate, ExactIntegersStayIntegral) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (const Rational& t : generate(ExactRecurrence{Rational(m), n, canonical_init_exact(n)}, 80)) {
        EXPECT_EQ(denominator(t), 1);
      }
    }
  }
}

TEST(Generate, FloatingMatchesExactAndDefinition) {
  for (const Rational& p : {Rational(1, 3), Rational(1), Rational(5, 2), Rational(3)}) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<Rational> init_exact;
      std::vector<double> init;
      std::vector<long double> init_ld;
      for (int i = 0; i < n; ++i) {
        init_exact.push_back(Rational(i + 1, 2));
        init.push_back((i + 1) / 2.0);
        init_ld.push_back((i + 1) / 2.0L);
      }
      const auto exact = generate(ExactRecurrence{p, n, init_exact}, 50);
      const auto real = generate(RealRecurrence{to_double(p), n, init}, 50);
      const auto ref = oracle::sequence(static_cast<long double>(to_double(p)), n, init_ld, 50);
      for (int k = 0; k < 50; ++k) {
        const double e = to_double(exact[static_cast<std::size_t>(k)]);
        EXPECT_LE(std::fabs(real[static_cast<std::size_t>(k)] - e), 1e-12 * std::fabs(e));
        EXPECT_LE(std::fabs(static_cast<double>(ref[static_cast<std::size_t>(k)]) - e), 1e-12 * std::fabs(e));
      }
    }
  }
}

TEST(CanonicalInit, Examples) {
  EXPECT_EQ(canonical_init(1), (std::vector<double>{1}));
  EXPECT_EQ(canonical_init(2), (std::vector<double>{0, 1}));
  EXPECT_EQ(canonical_init(4), (std::vector<double>{0, 0, 0, 1}));
  EXPECT_EQ(canonical_init_exact(2), (std::vector<Rational>{Rational(0), Rational(1)}));
}

TEST(RatioLimit, Examples) {
  const RatioEstimate fib = ratio_limit(RealRecurrence{1.0, 2, {0, 1}}, 1e-12, 500);
  EXPECT_TRUE(fib.converged);
  EXPECT_NEAR(fib.value, 1.618033988749895, 1e-11);
  EXPECT_EQ(fib.k0, 0);
  const RatioEstimate two = ratio_limit(RealRecurrence{2.0, 2, {0, 1}}, 1e-12, 500);
  EXPECT_NEAR(two.value, 2.732050807568877, 1e-11);
  const RatioEstimate constant = ratio_limit(RealRecurrence{1.0, 1, {5}}, 0.0, 50);
  EXPECT_EQ(constant.value, 1.0);
  EXPECT_TRUE(constant.converged);
  EXPECT_EQ(constant.k0, -1);
}

TEST(RatioLimit, Errors) {
  EXPECT_EQ(code_of([] { ratio_limit(RealRecurrence{1.0, 2, {0, 0}}, 1e-12, 100); }), ErrorCode::AllZeroInit);
  EXPECT_EQ(code_of([] { ratio_limit(RealRecurrence{1.0, 2, {0, 1}}, 1e-12, 6); }), ErrorCode::NoConvergence);
  EXPECT_EQ(code_of([] { ratio_limit(RealRecurrence{1.0, 3, {0, 0, 1}}, 1e-12, 5); }), ErrorCode::InvalidArgument);
}

TEST(RatioLimit, MatchesSolvedRoots) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const RatioEstimate r = ratio_limit(RealRecurrence{double(m), n, canonical_init(n)}, 1e-13, 500);
      EXPECT_TRUE(r.converged);
      EXPECT_LE(std::fabs(r.value - solve_lambda(m, n).value), 1e-10) << m << " " << n;
    }
  }
}

TEST(RatioLimit, IgnoresTheEarlyDoublingRun) {
  // With canonical init the first n-1 ratios past the 1 are exactly 2.
  const RatioEstimate r = ratio_limit(RealRecurrence{1.0, 8, canonical_init(8)}, 1e-12, 500);
  EXPECT_NEAR(r.value, solve_lambda(1, 8).value, 1e-10);
  EXPECT_LT(r.value, 2.0);
}

TEST(RatioLimit, ScaleInvariant) {
  const RealRecurrence base{1.5, 3, {1, 2, 3}};
  const RatioEstimate r = ratio_limit(base, 1e-13, 500);
  for (double s : {-3.0, 1e-6, 7.5, 1e200}) {
    RealRecurrence scaled = base;
    for (double& a : scaled.init) a *= s;
    const RatioEstimate rs = ratio_limit(scaled, 1e-13, 500);
    EXPECT_NEAR(rs.value, r.value, 1e-12);
  }
}

TEST(RatioLimit, RecordsLastZeroBeforeConvergence) {
  const RatioEstimate r = ratio_limit(RealRecurrence{1.0, 4, {0, 0, 0, 1}}, 1e-12, 500);
  EXPECT_EQ(r.k0, 2);
  EXPECT_NEAR(r.value, 1.9275619754829253, 1e-11);
}

TEST(Horadam, Examples) {
  EXPECT_EQ(horadam_check(2, 0, 1, 6), (std::vector<BigInt>{0, 1, 2, 6, 16, 44}));
  EXPECT_EQ(horadam_check(1, 0, 1, 6), (std::vector<BigInt>{0, 1, 1, 2, 3, 5}));
  EXPECT_EQ(horadam_check(3, 1, 1, 5), (std::vector<BigInt>{1, 1, 6, 21, 81}));
}

TEST(Horadam, MatchesSecondOrderDefinition) {
  for (int m = 1; m <= 6; ++m) {
    const auto h = horadam_check(m, 2, -1, 40);
    BigInt a = 2, b = -1;
    EXPECT_EQ(h[0], a);
    EXPECT_EQ(h[1], b);
    for (std::size_t k = 2; k < h.size(); ++k) {
      // w_k = m w_{k-1} + m w_{k-2}
      const BigInt c = m * b + m * a;
      EXPECT_EQ(h[k], c);
      a = b;
      b = c;
    }
  }
}
