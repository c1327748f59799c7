#pragma once

#include "anacci/qkernel.hpp"
#include "anacci/rational.hpp"

#include <compare>

namespace anacci {

/// A solved zero lambda(p, q) != 1 of Q (or exactly 1 on the critical hyperbola).
struct AnacciConstant {
  double p = 0.0;
  double q = 0.0;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  // Q(value, p, q); +-inf when lambda^q is not representable
  int iterations = 0;
  RegionClass region = RegionClass::Critical;
  /// p + 1 - value, evaluated as p * value^(-q) in the Super regime so that it
  /// keeps full relative precision after value itself has rounded to p + 1.
  double gap = 0.0;
};

/// value(a) - value(b), resolved through the gaps when both constants crowd
/// their asymptotes.
double value_difference(const AnacciConstant& a, const AnacciConstant& b);

std::partial_ordering compare_values(const AnacciConstant& a, const AnacciConstant& b);

enum class BoundSource { Basic, Refined };

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  BoundSource source = BoundSource::Basic;
};

inline constexpr double kDefaultTolerance = 1e-14;
inline constexpr int kMaxIterations = 200;

/// Unique zero lambda(p, q) != 1 of Q(., p, q), or 1 exactly when |p q - 1| <= 1e-12.
///
/// Super regime brackets on [lambda_min, p + 1], Sub regime on
/// [lambda_min / 2^k, lambda_min] with k the first halving where Q > 0. Bisection
/// runs until the bracket is narrower than 1e-3 * value (at most 40 steps), then
/// bracket-safeguarded Newton finishes. A Sub-regime root below the smallest
/// positive double is reported as value 0 with bracket [0, smallest tested point].
///
/// Throws Error(NonPositiveInput) for p <= 0 or q <= 0 and Error(NoConvergence)
/// when `max_iterations` is exhausted.
AnacciConstant solve_lambda(double p, double q, double tol = kDefaultTolerance,
                            int max_iterations = kMaxIterations);

/// Continuous extension of lambda(p, q) to the closed quadrant: 0 on p = 0 or q = 0.
double solve_lambda_closed(double p, double q, double tol = kDefaultTolerance);

/// p(lambda, q) = lambda^q (lambda - 1) / (lambda^q - 1), with p(1, q) = 1/q.
double inverse_p(double lambda, double q);

/// lambda^n / (1 + lambda + ... + lambda^(n-1)) in exact arithmetic.
Rational inverse_p_integer(const Rational& lambda, int n);
double inverse_p_integer(double lambda, int n);

/// d lambda / d p = (lambda^q - 1) / (lambda^(q-1) [lambda (q+1) - (p+1) q]).
/// Throws Error(CriticalRegime) on the critical hyperbola.
double dlambda_dp(double p, double q);

/// d lambda / d q = (p + 1 - lambda) lambda^q ln(lambda) / (lambda^(q-1) [lambda (q+1) - (p+1) q]).
/// Throws Error(CriticalRegime) on the critical hyperbola.
double dlambda_dq(double p, double q);

// Closed-form bounds. Templates so that the rational grid checks stay exact.

/// (p+1) q / (q+1): strict lower bound on lambda in the Super regime, strict upper in Sub.
template <class T>
T lower_bound_basic(const T& p, const T& q) {
  return (p + 1) * q / (q + 1);
}

/// p + 1 - 1/(p+1); a strict lower bound once q >= 2 and p > 1/golden ratio.
template <class T>
T lower_bound_refined(const T& p) {
  return p + 1 - 1 / (p + 1);
}

/// (p+1)^2 - 1: the basic bound is <= the refined one iff q <= this value.
template <class T>
T bound_crossover(const T& p) {
  return (p + 1) * (p + 1) - 1;
}

/// True when lower_bound_refined applies: q >= 2 and p > 1/golden ratio.
bool refined_bound_applies(double p, double q);

inline constexpr double kGoldenRatio = 1.6180339887498948482;

}  // namespace anacci
