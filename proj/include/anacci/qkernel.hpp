#pragma once

#include "anacci/rational.hpp"

#include <string_view>

// Evaluation of the characteristic polynomial P_p^(n)(lambda) and of its
// real-order extension Q(lambda, p, q) = lambda^(q+1) - (p+1) lambda^q + p.
//
// Q vanishes on the plane lambda = 1 for every (p, q) and has exactly one
// further positive zero lambda(p, q), which coincides with 1 on the critical
// hyperbola p*q = 1.
namespace anacci {

/// Evaluation point of Q; every slot lives in the open half-line (0, inf).
struct QPoint {
  double lambda;
  double p;
  double q;
};

enum class RegionClass { Super, Critical, Sub };

std::string_view to_string(RegionClass region) noexcept;

/// Sign and natural-log magnitude of a value that may not fit in a double.
struct SignedLog {
  int sign = 0;  // -1, 0 or +1
  double log_magnitude = 0.0;

  double value() const noexcept;  // overflows to +-inf, never flips the sign
};

/// Default |p*q - 1| window treated as the critical hyperbola.
inline constexpr double kCriticalTolerance = 1e-12;

/// q*ln(lambda) above which lambda^q is handled through its logarithm.
inline constexpr double kOverflowExponent = 700.0;

/// lambda^n - p (lambda^(n-1) + ... + 1); the geometric part uses Neumaier summation.
double eval_P(double lambda, double p, int n);

/// Q(lambda, p, q). Returns +-inf with the correct sign when |Q| is not representable.
double eval_Q(const QPoint& point);

/// Q(lambda, p, q) as sign + log magnitude, computed through Q / lambda^q when
/// lambda^q overflows.
SignedLog eval_Q_log(const QPoint& point);

/// (lambda - 1) * eval_P(lambda, p, n).
double eval_Q_factored(double lambda, double p, int n);

/// Q / (lambda - 1): the real-order extension of P, equal to eval_P for integer q
/// and continuous through lambda = 1 where it takes the value 1 - p*q.
double eval_Q_deflated(const QPoint& point);

double dQ_dlambda(const QPoint& point);

/// (p+1) q / (q+1), the unique critical point of Q in lambda.
double lambda_min(double p, double q);

/// Floating classification of p*q against 1 with an explicit tolerance.
RegionClass classify(double p, double q, double tol = kCriticalTolerance);

/// Exact classification for rational inputs.
RegionClass classify(const Rational& p, const Rational& q);

}  // namespace anacci
