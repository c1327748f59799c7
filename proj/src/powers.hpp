#pragma once

#include <cmath>

// Internal helpers for real powers near lambda = 1.
namespace anacci::detail {

/// ln(lambda), taking log1p(lambda - 1) where lambda - 1 is exact.
inline double log_of(double lambda) {
  const double t = lambda - 1.0;
  return std::fabs(t) < 0.5 ? std::log1p(t) : std::log(lambda);
}

/// S_a(lambda) = (lambda^a - 1) / (lambda - 1) and its lambda-derivative.
/// Continuous through lambda = 1 where it equals a.
struct PowerQuotient {
  double value;
  double slope;
};

inline PowerQuotient power_quotient(double lambda, double a) {
  const double t = lambda - 1.0;
  if (std::fabs(t) < 1e-3 && std::fabs(a * t) < 0.1) {
    // Binomial series: S = sum_{k>=1} C(a,k) t^(k-1).
    double coeff = a;  // C(a, 1)
    double value = 0.0;
    double slope = 0.0;
    double tpow = 1.0;       // t^(k-1)
    double tpow_prev = 0.0;  // t^(k-2)
    for (int k = 1; k <= 24; ++k) {
      value += coeff * tpow;
      if (k >= 2) slope += (k - 1) * coeff * tpow_prev;
      tpow_prev = tpow;
      tpow *= t;
      coeff *= (a - k) / (k + 1);
    }
    return {value, slope};
  }
  const double e = std::expm1(a * log_of(lambda));
  const double value = e / t;
  const double slope = (a * ((e + 1.0) / lambda) * t - e) / (t * t);
  return {value, slope};
}

}  // namespace anacci::detail
