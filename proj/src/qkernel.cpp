#include "anacci/qkernel.hpp"

#include "powers.hpp"

#include <cmath>
#include <limits>

namespace anacci {

std::string_view to_string(RegionClass region) noexcept {
  switch (region) {
    case RegionClass::Super: return "Super";
    case RegionClass::Critical: return "Critical";
    case RegionClass::Sub: return "Sub";
  }
  return "Unknown";
}

double SignedLog::value() const noexcept {
  if (sign == 0) return 0.0;
  return std::copysign(std::exp(log_magnitude), static_cast<double>(sign));
}

double eval_P(double lambda, double p, int n) {
  // Neumaier-compensated sum of 1 + lambda + ... + lambda^(n-1).
  double sum = 0.0;
  double carry = 0.0;
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = sum + power;
    if (std::fabs(sum) >= std::fabs(power)) {
      carry += (sum - next) + power;
    } else {
      carry += (power - next) + sum;
    }
    sum = next;
    power *= lambda;
  }
  // power is now lambda^n
  return std::fma(-p, sum + carry, power);
}

SignedLog eval_Q_log(const QPoint& point) {
  const auto [lambda, p, q] = point;
  if (lambda == 1.0) return {0, -std::numeric_limits<double>::infinity()};
  const double log_lambda = detail::log_of(lambda);
  const double exponent = q * log_lambda;
  double value;
  if (exponent > kOverflowExponent) {
    // Q / lambda^q = lambda - (p+1) + p lambda^(-q)
    const double scaled = (lambda - 1.0) - p + p * std::exp(-exponent);
    if (scaled == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    return {scaled > 0.0 ? 1 : -1, exponent + std::log(std::fabs(scaled))};
  }
  value = std::fma(std::exp(exponent), (lambda - 1.0) - p, p);
  if (value == 0.0) return {0, -std::numeric_limits<double>::infinity()};
  return {value > 0.0 ? 1 : -1, std::log(std::fabs(value))};
}

double eval_Q(const QPoint& point) {
  const auto [lambda, p, q] = point;
  if (lambda == 1.0) return 0.0;
  const double exponent = q * detail::log_of(lambda);
  if (exponent > kOverflowExponent) return eval_Q_log(point).value();
  return std::fma(std::exp(exponent), (lambda - 1.0) - p, p);
}

double eval_Q_factored(double lambda, double p, int n) {
  return (lambda - 1.0) * eval_P(lambda, p, n);
}

double eval_Q_deflated(const QPoint& point) {
  const auto [lambda, p, q] = point;
  if (lambda == 1.0) return std::fma(-p, q, 1.0);
  const double power = std::exp(q * detail::log_of(lambda));
  return std::fma(-p, detail::power_quotient(lambda, q).value, power);
}

double dQ_dlambda(const QPoint& point) {
  const auto [lambda, p, q] = point;
  const double power = lambda == 1.0 ? 1.0 : std::exp((q - 1.0) * detail::log_of(lambda));
  return power * (lambda * (q + 1.0) - (p + 1.0) * q);
}

double lambda_min(double p, double q) { return (p + 1.0) * q / (q + 1.0); }

RegionClass classify(double p, double q, double tol) {
  const double excess = std::fma(p, q, -1.0);
  if (excess > tol) return RegionClass::Super;
  if (-excess > tol) return RegionClass::Sub;
  return RegionClass::Critical;
}

RegionClass classify(const Rational& p, const Rational& q) {
  const Rational product = p * q;
  if (product > 1) return RegionClass::Super;
  if (product < 1) return RegionClass::Sub;
  return RegionClass::Critical;
}

}  // namespace anacci
