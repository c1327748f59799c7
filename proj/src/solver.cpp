#include "anacci/solver.hpp"

#include "anacci/error.hpp"
#include "powers.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace anacci {
namespace {

// A function with the same positive zero as Q (other than lambda = 1), negative
// to its left and positive to its right. Super: Q / ((lambda-1) lambda^q).
// Sub: Q / (lambda-1). Dividing out the trivial zero keeps the target zero
// simple even close to the critical hyperbola.
struct Deflated {
  double value;
  double slope;
};

Deflated deflated_super(double lambda, double p, double q) {
  const double t = lambda - 1.0;
  if (t >= 0.25) {
    const double w = std::exp(-q * detail::log_of(lambda));
    const double g = (t - p) + p * w;
    const double dg = 1.0 - p * q * w / lambda;
    return {g / t, (dg * t - g) / (t * t)};
  }
  const auto s = detail::power_quotient(lambda, -q);
  return {std::fma(p, s.value, 1.0), p * s.slope};
}

Deflated deflated_sub(double lambda, double p, double q) {
  const double log_lambda = detail::log_of(lambda);
  const auto s = detail::power_quotient(lambda, q);
  const double power = std::exp(q * log_lambda);
  const double dpower = q * std::exp((q - 1.0) * log_lambda);
  return {std::fma(-p, s.value, power), dpower - p * s.slope};
}

// |Q| recovered from the deflated value without forming lambda^q when it overflows.
bool residual_within(double lambda, double q, double deflated, bool super,
                     double bound) {
  const double t = std::fabs(lambda - 1.0);
  if (!super) return t * std::fabs(deflated) <= bound;
  const double exponent = q * detail::log_of(lambda);
  if (exponent > kOverflowExponent) return false;
  return t * std::exp(exponent) * std::fabs(deflated) <= bound;
}

double gap_of(double value, double p, double q, RegionClass region) {
  if (region == RegionClass::Super) return p * std::exp(-q * detail::log_of(value));
  return (p + 1.0) - value;
}

void require_positive(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw Error(ErrorCode::NonPositiveInput,
                "p and q must be positive and finite (p=" + std::to_string(p) +
                    ", q=" + std::to_string(q) + ")");
  }
}

}  // namespace

AnacciConstant solve_lambda(double p, double q, double tol, int max_iterations) {
  require_positive(p, q);
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");

  AnacciConstant out;
  out.p = p;
  out.q = q;
  out.region = classify(p, q);

  if (out.region == RegionClass::Critical) {
    out.value = out.bracket_lo = out.bracket_hi = 1.0;
    out.residual = 0.0;
    out.gap = p;
    return out;
  }
  if (q == 1.0) {
    // Q(lambda, p, 1) = (lambda - 1)(lambda - p)
    out.value = out.bracket_lo = out.bracket_hi = p;
    out.residual = 0.0;
    out.gap = 1.0;
    return out;
  }

  const bool super = out.region == RegionClass::Super;
  auto evaluate = [&](double x) { return super ? deflated_super(x, p, q) : deflated_sub(x, p, q); };
  const double residual_bound = tol * (1.0 + p);

  const double lmin = lambda_min(p, q);
  double lo = 0.0;
  double hi = 0.0;
  if (super) {
    // Q(lambda_min) < 0 < Q(p+1) = p.
    lo = lmin;
    hi = p + 1.0;
  } else {
    // Q(lambda_min) < 0 and Q(0+) = p > 0; halve toward 0 until Q turns positive.
    hi = lmin;
    lo = lmin;
    for (;;) {
      lo *= 0.5;
      if (lo == 0.0) {
        out.value = 0.0;
        out.bracket_lo = 0.0;
        out.bracket_hi = hi;
        out.residual = eval_Q({hi, p, q});
        out.gap = p + 1.0;
        return out;
      }
      const double f = evaluate(lo).value;
      if (f < 0.0) break;
      hi = lo;
      if (f == 0.0) {
        out.value = out.bracket_lo = out.bracket_hi = lo;
        out.residual = eval_Q({lo, p, q});
        out.gap = gap_of(lo, p, q, out.region);
        return out;
      }
    }
  }

  constexpr int kMaxBisection = 40;
  constexpr double kNewtonWidth = 1e-3;
  int bisections = 0;
  double x = 0.5 * (lo + hi);
  for (;;) {
    if (out.iterations >= max_iterations) {
      throw Error(ErrorCode::NoConvergence,
                  "no convergence after " + std::to_string(max_iterations) +
                      " iterations (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
    }
    ++out.iterations;
    const Deflated e = evaluate(x);
    if (e.value == 0.0) {
      lo = hi = x;
      break;
    }
    if (e.value < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (residual_within(x, q, e.value, super, residual_bound)) break;
    if (hi - lo <= tol * x) break;

    const bool polish = (hi - lo) < kNewtonWidth * x || bisections >= kMaxBisection;
    double next = 0.5 * (lo + hi);
    if (polish) {
      const double step = e.value / e.slope;
      const double candidate = x - step;
      if (std::isfinite(candidate) && candidate > lo && candidate < hi) {
        if (std::fabs(step) <= tol * x) {
          x = candidate;
          break;
        }
        next = candidate;
      }
    } else {
      ++bisections;
    }
    if (next == x) break;
    x = next;
  }

  // The stopping rules leave x anywhere in a bracket of relative width tol;
  // a few guarded Newton steps bring it to the rounding floor.
  double last_step = INFINITY;
  for (int i = 0; i < 4 && lo < hi; ++i) {
    const Deflated e = evaluate(x);
    if (e.value == 0.0 || !(e.slope != 0.0)) break;
    const double step = e.value / e.slope;
    const double candidate = x - step;
    if (!(std::fabs(step) < last_step) || !(candidate >= lo && candidate <= hi)) break;
    last_step = std::fabs(step);
    if (candidate == x) break;
    x = candidate;
  }

  out.value = x;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.residual = eval_Q({x, p, q});
  out.gap = gap_of(x, p, q, out.region);
  return out;
}

double solve_lambda_closed(double p, double q, double tol) {
  if (p < 0.0 || q < 0.0 || std::isnan(p) || std::isnan(q)) {
    throw Error(ErrorCode::NonPositiveInput, "p and q must be non-negative");
  }
  if (p == 0.0 || q == 0.0) return 0.0;
  return solve_lambda(p, q, tol).value;
}

double value_difference(const AnacciConstant& a, const AnacciConstant& b) {
  if (a.region == RegionClass::Super && b.region == RegionClass::Super) {
    return (a.p - b.p) - (a.gap - b.gap);
  }
  return a.value - b.value;
}

std::partial_ordering compare_values(const AnacciConstant& a, const AnacciConstant& b) {
  return value_difference(a, b) <=> 0.0;
}

double inverse_p(double lambda, double q) {
  require_positive(lambda, q);
  const double t = lambda - 1.0;
  if (t == 0.0) return 1.0 / q;
  if (std::fabs(t) < 1e-8) return 1.0 / q + t * (q + 1.0) / (2.0 * q);
  const double log_lambda = detail::log_of(lambda);
  if (t > 0.0) return t / -std::expm1(-q * log_lambda);
  return t * std::exp(q * log_lambda) / std::expm1(q * log_lambda);
}

Rational inverse_p_integer(const Rational& lambda, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveInput, "lambda must be positive");
  Rational sum = 0;
  Rational power = 1;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= lambda;
  }
  return power / sum;
}

double inverse_p_integer(double lambda, int n) {
  return to_double(inverse_p_integer(to_rational(lambda), n));
}

namespace {

struct DerivativeParts {
  double lambda;
  double log_lambda;
  double gap;
  double denominator;  // lambda (q+1) - (p+1) q; the factor lambda^(q-1) is divided out
};

DerivativeParts derivative_parts(double p, double q) {
  require_positive(p, q);
  if (classify(p, q) == RegionClass::Critical) {
    throw Error(ErrorCode::CriticalRegime, "derivative is degenerate on p*q = 1");
  }
  const AnacciConstant root = solve_lambda(p, q);
  return {root.value, detail::log_of(root.value), root.gap,
          root.value * (q + 1.0) - (p + 1.0) * q};
}

}  // namespace

double dlambda_dp(double p, double q) {
  const auto parts = derivative_parts(p, q);
  if (parts.lambda == 0.0) return 0.0;
  // (lambda^q - 1) / lambda^(q-1) = lambda (1 - lambda^(-q))
  return parts.lambda * -std::expm1(-q * parts.log_lambda) / parts.denominator;
}

double dlambda_dq(double p, double q) {
  const auto parts = derivative_parts(p, q);
  if (parts.lambda == 0.0) return 0.0;
  return parts.gap * parts.lambda * parts.log_lambda / parts.denominator;
}

bool refined_bound_applies(double p, double q) { return q >= 2.0 && p > 1.0 / kGoldenRatio; }

}  // namespace anacci
