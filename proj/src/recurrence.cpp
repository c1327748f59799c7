#include "anacci/recurrence.hpp"

#include "anacci/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

namespace anacci {
namespace {

constexpr int kRefreshPeriod = 64;

template <class T>
void validate(const RecurrenceSpec<T>& spec) {
  if (spec.n < 1) throw Error(ErrorCode::InvalidSpec, "order n must be >= 1");
  if (static_cast<int>(spec.init.size()) != spec.n) {
    throw Error(ErrorCode::InvalidSpec, "expected " + std::to_string(spec.n) +
                                            " initial terms, got " + std::to_string(spec.init.size()));
  }
  if (std::all_of(spec.init.begin(), spec.init.end(), [](const T& a) { return a == 0; })) {
    throw Error(ErrorCode::AllZeroInit, "initial terms are all zero");
  }
}

void require_count(int count, int n) {
  if (count < n) {
    throw Error(ErrorCode::InvalidArgument,
                "count " + std::to_string(count) + " is smaller than the order " + std::to_string(n));
  }
}

}  // namespace

std::vector<double> canonical_init(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSpec, "order n must be >= 1");
  std::vector<double> init(static_cast<std::size_t>(n), 0.0);
  init.back() = 1.0;
  return init;
}

std::vector<Rational> canonical_init_exact(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSpec, "order n must be >= 1");
  std::vector<Rational> init(static_cast<std::size_t>(n), Rational(0));
  init.back() = 1;
  return init;
}

std::vector<double> generate(const RealRecurrence& spec, int count) {
  validate(spec);
  require_count(count, spec.n);
  std::vector<double> terms(spec.init.begin(), spec.init.end());
  terms.reserve(static_cast<std::size_t>(count));
  const auto n = static_cast<std::ptrdiff_t>(spec.n);
  // The window is summed afresh each step; a running sum would carry rounding
  // from early terms into a decaying tail.
  while (terms.size() < static_cast<std::size_t>(count)) {
    const double window = std::accumulate(terms.end() - n, terms.end(), 0.0);
    terms.push_back(spec.p * window);
  }
  return terms;
}

std::vector<Rational> generate(const ExactRecurrence& spec, int count) {
  validate(spec);
  require_count(count, spec.n);
  std::vector<Rational> terms(spec.init.begin(), spec.init.end());
  terms.reserve(static_cast<std::size_t>(count));
  const auto n = static_cast<std::size_t>(spec.n);
  Rational window = 0;
  for (const auto& a : spec.init) window += a;
  for (std::size_t k = n; k < static_cast<std::size_t>(count); ++k) {
    Rational next = spec.p * window;
    window += next - terms[k - n];
    terms.push_back(std::move(next));
  }
  return terms;
}

RatioEstimate ratio_limit(const RealRecurrence& spec, double tol, int max_terms) {
  validate(spec);
  if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be non-negative");
  if (max_terms < 2 * spec.n) {
    throw Error(ErrorCode::InvalidArgument, "max_terms must be at least 2n");
  }

  // Window of the last n terms, rescaled every kRefreshPeriod steps; ratios
  // are invariant under the rescaling.
  std::deque<double> window(spec.init.begin(), spec.init.end());

  RatioEstimate est;
  for (int k = 0; k < spec.n; ++k) {
    if (spec.init[static_cast<std::size_t>(k)] == 0.0) est.k0 = k;
  }

  double previous_ratio = 0.0;
  bool have_ratio = false;
  int small_deltas = 0;
  // window.back() is F_{k}; each step produces F_{k+1}.
  for (int k = spec.n - 1; k + 1 < max_terms; ++k) {
    if ((k - spec.n + 1) % kRefreshPeriod == 0) {
      const double scale = std::fabs(window.back());
      if (scale > 0.0 && std::isfinite(scale)) {
        for (double& v : window) v /= scale;
      }
    }
    const double current = window.back();
    const double next = spec.p * std::accumulate(window.begin(), window.end(), 0.0);
    window.pop_front();
    window.push_back(next);

    if (next == 0.0) {
      est.k0 = k + 1;
      have_ratio = false;
      small_deltas = 0;
      continue;
    }
    if (k <= est.k0 || current == 0.0) continue;

    const double ratio = next / current;
    est.value = ratio;
    est.k_used = k;
    // While the window still reaches back to the last zero the terms can grow
    // by exact doublings, so deltas only count once F_{k-n} is past it.
    const bool settled = k - spec.n > est.k0;
    if (have_ratio && settled) {
      if (std::fabs(ratio - previous_ratio) <= tol) {
        if (++small_deltas >= 3) {
          est.converged = true;
          return est;
        }
      } else {
        small_deltas = 0;
      }
    }
    previous_ratio = ratio;
    have_ratio = true;
  }
  throw Error(ErrorCode::NoConvergence,
              "ratio did not settle within " + std::to_string(max_terms) + " terms");
}

std::vector<BigInt> horadam_check(int m, long long a1, long long a2, int count) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "count must be >= 2");
  if (m < 1) throw Error(ErrorCode::NonPositiveInput, "m must be >= 1");
  ExactRecurrence spec{Rational(m), 2, {Rational(a1), Rational(a2)}};
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  if (a1 == 0 && a2 == 0) {
    out.assign(static_cast<std::size_t>(count), BigInt(0));
    return out;
  }
  for (const auto& term : generate(spec, count)) out.push_back(boost::multiprecision::numerator(term));
  return out;
}

}  // namespace anacci
