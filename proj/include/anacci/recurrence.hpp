#pragma once

#include "anacci/rational.hpp"

#include <vector>

// Weighted n-step recurrences F_k = p (F_{k-1} + ... + F_{k-n}) with n given
// initial terms, in exact rational or double arithmetic.
namespace anacci {

template <class T>
struct RecurrenceSpec {
  T p;
  int n = 1;
  std::vector<T> init;  // a_0 ... a_{n-1}
};

using RealRecurrence = RecurrenceSpec<double>;
using ExactRecurrence = RecurrenceSpec<Rational>;

struct RatioEstimate {
  double value = 0.0;
  int k_used = 0;    // index k of the last ratio F_{k+1} / F_k formed
  int k0 = -1;       // largest index with a zero term seen, -1 if none
  bool converged = false;
};

/// (0, ..., 0, 1) of length n.
std::vector<double> canonical_init(int n);
std::vector<Rational> canonical_init_exact(int n);

/// First `count` terms. Throws Error(AllZeroInit) or Error(InvalidSpec).
std::vector<double> generate(const RealRecurrence& spec, int count);
std::vector<Rational> generate(const ExactRecurrence& spec, int count);

/// Successive ratios past the last zero term; converged once three consecutive
/// deltas are <= tol. Throws Error(NoConvergence) if `max_terms` runs out.
RatioEstimate ratio_limit(const RealRecurrence& spec, double tol, int max_terms);

/// Horadam w_k(a1, a2; m, -m), i.e. signature (m, m), in exact integers.
std::vector<BigInt> horadam_check(int m, long long a1, long long a2, int count);

}  // namespace anacci
