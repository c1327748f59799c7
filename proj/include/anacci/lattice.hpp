#pragma once

#include "anacci/solver.hpp"

#include <compare>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

// The (m, n)-anacci constants Phi^(n)(m) = lambda(m, n) for integer weight m
// and order n, their classical bounds, ordering and monotone sequences.
namespace anacci {

struct AnacciIndex {
  int m = 1;
  int n = 1;

  friend auto operator<=>(const AnacciIndex&, const AnacciIndex&) = default;
};

/// Memoized solves over the integer lattice. Readers share a lock; a miss
/// solves outside the lock and publishes the result, so two threads may solve
/// the same point once each and agree on the value.
class AnacciLattice {
 public:
  AnacciConstant constant(AnacciIndex idx);
  double value(AnacciIndex idx) { return constant(idx).value; }

  std::size_t cached() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, AnacciConstant> cache_;
};

/// Process-wide lattice used by the free functions below.
AnacciLattice& default_lattice();

/// Phi^(n)(m). Throws Error(InvalidArgument) when m < 1 or n < 1.
AnacciConstant anacci(AnacciIndex idx);

/// (m + 1 - 1/(m+1), m + 1). Throws Error(OrderOne) for n = 1, where Phi^(1)(m) = m.
BoundPair bounds_eq37(AnacciIndex idx);

/// Ordering of the solved values.
std::partial_ordering compare(AnacciIndex a, AnacciIndex b);

/// Ordering predicted by the stated total-order rule: larger n wins, ties broken by m.
std::strong_ordering rule_order(AnacciIndex a, AnacciIndex b);

/// The rule agrees with the solved values when both indices share m or share n.
bool rule_in_scope(AnacciIndex a, AnacciIndex b);

enum class Diagonal { KN, KM };  // (Phi^(n)(k n))_n and (Phi^(k m)(m))_m

std::vector<AnacciConstant> seq_fixed_m(int m, int n_max);
std::vector<AnacciConstant> seq_fixed_n(int n, int m_max);
std::vector<AnacciConstant> seq_diagonal(int k, int count, Diagonal which);

/// ((m+1)/m) Phi^(n)(m) for m = 1..m_max.
std::vector<double> scaled_seq_A(int n, int m_max);

/// Phi^(n)(m) / m for m = 1..m_max. Throws Error(OrderOne) for n = 1.
std::vector<double> scaled_seq_B(int n, int m_max);

}  // namespace anacci
