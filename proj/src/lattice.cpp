#include "anacci/lattice.hpp"

#include "anacci/error.hpp"

#include <mutex>
#include <string>

namespace anacci {
namespace {

void require_index(AnacciIndex idx) {
  if (idx.m < 1 || idx.n < 1) {
    throw Error(ErrorCode::InvalidArgument, "lattice index needs m >= 1 and n >= 1 (got m=" +
                                                std::to_string(idx.m) + ", n=" + std::to_string(idx.n) + ")");
  }
}

void require_length(int length) {
  if (length < 1) throw Error(ErrorCode::InvalidArgument, "sequence length must be >= 1");
}

}  // namespace

AnacciConstant AnacciLattice::constant(AnacciIndex idx) {
  require_index(idx);
  const std::pair key{idx.m, idx.n};
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  AnacciConstant solved = solve_lambda(idx.m, idx.n);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, solved).first->second;
}

std::size_t AnacciLattice::cached() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

AnacciLattice& default_lattice() {
  static AnacciLattice lattice;
  return lattice;
}

AnacciConstant anacci(AnacciIndex idx) { return default_lattice().constant(idx); }

BoundPair bounds_eq37(AnacciIndex idx) {
  require_index(idx);
  if (idx.n == 1) throw Error(ErrorCode::OrderOne, "Phi^(1)(m) = m exactly; the open bounds need n > 1");
  const double m = idx.m;
  return {lower_bound_refined(m), m + 1.0, BoundSource::Refined};
}

std::partial_ordering compare(AnacciIndex a, AnacciIndex b) {
  return compare_values(anacci(a), anacci(b));
}

std::strong_ordering rule_order(AnacciIndex a, AnacciIndex b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  return a.m <=> b.m;
}

bool rule_in_scope(AnacciIndex a, AnacciIndex b) { return a.m == b.m || a.n == b.n; }

std::vector<AnacciConstant> seq_fixed_m(int m, int n_max) {
  require_length(n_max);
  std::vector<AnacciConstant> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(anacci({m, n}));
  return out;
}

std::vector<AnacciConstant> seq_fixed_n(int n, int m_max) {
  require_length(m_max);
  std::vector<AnacciConstant> out;
  for (int m = 1; m <= m_max; ++m) out.push_back(anacci({m, n}));
  return out;
}

std::vector<AnacciConstant> seq_diagonal(int k, int count, Diagonal which) {
  require_length(count);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "diagonal step k must be >= 1");
  std::vector<AnacciConstant> out;
  for (int j = 1; j <= count; ++j) {
    out.push_back(which == Diagonal::KN ? anacci({k * j, j}) : anacci({j, k * j}));
  }
  return out;
}

std::vector<double> scaled_seq_A(int n, int m_max) {
  require_length(m_max);
  std::vector<double> out;
  for (int m = 1; m <= m_max; ++m) out.push_back((m + 1.0) / m * anacci({m, n}).value);
  return out;
}

std::vector<double> scaled_seq_B(int n, int m_max) {
  require_length(m_max);
  if (n == 1) throw Error(ErrorCode::OrderOne, "Phi^(1)(m)/m is identically 1");
  std::vector<double> out;
  for (int m = 1; m <= m_max; ++m) out.push_back(anacci({m, n}).value / m);
  return out;
}

}  // namespace anacci
