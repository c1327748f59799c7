#pragma once

#include "anacci/geometry.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anacci {

/// One inequality family: how many instances were checked, how many failed,
/// and the smallest margin seen (margin > 0 means the strict inequality holds,
/// margin >= 0 for the non-strict ones). Pass/fail families without a natural
/// margin leave worst_margin as NaN.
struct CheckFamily {
  std::string name;
  long long checks = 0;
  long long violations = 0;
  double worst_margin = 0.0;
  bool has_margin = false;

  void strict(double margin);
  void non_strict(double margin);
  void logical(bool ok);
  bool passed() const { return violations == 0 && checks > 0; }
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckFamily> families;
  bool passed() const;
  std::string to_text() const;
};

enum class Suite { Bounds, Monotone, Geometry, Appendices, All };

std::string_view to_string(Suite suite) noexcept;
Suite suite_from_string(std::string_view name);

struct VerifyOptions {
  int m_max = 50;
  int n_max = 10;
  std::uint64_t seed = 42;
  int random_points = 10000;
  std::uint64_t mc_samples = 1000000;
  unsigned threads = 0;
};

VerifyReport run_suite(Suite suite, const VerifyOptions& options = {});

/// Twelve scenes covering every body kind, both sides of lambda = 1 and
/// dimensions 1 through 5, used for the Monte Carlo cross-check.
std::vector<DilationScene> canonical_mc_scenes();

}  // namespace anacci
