#ifndef DEFCALC_SUITE_HPP
#define DEFCALC_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "defcalc/report.hpp"

namespace defcalc {

/// Check groups in run order.
inline const std::vector<std::string> kSuiteGroups{"numbers", "calculus", "series", "plane", "gl", "kz", "duality"};

struct SuiteConfig {
  /// Empty selects every group.
  std::vector<std::string> groups;
  /// Flatness and compatibility are checked at this (M, N).
  int M = 2;
  int N = 3;
  /// Truncation degree of the duality models.
  int degree = 3;
  /// Order of the exponential series.
  int order = 12;
  std::uint64_t seed = 7;
  int trials = 5;
  /// Exact symbolic flatness instead of seeded point evaluation.
  bool exact = false;

  /// Throws InvalidArgument outside M, N <= 4, order <= 16, 1 <= degree <= 4.
  void validate() const;
  Json to_json() const;
};

/// Every identity the library asserts, at desk-scale sizes. Deterministic in
/// the config.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

}  // namespace defcalc

#endif  // DEFCALC_SUITE_HPP
