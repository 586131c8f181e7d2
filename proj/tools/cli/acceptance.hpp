#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liecubic::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0: no runtime limit
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Run criteria concurrently. Timings then include contention.
  bool parallel = false;
  /// Restrict to these criterion ids; empty runs all twelve.
  std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options);

/// "PASS  3 name: detail (1.23 s, limit 30 s)"
std::string format_result(const CriterionResult& r);

}  // namespace liecubic::cli
