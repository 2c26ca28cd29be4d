#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace brwdec::acceptance {

struct Options {
  std::uint64_t seed = 0x5eed'b0a7;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Counts and the first few failures.
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 13;

/// Criterion `id` in 1..kCriterionCount.
CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run_all(const Options& options);

/// One line per criterion plus a total; true iff every criterion passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace brwdec::acceptance
