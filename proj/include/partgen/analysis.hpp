#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partgen/bigcount.hpp"
#include "partgen/counting.hpp"
#include "partgen/op_counters.hpp"

namespace partgen {

/// Exact nonnegative rational num / den, den > 0.
struct ExactRatio {
  BigCount num;
  BigCount den{1};

  double value() const;
  /// Decimal rendering with `digits` fractional digits, rounded half to even.
  std::string fixed(int digits) const;

  friend bool operator==(const ExactRatio& a, const ExactRatio& b);
  friend bool operator<(const ExactRatio& a, const ExactRatio& b);
};

/// Ratio of assignment counts, version 3 over version 2:
///   (p(n) + 1.25 p^(3)(n)) / (p(n) + p^(2)(n)).  n >= 2.
ExactRatio r1(CountContext& ctx, std::uint64_t n);

/// Ratio of boolean evaluations, version 3 over version 2:
///   (p(n) + 4 p^(3)(n)) / (p(n) + 3 p^(2)(n)).  n >= 2.
ExactRatio r2(CountContext& ctx, std::uint64_t n);

struct RatioRecord {
  std::uint64_t n;
  ExactRatio r1;
  ExactRatio r2;
};

struct RatioScan {
  std::vector<RatioRecord> rows;  // n = 2 .. n_max
  std::uint64_t argmin_r1 = 0;    // smallest n attaining the minimum
  std::uint64_t argmin_r2 = 0;
  // n where 0 < r < 1 failed; expected empty.
  std::vector<std::uint64_t> out_of_range;
};

RatioScan ratio_table(CountContext& ctx, std::uint64_t n_max);

struct OpCountCheck {
  std::uint64_t n = 0;
  bool passed = false;
  BigCount expected_assignments;
  BigCount expected_bool_evals;
  OpCounters measured;
  std::string detail;
};

/// Runs instrumented version 2 and compares with 4p + 4p^(2), p + 3p^(2).
OpCountCheck verify_v2_counts(CountContext& ctx, std::uint64_t n);

/// Runs instrumented version 3 and compares with 4p + 5p^(3), p + 4p^(3).
OpCountCheck verify_v3_counts(CountContext& ctx, std::uint64_t n);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// The full self-check run by `partgen verify`: oracle equivalence of the
/// generators, counting cross-paths, tree identities, traversal counters,
/// exact operation counts for 2 <= n <= max_n, and the inequalities up to
/// n = 1000.
VerificationReport run_verification(CountContext& ctx, std::uint64_t max_n);

}  // namespace partgen
