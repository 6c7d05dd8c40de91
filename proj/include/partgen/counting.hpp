#pragma once

#include <cstdint>
#include <vector>

#include "partgen/bigcount.hpp"

namespace partgen {

// Counting conventions used throughout:
//   p(n, m)       partitions of n with every part >= m
//   p^(t)(n, m)   those whose largest part is at least t times the second
//                 largest; the one-part partition [n] always qualifies
//   p(n) = p(n, 1),  p^(t)(n) = p^(t)(n, 1),  p^(1) = p
// Boundary values: p^(t)(0, m) = 1, p^(t)(n, m) = 0 for m > n >= 1, and
// p(k) = 0 for k < 0 in the closed forms.

inline constexpr std::uint64_t kDefaultCountCap = 5000;

/// Memo tables for the restricted-partition recurrence
///
///   p^(t)(n, m) = p^(t)(n - m, m) + p^(t)(n, m + 1),  m <= n / (t + 1)
///
/// Rows are filled bottom-up in n, so no evaluation recurses. Only cells with
/// m <= n / (t + 1) are stored; every other (n, m) is 0 or 1 by the boundary
/// rules. Cells are write-once. A second, independent table holds the same
/// values computed from the explicit sum form and is only populated on demand.
class CountContext {
 public:
  explicit CountContext(std::uint64_t cap = kDefaultCountCap) : cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

  /// p^(t)(n, m) via the two-term recurrence.
  BigCount recurrence(std::uint64_t n, std::uint64_t m, std::uint64_t t);

  /// p^(t)(n, m) via 1 + sum_{k=m}^{n/(t+1)} p^(t)(n - k, k), with every
  /// inner term also taken from the sum form.
  BigCount sum_form(std::uint64_t n, std::uint64_t m, std::uint64_t t);

  /// Largest n for which the recurrence rows of t are materialized.
  std::uint64_t filled_to(std::uint64_t t) const;

 private:
  using Rows = std::vector<std::vector<BigCount>>;

  void check(std::uint64_t n, std::uint64_t m, std::uint64_t t) const;
  void extend(Rows& rows, std::uint64_t t, std::uint64_t n, bool sum);
  static const BigCount* boundary(std::uint64_t n, std::uint64_t m,
                                  std::uint64_t t);
  const BigCount& cell(const Rows& rows, std::uint64_t n, std::uint64_t m,
                       std::uint64_t t) const;
  Rows& rows_for(std::vector<Rows>& tables, std::uint64_t t);

  std::uint64_t cap_;
  std::vector<Rows> recurrence_;  // indexed [t - 1][n][m - 1]
  std::vector<Rows> sum_;
};

/// Number of partitions of n whose parts are all >= m.
BigCount restricted_count(CountContext& ctx, std::uint64_t n, std::uint64_t m);

/// p(n), OEIS A000041.
BigCount partition_count(CountContext& ctx, std::uint64_t n);

/// p^(t)(n, m).
BigCount ratio_restricted_count(CountContext& ctx, std::uint64_t n,
                                std::uint64_t m, std::uint64_t t);

/// p^(t)(n).
BigCount ratio_count(CountContext& ctx, std::uint64_t n, std::uint64_t t);

/// p^(t)(n, m) from the sum form. Requires 1 <= m <= n / (t + 1).
BigCount ratio_count_via_sum(CountContext& ctx, std::uint64_t n,
                             std::uint64_t m, std::uint64_t t);

/// p^(t)(n, m) by repeatedly applying
///   p^(t)(n, m) = p^(t-1)(n, m) - p^(t-1)(n - t, m)
/// down to t = 1. Requires n > t > 1 and m <= n / (t + 1).
BigCount ratio_count_via_reduction(CountContext& ctx, std::uint64_t n,
                                   std::uint64_t m, std::uint64_t t);

/// p^(2)(n) = p(n) - p(n-2), n >= 1.
BigCount p2_closed(CountContext& ctx, std::uint64_t n);

/// p^(3)(n) = p(n) - p(n-2) - p(n-3) + p(n-5), n >= 1.
BigCount p3_closed(CountContext& ctx, std::uint64_t n);

struct InequalityViolation {
  std::uint64_t n;
  enum class Kind { kPartitionBound, kP3BelowP2Shifted } kind;
  BigCount lhs;
  BigCount rhs;
};

struct InequalityReport {
  std::uint64_t n_max = 0;
  std::vector<InequalityViolation> violations;
  // n for which p(n) == p(n-1) + p(n-2) - p(n-5) holds with equality.
  std::vector<std::uint64_t> bound_equalities;

  bool ok() const { return violations.empty(); }
};

/// Checks, for every 1 <= n <= n_max,
///   p(n) <= p(n-1) + p(n-2) - p(n-5)
/// and, for n >= 2, p^(3)(n) <= p^(2)(n-1).
InequalityReport check_inequalities(CountContext& ctx, std::uint64_t n_max);

}  // namespace partgen
