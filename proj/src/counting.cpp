#include "partgen/counting.hpp"

#include <string>
#include <unordered_map>

namespace partgen {

namespace {

const BigCount kZero{0};
const BigCount kOne{1};

// p(k) with p(k) = 0 for k < 0.
BigCount p_or_zero(CountContext& ctx, std::int64_t k) {
  if (k < 0) return kZero;
  return partition_count(ctx, static_cast<std::uint64_t>(k));
}

}  // namespace

void CountContext::check(std::uint64_t n, std::uint64_t m,
                         std::uint64_t t) const {
  if (n > cap_) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds count cap " +
                        std::to_string(cap_));
  }
  if (m == 0) throw DomainError("minimum part m must be >= 1");
  if (t == 0) throw DomainError("ratio t must be >= 1");
}

const BigCount* CountContext::boundary(std::uint64_t n, std::uint64_t m,
                                       std::uint64_t t) {
  if (n == 0) return &kOne;
  if (m > n) return &kZero;
  if (m > n / (t + 1)) return &kOne;
  return nullptr;
}

const BigCount& CountContext::cell(const Rows& rows, std::uint64_t n,
                                   std::uint64_t m, std::uint64_t t) const {
  if (const BigCount* b = boundary(n, m, t)) return *b;
  return rows[n][m - 1];
}

CountContext::Rows& CountContext::rows_for(std::vector<Rows>& tables,
                                           std::uint64_t t) {
  if (tables.size() < t) tables.resize(t);
  Rows& rows = tables[t - 1];
  if (rows.empty()) rows.emplace_back();  // n = 0 stores nothing
  return rows;
}

void CountContext::extend(Rows& rows, std::uint64_t t, std::uint64_t n,
                          bool sum) {
  rows.reserve(n + 1);
  for (std::uint64_t row_n = rows.size(); row_n <= n; ++row_n) {
    const std::uint64_t top = row_n / (t + 1);
    std::vector<BigCount> row(top);
    for (std::uint64_t m = top; m >= 1; --m) {
      if (sum) {
        BigCount acc = kOne;
        for (std::uint64_t k = m; k <= top; ++k) {
          acc += cell(rows, row_n - k, k, t);
        }
        row[m - 1] = std::move(acc);
      } else {
        const BigCount& next = m + 1 <= top ? row[m] : kOne;
        row[m - 1] = cell(rows, row_n - m, m, t) + next;
      }
    }
    rows.push_back(std::move(row));
  }
}

BigCount CountContext::recurrence(std::uint64_t n, std::uint64_t m,
                                  std::uint64_t t) {
  check(n, m, t);
  if (const BigCount* b = boundary(n, m, t)) return *b;
  Rows& rows = rows_for(recurrence_, t);
  if (rows.size() <= n) extend(rows, t, n, false);
  return rows[n][m - 1];
}

BigCount CountContext::sum_form(std::uint64_t n, std::uint64_t m,
                                std::uint64_t t) {
  check(n, m, t);
  if (const BigCount* b = boundary(n, m, t)) return *b;
  Rows& rows = rows_for(sum_, t);
  if (rows.size() <= n) extend(rows, t, n, true);
  return rows[n][m - 1];
}

std::uint64_t CountContext::filled_to(std::uint64_t t) const {
  if (t == 0 || recurrence_.size() < t || recurrence_[t - 1].empty()) return 0;
  return recurrence_[t - 1].size() - 1;
}

BigCount restricted_count(CountContext& ctx, std::uint64_t n, std::uint64_t m) {
  return ctx.recurrence(n, m, 1);
}

BigCount partition_count(CountContext& ctx, std::uint64_t n) {
  return restricted_count(ctx, n, 1);
}

BigCount ratio_restricted_count(CountContext& ctx, std::uint64_t n,
                                std::uint64_t m, std::uint64_t t) {
  return ctx.recurrence(n, m, t);
}

BigCount ratio_count(CountContext& ctx, std::uint64_t n, std::uint64_t t) {
  return ratio_restricted_count(ctx, n, 1, t);
}

BigCount ratio_count_via_sum(CountContext& ctx, std::uint64_t n,
                             std::uint64_t m, std::uint64_t t) {
  if (t == 0 || m == 0 || m > n / (t + 1)) {
    throw DomainError("sum form requires 1 <= m <= n/(t+1); got n=" +
                      std::to_string(n) + " m=" + std::to_string(m) +
                      " t=" + std::to_string(t));
  }
  return ctx.sum_form(n, m, t);
}

BigCount ratio_count_via_reduction(CountContext& ctx, std::uint64_t n,
                                   std::uint64_t m, std::uint64_t t) {
  if (t < 2 || n <= t || m == 0 || m > n / (t + 1)) {
    throw DomainError("reduction requires n > t > 1 and 1 <= m <= n/(t+1); "
                      "got n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " t=" + std::to_string(t));
  }
  if (n > ctx.cap()) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds count cap");
  }

  // Terms are keyed by (n', t'); memoizing keeps the expansion polynomial
  // instead of 2^t.
  std::unordered_map<std::uint64_t, BigCount> memo;
  auto eval = [&](auto& self, std::uint64_t nn, std::uint64_t tt) -> BigCount {
    if (tt == 1) return restricted_count(ctx, nn, m);
    if (nn == 0) return kOne;
    if (m > nn) return kZero;
    if (m > nn / (tt + 1)) return kOne;
    const std::uint64_t key = nn * (t + 1) + tt;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigCount v = self(self, nn, tt - 1) - self(self, nn - tt, tt - 1);
    memo.emplace(key, v);
    return v;
  };
  return eval(eval, n, t);
}

BigCount p2_closed(CountContext& ctx, std::uint64_t n) {
  if (n == 0) throw DomainError("p2_closed requires n >= 1");
  const auto k = static_cast<std::int64_t>(n);
  return p_or_zero(ctx, k) - p_or_zero(ctx, k - 2);
}

BigCount p3_closed(CountContext& ctx, std::uint64_t n) {
  if (n == 0) throw DomainError("p3_closed requires n >= 1");
  const auto k = static_cast<std::int64_t>(n);
  return p_or_zero(ctx, k) + p_or_zero(ctx, k - 5) - p_or_zero(ctx, k - 2) -
         p_or_zero(ctx, k - 3);
}

InequalityReport check_inequalities(CountContext& ctx, std::uint64_t n_max) {
  if (n_max > ctx.cap()) {
    throw CapacityError("n_max = " + std::to_string(n_max) +
                        " exceeds count cap " + std::to_string(ctx.cap()));
  }
  InequalityReport report;
  report.n_max = n_max;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto k = static_cast<std::int64_t>(n);
    BigCount lhs = partition_count(ctx, n);
    BigCount rhs = p_or_zero(ctx, k - 1) + p_or_zero(ctx, k - 2) -
                   p_or_zero(ctx, k - 5);
    if (lhs > rhs) {
      report.violations.push_back(
          {n, InequalityViolation::Kind::kPartitionBound, lhs, rhs});
    } else if (lhs == rhs) {
      report.bound_equalities.push_back(n);
    }

    if (n >= 2) {
      BigCount p3 = ratio_count(ctx, n, 3);
      BigCount p2_prev = ratio_count(ctx, n - 1, 2);
      if (p3 > p2_prev) {
        report.violations.push_back(
            {n, InequalityViolation::Kind::kP3BelowP2Shifted, p3, p2_prev});
      }
    }
  }
  return report;
}

}  // namespace partgen
