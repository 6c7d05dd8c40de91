#include "partgen/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "partgen/errors.hpp"

namespace partgen {

namespace {

StreamChecksum run_once(std::uint64_t n, Algorithm alg) {
  StreamChecksum sum;
  generate(alg, n, sum);
  return sum;
}

std::string round_ns(double ns) {
  return std::to_string(static_cast<std::uint64_t>(std::llround(ns)));
}

}  // namespace

void summarize(BenchRecord& rec) {
  const auto& t = rec.times_ns;
  if (t.empty()) {
    rec.mean_ns = rec.median_ns = 0;
    rec.min_ns = 0;
    return;
  }
  rec.mean_ns = std::accumulate(t.begin(), t.end(), 0.0) / static_cast<double>(t.size());
  std::vector<std::uint64_t> sorted = t;
  std::ranges::sort(sorted);
  const std::size_t mid = sorted.size() / 2;
  rec.median_ns = sorted.size() % 2 == 1
                      ? static_cast<double>(sorted[mid])
                      : (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;
  rec.min_ns = sorted.front();
}

BenchRecord time_algorithm(std::uint64_t n, Algorithm alg, std::uint64_t reps) {
  if (reps == 0) throw DomainError("time_algorithm requires reps >= 1");
  BenchRecord rec;
  rec.n = n;
  rec.algorithm = alg;
  rec.reps = reps;
  rec.checksum = run_once(n, alg);
  rec.times_ns.reserve(reps);
  for (std::uint64_t i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const StreamChecksum sum = run_once(n, alg);
    const auto stop = std::chrono::steady_clock::now();
    if (sum.value != rec.checksum.value || sum.count != rec.checksum.count) {
      throw DomainError("time_algorithm: checksum changed between runs");
    }
    rec.times_ns.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
  }
  summarize(rec);
  return rec;
}

std::vector<BenchRow> bench_table(CountContext& ctx, std::span<const std::uint64_t> ns,
                                  std::uint64_t reps) {
  std::vector<BenchRow> rows;
  for (std::uint64_t n : ns) {
    BenchRow row;
    row.n = n;
    row.v3 = time_algorithm(n, Algorithm::kV3, reps);
    row.v2 = time_algorithm(n, Algorithm::kV2, reps);
    row.r1 = r1(ctx, n);
    row.r2 = r2(ctx, n);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows) {
  os << "n,t1_ns,t2_ns,r,r1,r2\n";
  for (const BenchRow& row : rows) {
    const double r = row.r();
    // r is a measurement; render it with the same 5 decimals as the exact
    // ratios.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", r);
    os << row.n << ',' << round_ns(row.t1_ns()) << ',' << round_ns(row.t2_ns())
       << ',' << buf << ',' << row.r1.fixed(5) << ',' << row.r2.fixed(5) << '\n';
  }
}

void write_ratio_csv(std::ostream& os, const RatioScan& scan) {
  os << "n,r1,r2\n";
  for (const RatioRecord& rec : scan.rows) {
    os << rec.n << ',' << rec.r1.fixed(5) << ',' << rec.r2.fixed(5) << '\n';
  }
}

}  // namespace partgen
