#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "partgen/analysis.hpp"
#include "partgen/generate.hpp"

namespace partgen {

/// Order-sensitive hash of a generated stream. Only the length and the last
/// part of each composition are folded in, which is enough to tell two
/// different streams apart while keeping the per-composition cost O(1).
struct StreamChecksum {
  std::uint64_t value = 0;
  std::uint64_t count = 0;

  void operator()(CompositionView c) {
    value = value * 0x100000001b3ULL + c.size();
    value = value * 0x100000001b3ULL + c.back();
    ++count;
  }
};

struct BenchRecord {
  std::uint64_t n = 0;
  Algorithm algorithm = Algorithm::kV3;
  std::uint64_t reps = 0;
  std::vector<std::uint64_t> times_ns;
  double mean_ns = 0;
  double median_ns = 0;
  std::uint64_t min_ns = 0;
  StreamChecksum checksum;  // from the untimed warmup; every run must match
};

/// One untimed warmup, then `reps` timed runs of the uninstrumented
/// generator with a StreamChecksum consumer. Throws DomainError if reps == 0
/// or if any run's checksum differs from the warmup's.
BenchRecord time_algorithm(std::uint64_t n, Algorithm alg, std::uint64_t reps);

/// mean / median / min recomputed from times_ns.
void summarize(BenchRecord& rec);

struct BenchRow {
  std::uint64_t n = 0;
  BenchRecord v3;  // t1
  BenchRecord v2;  // t2
  ExactRatio r1;
  ExactRatio r2;

  double t1_ns() const { return v3.mean_ns; }
  double t2_ns() const { return v2.mean_ns; }
  double r() const { return t1_ns() / t2_ns(); }
  bool checksums_agree() const {
    return v3.checksum.value == v2.checksum.value &&
           v3.checksum.count == v2.checksum.count;
  }
};

std::vector<BenchRow> bench_table(CountContext& ctx, std::span<const std::uint64_t> ns,
                                  std::uint64_t reps);

/// CSV with header n,t1_ns,t2_ns,r,r1,r2. Times are integer nanoseconds
/// (rounded means), ratios have 5 decimals.
void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows);

/// CSV with header n,r1,r2 and 5-decimal ratios.
void write_ratio_csv(std::ostream& os, const RatioScan& scan);

}  // namespace partgen
