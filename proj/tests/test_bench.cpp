#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "partgen/bench.hpp"

using namespace partgen;

TEST_SUITE("bench") {

TEST_CASE("time_algorithm records reps samples with a stable checksum") {
  const BenchRecord rec = time_algorithm(30, Algorithm::kV3, 10);
  CHECK(rec.times_ns.size() == 10);
  CHECK(rec.checksum.count == 5604);
  CHECK(rec.min_ns <= rec.median_ns);
  CHECK(rec.min_ns <= rec.mean_ns);
  CHECK_THROWS_AS(time_algorithm(30, Algorithm::kV3, 0), DomainError);
}

TEST_CASE("checksums agree across versions and differ across n") {
  const auto a = time_algorithm(25, Algorithm::kV1, 1).checksum;
  const auto b = time_algorithm(25, Algorithm::kV2, 1).checksum;
  const auto c = time_algorithm(25, Algorithm::kV3, 1).checksum;
  CHECK(a.value == b.value);
  CHECK(b.value == c.value);
  CHECK(a.count == c.count);
  CHECK(time_algorithm(26, Algorithm::kV3, 1).checksum.value != c.value);
}

TEST_CASE("summarize") {
  BenchRecord rec;
  rec.times_ns = {5, 1, 3, 7};
  summarize(rec);
  CHECK(rec.mean_ns == doctest::Approx(4.0));
  CHECK(rec.median_ns == doctest::Approx(4.0));
  CHECK(rec.min_ns == 1);
}

TEST_CASE("CSV layout") {
  CountContext ctx;
  std::ostringstream empty;
  write_bench_csv(empty, std::vector<BenchRow>{});
  CHECK(empty.str() == "n,t1_ns,t2_ns,r,r1,r2\n");

  const std::vector<std::uint64_t> ns{20, 30};
  const auto rows = bench_table(ctx, ns, 3);
  std::ostringstream os;
  write_bench_csv(os, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,t1_ns,t2_ns,r,r1,r2");
  std::getline(in, line);
  CHECK(line.rfind("20,", 0) == 0);
  CHECK(line.find(",0.89557,0.82114") != std::string::npos);
  std::getline(in, line);
  CHECK(line.rfind("30,", 0) == 0);
  CHECK(line.find(',' + r1(ctx, 30).fixed(5) + ',' + r2(ctx, 30).fixed(5)) != std::string::npos);
  for (const auto& row : rows) CHECK(row.checksums_agree());
}

TEST_CASE("ratio CSV") {
  CountContext ctx;
  std::ostringstream os;
  write_ratio_csv(os, ratio_table(ctx, 3));
  CHECK(os.str() == "n,r1,r2\n2,1.08333,1.20000\n3," + r1(ctx, 3).fixed(5) + ',' +
                        r2(ctx, 3).fixed(5) + '\n');
}

}  // TEST_SUITE
