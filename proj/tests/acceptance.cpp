// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "partgen/analysis.hpp"
#include "partgen/bench.hpp"
#include "partgen/counting.hpp"
#include "partgen/generate.hpp"
#include "partgen/oracle.hpp"
#include "partgen/ptree.hpp"
#include "partgen/traversal.hpp"

using namespace partgen;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string str(const BigCount& b) { return b.str(); }

struct ReferenceRow {
  std::uint64_t n;
  double r1;
  double r2;
};

const std::vector<ReferenceRow> kTable = {
    {20, 0.89556, 0.82113},  {30, 0.88738, 0.79381},  {40, 0.88467, 0.77992},
    {50, 0.88403, 0.77197},  {60, 0.88438, 0.76731},  {70, 0.88525, 0.76465},
    {80, 0.88639, 0.76326},  {90, 0.88766, 0.76271},  {100, 0.88901, 0.76274},
    {110, 0.89037, 0.76319}, {120, 0.89174, 0.76392}, {130, 0.89308, 0.76485}};

Outcome oracle_generation(CountContext& ctx) {
  Outcome o;
  const Algorithm algs[] = {Algorithm::kV1, Algorithm::kV2, Algorithm::kV3};
  for (std::uint64_t n = 1; n <= 45; ++n) {
    const auto expected = oracle::brute_compositions(n, 1);
    if (BigCount{expected.size()} != partition_count(ctx, n)) {
      o.fail("oracle size != p(" + std::to_string(n) + ")");
    }
    for (Algorithm alg : algs) {
      if (collect(alg, n) != expected) {
        o.fail(std::string(to_string(alg)) + " differs at n=" + std::to_string(n));
      }
    }
  }
  if (o.passed) o.detail = "n=1..45, 3 generators";
  return o;
}

Outcome worked_counts(CountContext& ctx) {
  Outcome o;
  auto expect = [&](const char* what, const BigCount& got, std::uint64_t want) {
    if (got != BigCount{want}) o.fail(std::string(what) + " = " + str(got));
  };
  expect("p2(15,3)", ratio_restricted_count(ctx, 15, 3, 2), 7);
  expect("p2(12,3)", ratio_restricted_count(ctx, 12, 3, 2), 4);
  expect("p2(15,4)", ratio_restricted_count(ctx, 15, 4, 2), 3);
  expect("p3(15,3)", ratio_restricted_count(ctx, 15, 3, 3), 3);
  expect("p2(5)", ratio_count(ctx, 5, 2), 4);
  expect("p3(5)", ratio_count(ctx, 5, 3), 3);
  for (std::uint64_t t = 2; t <= 5; ++t) {
    expect(("p" + std::to_string(t) + "(t+1,1)").c_str(),
           ratio_restricted_count(ctx, t + 1, 1, t), 2);
  }
  if (o.passed) o.detail = "11 values";
  return o;
}

Outcome counting_cross_paths(CountContext& ctx) {
  Outcome o;
  std::uint64_t compared = 0;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t m = 1; m <= n; ++m) {
      for (std::uint64_t t = 1; t <= 4; ++t) {
        const BigCount rec = ratio_restricted_count(ctx, n, m, t);
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + "," +
                               std::to_string(t) + ")";
        if (rec != BigCount{oracle::brute_ratio_count(n, m, t)}) o.fail("oracle at " + at);
        ++compared;
        if (m <= n / (t + 1)) {
          if (ratio_count_via_sum(ctx, n, m, t) != rec) o.fail("sum form at " + at);
          ++compared;
          if (t > 1 && n > t) {
            if (ratio_count_via_reduction(ctx, n, m, t) != rec) o.fail("reduction at " + at);
            ++compared;
          }
        }
        if (m == 1 && t == 2 && p2_closed(ctx, n) != rec) o.fail("p2 closed at " + at);
        if (m == 1 && t == 3 && p3_closed(ctx, n) != rec) o.fail("p3 closed at " + at);
      }
    }
  }
  for (std::uint64_t n = 1; n <= 300; ++n) {
    if (p2_closed(ctx, n) != ratio_count(ctx, n, 2)) o.fail("p2 closed at " + std::to_string(n));
    if (p3_closed(ctx, n) != ratio_count(ctx, n, 3)) o.fail("p3 closed at " + std::to_string(n));
  }
  if (o.passed) o.detail = std::to_string(compared) + " comparisons for n<=60, closed forms to 300";
  return o;
}

Outcome tree_identities(CountContext& ctx) {
  Outcome o;
  for (std::uint64_t n = 1; n <= 25; ++n) {
    const std::uint64_t p = partition_count(ctx, n).to_u64();
    const Tree pt = build_partition_tree(n);
    const Tree st = build_strict_tree(n);
    if (pt.size() != 2 * p || pt.leaf_count() != p) o.fail("partition tree at " + std::to_string(n));
    if (st.size() != 2 * p - 1 || st.leaf_count() != p) o.fail("strict tree at " + std::to_string(n));
    if (n <= 20) {
      std::vector<std::vector<std::uint64_t>> decoded;
      for (const auto& path : root_to_leaf_paths(st)) decoded.push_back(decode_path(path));
      if (decoded != oracle::brute_compositions(n, 1)) o.fail("bijection at " + std::to_string(n));
    }
  }
  if (o.passed) o.detail = "counts n<=25, bijection n<=20";
  return o;
}

Outcome traversal_counters(CountContext& ctx) {
  Outcome o;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const std::uint64_t p = partition_count(ctx, n).to_u64();
    const std::uint64_t p2 = ratio_count(ctx, n, 2).to_u64();
    const std::uint64_t p3 = ratio_count(ctx, n, 3).to_u64();
    std::vector<Node> seq;
    seq.reserve(2 * p - 1);
    const OpCounters g = inorder_generic_implicit(n, [&](const Node& v) { seq.push_back(v); });
    auto matcher = [&](std::size_t& i, bool& same) {
      return [&](const Node& v) {
        same = same && i < seq.size() && seq[i] == v;
        ++i;
      };
    };
    std::size_t i1 = 0, i2 = 0;
    bool s1 = true, s2 = true;
    const OpCounters a = inorder_v1(n, matcher(i1, s1));
    const OpCounters b = inorder_v2(n, matcher(i2, s2));
    const std::string at = " at n=" + std::to_string(n);
    if (g.pushes != p - 1 || g.pops != g.pushes) o.fail("generic pushes" + at);
    if (a.pushes != p2 - 1 || a.pops != a.pushes) o.fail("v1 pushes" + at);
    if (b.pushes != p3 - 1 || b.pops != b.pushes) o.fail("v2 pushes" + at);
    if (!s1 || i1 != seq.size() || !s2 || i2 != seq.size()) o.fail("visit sequence" + at);
  }
  if (o.passed) o.detail = "n=2..60";
  return o;
}

Outcome op_counts(CountContext& ctx, bool v3) {
  Outcome o;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const OpCountCheck c = v3 ? verify_v3_counts(ctx, n) : verify_v2_counts(ctx, n);
    if (!c.passed) o.fail(c.detail);
  }
  const OpCountCheck twenty = v3 ? verify_v3_counts(ctx, 20) : verify_v2_counts(ctx, 20);
  if (o.passed) {
    o.detail = "n=2..60; n=20: " + std::to_string(twenty.measured.assignments) + " and " +
               std::to_string(twenty.measured.bool_evals);
  }
  return o;
}

Outcome table_columns(CountContext& ctx) {
  Outcome o;
  double worst = 0;
  for (const auto& row : kTable) {
    const double d1 = std::fabs(r1(ctx, row.n).value() - row.r1);
    const double d2 = std::fabs(r2(ctx, row.n).value() - row.r2);
    worst = std::max({worst, d1, d2});
    if (d1 > 2e-5 || d2 > 2e-5) o.fail("row " + std::to_string(row.n));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "12 rows, max |diff| %.2e", worst);
  if (o.passed) o.detail = buf;
  return o;
}

Outcome r2_minimum(CountContext& ctx) {
  Outcome o;
  const RatioScan scan = ratio_table(ctx, 1500);
  const std::string where = "argmin r2 over 2..1500 is n=" + std::to_string(scan.argmin_r2);
  if (scan.argmin_r2 < 50 || scan.argmin_r2 > 150) o.fail(where);
  if (o.passed) o.detail = where;
  return o;
}

Outcome inequalities(CountContext& ctx) {
  Outcome o;
  auto p = [&](std::int64_t k) { return k < 0 ? BigCount{0} : partition_count(ctx, static_cast<std::uint64_t>(k)); };
  std::vector<std::uint64_t> equal_at;
  for (std::int64_t n = 1; n <= 1000; ++n) {
    const BigCount lhs = p(n);
    const BigCount rhs = p(n - 1) + p(n - 2) - p(n - 5);
    if (lhs > rhs) o.fail("p bound violated at n=" + std::to_string(n));
    if (lhs == rhs) equal_at.push_back(static_cast<std::uint64_t>(n));
  }
  if (equal_at != std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6}) o.fail("equality set differs from {1..6}");
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    if (ratio_count(ctx, n, 3) > ratio_count(ctx, n - 1, 2)) {
      o.fail("p3(n) > p2(n-1) at n=" + std::to_string(n));
    }
  }
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    const BigCount lhs = ratio_count(ctx, n, 3) * 4;
    const BigCount rhs = ratio_count(ctx, n, 2) * 3;
    if (lhs > rhs) {
      o.fail("4p3(n) > 3p2(n) at n=" + std::to_string(n) + ": " + str(lhs) + " > " + str(rhs));
    }
  }
  if (o.passed) o.detail = "n<=1000";
  return o;
}

Outcome benchmark(CountContext& ctx) {
  Outcome o;
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 20; n <= 100; n += 10) ns.push_back(n);
  const auto rows = bench_table(ctx, ns, 10);

  std::ostringstream csv;
  write_bench_csv(csv, rows);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  if (line != "n,t1_ns,t2_ns,r,r1,r2") o.fail("bad header");

  std::string rs;
  for (const BenchRow& row : rows) {
    if (!std::getline(in, line)) {
      o.fail("missing row");
      break;
    }
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    if (cells.size() != 6 || cells[0] != std::to_string(row.n)) o.fail("malformed row: " + line);
    if (cells.size() == 6) {
      if (cells[4] != r1(ctx, row.n).fixed(5) || cells[5] != r2(ctx, row.n).fixed(5)) {
        o.fail("ratio columns at n=" + std::to_string(row.n));
      }
      for (const auto& t : kTable) {
        if (t.n == row.n && (std::fabs(std::stod(cells[4]) - t.r1) > 2e-5 ||
                             std::fabs(std::stod(cells[5]) - t.r2) > 2e-5)) {
          o.fail("ratio columns disagree with the table at n=" + std::to_string(row.n));
        }
      }
      rs += (rs.empty() ? "" : " ") + cells[3];
    }
    const StreamChecksum v1 = time_algorithm(row.n, Algorithm::kV1, 1).checksum;
    if (!row.checksums_agree() || v1.value != row.v3.checksum.value ||
        v1.count != row.v3.checksum.count) {
      o.fail("checksum mismatch at n=" + std::to_string(row.n));
    }
    if (BigCount{row.v3.checksum.count} != partition_count(ctx, row.n)) {
      o.fail("composition count at n=" + std::to_string(row.n));
    }
  }
  if (o.passed) o.detail = "n=20..100 reps=10, measured r: " + rs;
  return o;
}

}  // namespace

int main() {
  CountContext ctx;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"generation matches brute force", [&] { return oracle_generation(ctx); }},
      {"worked counts", [&] { return worked_counts(ctx); }},
      {"counting cross-paths", [&] { return counting_cross_paths(ctx); }},
      {"tree identities", [&] { return tree_identities(ctx); }},
      {"traversal counters", [&] { return traversal_counters(ctx); }},
      {"version 2 operation counts", [&] { return op_counts(ctx, false); }},
      {"version 3 operation counts", [&] { return op_counts(ctx, true); }},
      {"ratio table columns", [&] { return table_columns(ctx); }},
      {"r2 minimum location", [&] { return r2_minimum(ctx); }},
      {"inequalities", [&] { return inequalities(ctx); }},
      {"benchmark harness", [&] { return benchmark(ctx); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu  %-32s %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
