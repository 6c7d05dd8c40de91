// partgen: partition counting, ascending-composition generation, operation
// count verification, tree export, ratio scans and benchmarks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partgen/analysis.hpp"
#include "partgen/bench.hpp"
#include "partgen/counting.hpp"
#include "partgen/errors.hpp"
#include "partgen/generate.hpp"
#include "partgen/ptree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

using partgen::Algorithm;

// Buffered writer for the generate subcommand; one fwrite per 64 KiB.
class LineWriter {
 public:
  explicit LineWriter(std::FILE* out) : out_(out) { buf_.reserve(kFlushAt + 512); }
  ~LineWriter() { flush(); }
  LineWriter(const LineWriter&) = delete;
  LineWriter& operator=(const LineWriter&) = delete;

  void line(partgen::CompositionView parts, bool descending) {
    const std::size_t len = parts.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (i != 0) buf_.push_back(' ');
      const partgen::Part v = descending ? parts[len - 1 - i] : parts[i];
      char tmp[24];
      auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, v);
      buf_.append(tmp, end);
    }
    buf_.push_back('\n');
    if (buf_.size() >= kFlushAt) flush();
  }

  void flush() {
    if (!buf_.empty()) std::fwrite(buf_.data(), 1, buf_.size(), out_);
    buf_.clear();
    std::fflush(out_);
  }

 private:
  static constexpr std::size_t kFlushAt = 1 << 16;
  std::FILE* out_;
  std::string buf_;
};

// Writes to --out PATH when given, standard output otherwise.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw partgen::DomainError("cannot open output file: " + path);
  fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer partitions as ascending compositions: counting, "
               "generation and operation-count verification"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "Print p(n), p(n,M) or p^(T)(n,M)");
  std::uint64_t count_n = 0;
  std::optional<std::uint64_t> min_part;
  std::optional<std::uint64_t> ratio_t;
  count->add_option("n", count_n, "Integer to partition")->required();
  count->add_option("--min-part", min_part, "Smallest allowed part M")
      ->check(CLI::PositiveNumber);
  count->add_option("--ratio-t", ratio_t,
                    "Require largest part >= T * second largest")
      ->check(CLI::PositiveNumber);

  // generate
  auto* gen = app.add_subcommand("generate", "Stream ascending compositions of n");
  std::uint64_t gen_n = 0;
  int gen_alg = 3;
  std::optional<std::uint64_t> limit;
  bool descending = false;
  gen->add_option("n", gen_n, "Integer to partition")->required();
  gen->add_option("--alg", gen_alg, "Generator version")
      ->check(CLI::IsMember({1, 2, 3}))
      ->capture_default_str();
  gen->add_option("--limit", limit, "Stop after K compositions");
  gen->add_flag("--descending", descending,
                "Print parts largest first (partition convention)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  std::uint64_t verify_max_n = 60;
  verify->add_option("--max-n", verify_max_n, "Upper n for exact checks")
      ->capture_default_str();

  // tree
  auto* tree = app.add_subcommand("tree", "Export a partition tree as DOT");
  std::uint64_t tree_n = 0;
  std::string tree_kind;
  std::string tree_out;
  tree->add_option("n", tree_n, "Integer (<= 40)")->required();
  tree->add_option("--kind", tree_kind, "partition or binary")
      ->required()
      ->check(CLI::IsMember({"partition", "binary"}));
  tree->add_option("--out", tree_out, "Output path (default stdout)");

  // ratios
  auto* ratios = app.add_subcommand("ratios", "CSV of theoretical ratios r1, r2");
  std::uint64_t ratios_max_n = 1500;
  std::string ratios_out;
  ratios->add_option("--max-n", ratios_max_n, "Largest n")->capture_default_str();
  ratios->add_option("--out", ratios_out, "Output path (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Time versions 3 and 2");
  std::vector<std::uint64_t> bench_ns;
  std::uint64_t bench_reps = 10;
  std::string bench_out;
  bench->add_option("--n", bench_ns, "Comma-separated n values")
      ->required()
      ->delimiter(',');
  bench->add_option("--reps", bench_reps, "Timed repetitions per point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", bench_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    partgen::CountContext ctx;

    if (count->parsed()) {
      partgen::BigCount value;
      if (ratio_t) {
        value = partgen::ratio_restricted_count(ctx, count_n, min_part.value_or(1), *ratio_t);
      } else if (min_part) {
        value = partgen::restricted_count(ctx, count_n, *min_part);
      } else {
        value = partgen::partition_count(ctx, count_n);
      }
      std::cout << value << '\n';
      return kExitOk;
    }

    if (gen->parsed()) {
      if (limit && *limit == 0) return kExitOk;
      LineWriter out(stdout);
      std::uint64_t emitted = 0;
      partgen::generate(static_cast<Algorithm>(gen_alg), gen_n,
                        [&](partgen::CompositionView c) {
                          out.line(c, descending);
                          ++emitted;
                          return !limit || emitted < *limit;
                        });
      return kExitOk;
    }

    if (verify->parsed()) {
      const partgen::VerificationReport report = partgen::run_verification(ctx, verify_max_n);
      std::size_t passed = 0;
      for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
        passed += c.passed ? 1 : 0;
      }
      std::cout << "verify: " << passed << "/" << report.checks.size() << " checks passed\n";
      return report.ok() ? kExitOk : kExitVerifyFailed;
    }

    if (tree->parsed()) {
      const partgen::Tree t = tree_kind == "partition" ? partgen::build_partition_tree(tree_n)
                                                      : partgen::build_strict_tree(tree_n);
      const std::string dot = partgen::to_dot(t);
      with_output(tree_out, [&](std::ostream& os) { os << dot; });
      return kExitOk;
    }

    if (ratios->parsed()) {
      const partgen::RatioScan scan = partgen::ratio_table(ctx, ratios_max_n);
      with_output(ratios_out, [&](std::ostream& os) { partgen::write_ratio_csv(os, scan); });
      if (!scan.rows.empty()) {
        std::cerr << "argmin r1: n=" << scan.argmin_r1 << ", argmin r2: n=" << scan.argmin_r2
                  << '\n';
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      const auto rows = partgen::bench_table(ctx, bench_ns, bench_reps);
      with_output(bench_out, [&](std::ostream& os) { partgen::write_bench_csv(os, rows); });
      bool agree = true;
      for (const auto& row : rows) {
        std::cerr << "n=" << row.n << " checksum v3=" << row.v3.checksum.value
                  << " v2=" << row.v2.checksum.value << " compositions=" << row.v3.checksum.count
                  << (row.checksums_agree() ? "" : "  MISMATCH") << '\n';
        agree = agree && row.checksums_agree();
      }
      return agree ? kExitOk : kExitVerifyFailed;
    }
  } catch (const partgen::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const partgen::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return kExitUsage;
}
