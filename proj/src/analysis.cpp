#include "partgen/analysis.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "partgen/errors.hpp"
#include "partgen/generate.hpp"
#include "partgen/oracle.hpp"
#include "partgen/ptree.hpp"
#include "partgen/traversal.hpp"

namespace partgen {

namespace mp = boost::multiprecision;

double ExactRatio::value() const {
  return mp::cpp_rational(num.raw(), den.raw()).convert_to<double>();
}

std::string ExactRatio::fixed(int digits) const {
  if (digits < 0) throw DomainError("fixed: negative digit count");
  const mp::cpp_int scale = mp::pow(mp::cpp_int(10), digits);
  mp::cpp_int q;
  mp::cpp_int r;
  mp::divide_qr(num.raw() * scale, den.raw(), q, r);
  const mp::cpp_int twice = 2 * r;
  if (twice > den.raw() || (twice == den.raw() && (q & 1) != 0)) ++q;

  std::string int_part = mp::cpp_int(q / scale).str();
  if (digits == 0) return int_part;
  std::string frac = mp::cpp_int(q % scale).str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return int_part + "." + frac;
}

bool operator==(const ExactRatio& a, const ExactRatio& b) {
  return a.num.raw() * b.den.raw() == b.num.raw() * a.den.raw();
}

bool operator<(const ExactRatio& a, const ExactRatio& b) {
  return a.num.raw() * b.den.raw() < b.num.raw() * a.den.raw();
}

namespace {

void require_ratio_n(std::uint64_t n) {
  if (n < 2) throw DomainError("ratios are defined for n >= 2");
}

}  // namespace

ExactRatio r1(CountContext& ctx, std::uint64_t n) {
  require_ratio_n(n);
  const BigCount p = partition_count(ctx, n);
  const BigCount p2 = ratio_count(ctx, n, 2);
  const BigCount p3 = ratio_count(ctx, n, 3);
  // 1.25 = 5/4, scaled through by 4.
  return {4 * p + 5 * p3, 4 * p + 4 * p2};
}

ExactRatio r2(CountContext& ctx, std::uint64_t n) {
  require_ratio_n(n);
  const BigCount p = partition_count(ctx, n);
  const BigCount p2 = ratio_count(ctx, n, 2);
  const BigCount p3 = ratio_count(ctx, n, 3);
  return {p + 4 * p3, p + 3 * p2};
}

RatioScan ratio_table(CountContext& ctx, std::uint64_t n_max) {
  if (n_max > ctx.cap()) {
    throw CapacityError("ratio_table: n_max exceeds count cap");
  }
  RatioScan scan;
  auto in_unit_interval = [](const ExactRatio& r) {
    return r.num > BigCount{0} && r.num < r.den;
  };
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    RatioRecord rec{n, r1(ctx, n), r2(ctx, n)};
    if (!in_unit_interval(rec.r1) || !in_unit_interval(rec.r2)) {
      scan.out_of_range.push_back(n);
    }
    if (scan.rows.empty() || rec.r1 < scan.rows[scan.argmin_r1 - 2].r1) {
      scan.argmin_r1 = n;
    }
    if (scan.rows.empty() || rec.r2 < scan.rows[scan.argmin_r2 - 2].r2) {
      scan.argmin_r2 = n;
    }
    scan.rows.push_back(std::move(rec));
  }
  return scan;
}

namespace {

OpCountCheck compare_counts(std::uint64_t n, const OpCounters& measured,
                            BigCount assignments, BigCount bool_evals,
                            const BigCount& p) {
  OpCountCheck check;
  check.n = n;
  check.measured = measured;
  check.expected_assignments = std::move(assignments);
  check.expected_bool_evals = std::move(bool_evals);
  const bool a_ok = BigCount{measured.assignments} == check.expected_assignments;
  const bool b_ok = BigCount{measured.bool_evals} == check.expected_bool_evals;
  const bool v_ok = BigCount{measured.visits} == p;
  check.passed = a_ok && b_ok && v_ok;
  std::ostringstream os;
  os << "n=" << n << " assignments " << measured.assignments
     << (a_ok ? " = " : " != ") << check.expected_assignments << ", bool_evals "
     << measured.bool_evals << (b_ok ? " = " : " != ")
     << check.expected_bool_evals << ", visits " << measured.visits
     << (v_ok ? " = " : " != ") << p;
  check.detail = os.str();
  return check;
}

}  // namespace

OpCountCheck verify_v2_counts(CountContext& ctx, std::uint64_t n) {
  require_ratio_n(n);
  const OpCounters c = gen_v2_counted(n, [](CompositionView) {});
  const BigCount p = partition_count(ctx, n);
  const BigCount p2 = ratio_count(ctx, n, 2);
  return compare_counts(n, c, 4 * p + 4 * p2, p + 3 * p2, p);
}

OpCountCheck verify_v3_counts(CountContext& ctx, std::uint64_t n) {
  require_ratio_n(n);
  const OpCounters c = gen_v3_counted(n, [](CompositionView) {});
  const BigCount p = partition_count(ctx, n);
  const BigCount p3 = ratio_count(ctx, n, 3);
  return compare_counts(n, c, 4 * p + 5 * p3, p + 4 * p3, p);
}

bool VerificationReport::ok() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

namespace {

constexpr std::uint64_t kTreeCheckMaxN = 25;
constexpr std::uint64_t kBijectionMaxN = 20;
constexpr std::uint64_t kInequalityMaxN = 1000;
// Visit sequences are held in memory; 2 p(60) - 1 nodes is about 1.9M.
constexpr std::uint64_t kTraversalCheckMaxN = 60;

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) {
      if (!text_.empty()) text_ += "; ";
      text_ += what;
    }
  }
  CheckResult result(std::string name, const std::string& ok_detail) const {
    if (count_ == 0) return {std::move(name), true, ok_detail};
    return {std::move(name), false,
            std::to_string(count_) + " failure(s): " + text_};
  }

 private:
  std::uint64_t count_ = 0;
  std::string text_;
};

CheckResult check_generators(CountContext& ctx, std::uint64_t max_n) {
  Failures f;
  const std::uint64_t top = std::min(max_n, oracle::kMaxListN);
  for (std::uint64_t n = 1; n <= top; ++n) {
    const auto expected = oracle::brute_compositions(n, 1);
    for (Algorithm alg : {Algorithm::kV1, Algorithm::kV2, Algorithm::kV3}) {
      if (collect(alg, n) != expected) {
        f.add(std::string(to_string(alg)) + " differs at n=" + std::to_string(n));
      }
    }
    if (BigCount{expected.size()} != partition_count(ctx, n)) {
      f.add("oracle size != p(" + std::to_string(n) + ")");
    }
  }
  return f.result("generators equal oracle listing",
                  "n <= " + std::to_string(top));
}

CheckResult check_counting(CountContext& ctx, std::uint64_t max_n) {
  Failures f;
  const std::uint64_t top = std::min(max_n, oracle::kMaxCountN);
  for (std::uint64_t n = 1; n <= top; ++n) {
    for (std::uint64_t m = 1; m <= n; ++m) {
      for (std::uint64_t t = 1; t <= 4; ++t) {
        const BigCount rec = ratio_restricted_count(ctx, n, m, t);
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) +
                               "," + std::to_string(t) + ")";
        if (rec != BigCount{oracle::brute_ratio_count(n, m, t)}) {
          f.add("recurrence != oracle at " + at);
        }
        if (m <= n / (t + 1)) {
          if (ratio_count_via_sum(ctx, n, m, t) != rec) f.add("sum form at " + at);
          if (t > 1 && ratio_count_via_reduction(ctx, n, m, t) != rec) {
            f.add("reduction at " + at);
          }
        }
      }
    }
  }
  const std::uint64_t closed_top = std::max<std::uint64_t>(max_n, 300);
  for (std::uint64_t n = 1; n <= closed_top; ++n) {
    if (p2_closed(ctx, n) != ratio_count(ctx, n, 2)) f.add("p2 closed form at n=" + std::to_string(n));
    if (p3_closed(ctx, n) != ratio_count(ctx, n, 3)) f.add("p3 closed form at n=" + std::to_string(n));
  }
  return f.result("counting cross-paths",
                  "exhaustive n <= " + std::to_string(top) +
                      ", closed forms n <= " + std::to_string(closed_top));
}

CheckResult check_trees(CountContext& ctx, std::uint64_t max_n) {
  Failures f;
  const std::uint64_t top = std::min(max_n, kTreeCheckMaxN);
  for (std::uint64_t n = 1; n <= top; ++n) {
    const std::uint64_t p = partition_count(ctx, n).to_u64();
    const Tree pt = build_partition_tree(n);
    const Tree st = build_strict_tree(n);
    const std::string at = " at n=" + std::to_string(n);
    if (pt.size() != 2 * p || pt.leaf_count() != p) f.add("partition tree size" + at);
    if (st.size() != 2 * p - 1 || st.leaf_count() != p) f.add("strict tree size" + at);
    if (n <= kBijectionMaxN) {
      std::vector<std::vector<std::uint64_t>> decoded;
      for (const auto& path : root_to_leaf_paths(st)) decoded.push_back(decode_path(path));
      std::ranges::sort(decoded);
      if (decoded != oracle::brute_compositions(n, 1)) f.add("path decoding" + at);
    }
  }
  return f.result("tree identities", "n <= " + std::to_string(top));
}

CheckResult check_traversals(CountContext& ctx, std::uint64_t max_n) {
  Failures f;
  const std::uint64_t top = std::min(max_n, kTraversalCheckMaxN);
  for (std::uint64_t n = 2; n <= top; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    std::vector<Node> reference;
    auto record = [&](const Node& v) { reference.push_back(v); };
    const OpCounters g = n <= kMaxMaterializedN
                             ? inorder_generic(build_strict_tree(n), record)
                             : inorder_generic_implicit(n, record);

    auto matcher = [&](std::size_t& pos, bool& same) {
      return [&](const Node& v) {
        same = same && pos < reference.size() && reference[pos] == v;
        ++pos;
      };
    };
    std::size_t pos1 = 0, pos2 = 0;
    bool same1 = true, same2 = true;
    const OpCounters c1 = inorder_v1(n, matcher(pos1, same1));
    const OpCounters c2 = inorder_v2(n, matcher(pos2, same2));
    if (!same1 || pos1 != reference.size()) f.add("v1 visit sequence" + at);
    if (!same2 || pos2 != reference.size()) f.add("v2 visit sequence" + at);

    const BigCount p = partition_count(ctx, n);
    const BigCount p2 = ratio_count(ctx, n, 2);
    const BigCount p3 = ratio_count(ctx, n, 3);
    if (BigCount{g.pushes + 1} != p || g.pops != g.pushes) f.add("generic pushes" + at);
    if (BigCount{c1.pushes + 1} != p2 || c1.pops != c1.pushes) f.add("v1 pushes" + at);
    if (BigCount{c2.pushes + 1} != p3 || c2.pops != c2.pushes) f.add("v2 pushes" + at);
  }
  return f.result("traversal counters and visit order",
                  "2 <= n <= " + std::to_string(top));
}

CheckResult check_op_counts(CountContext& ctx, std::uint64_t max_n, bool v3) {
  Failures f;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    const OpCountCheck c = v3 ? verify_v3_counts(ctx, n) : verify_v2_counts(ctx, n);
    if (!c.passed) f.add(c.detail);
  }
  return f.result(v3 ? "version 3 operation counts (4p+5p3, p+4p3)"
                     : "version 2 operation counts (4p+4p2, p+3p2)",
                  "2 <= n <= " + std::to_string(max_n));
}

CheckResult check_inequality_suite(CountContext& ctx) {
  Failures f;
  const std::uint64_t top = std::min(kInequalityMaxN, ctx.cap());
  const InequalityReport report = check_inequalities(ctx, top);
  for (const auto& v : report.violations) {
    f.add("violation at n=" + std::to_string(v.n) + ": " + v.lhs.str() + " > " +
          v.rhs.str());
  }
  std::vector<std::uint64_t> expected_equal;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(6, top); ++n) {
    expected_equal.push_back(n);
  }
  if (report.bound_equalities != expected_equal) {
    f.add("equality set of p(n) <= p(n-1)+p(n-2)-p(n-5) is not {1..6}");
  }
  return f.result("inequalities p(n) <= p(n-1)+p(n-2)-p(n-5), p3(n) <= p2(n-1)",
                  "n <= " + std::to_string(top) + ", equality exactly for n <= 6");
}

// 4 p^(3)(n) <= 3 p^(2)(n) fails at n = 2, where p^(2)(2) = p^(3)(2) = 1.
// The check covers n >= 3 and states the exception in its detail.
CheckResult check_version3_advantage(CountContext& ctx) {
  Failures f;
  const std::uint64_t top = std::min(kInequalityMaxN, ctx.cap());
  for (std::uint64_t n = 3; n <= top; ++n) {
    if (4 * ratio_count(ctx, n, 3) > 3 * ratio_count(ctx, n, 2)) {
      f.add("4p3 > 3p2 at n=" + std::to_string(n));
    }
  }
  return f.result("4p3(n) <= 3p2(n)",
                  "3 <= n <= " + std::to_string(top) +
                      " (n=2 is an exception: 4 > 3)");
}

}  // namespace

VerificationReport run_verification(CountContext& ctx, std::uint64_t max_n) {
  if (max_n > ctx.cap()) throw CapacityError("verify: max_n exceeds count cap");
  VerificationReport report;
  report.checks.push_back(check_generators(ctx, max_n));
  report.checks.push_back(check_counting(ctx, max_n));
  report.checks.push_back(check_trees(ctx, max_n));
  report.checks.push_back(check_traversals(ctx, max_n));
  report.checks.push_back(check_op_counts(ctx, max_n, false));
  report.checks.push_back(check_op_counts(ctx, max_n, true));
  report.checks.push_back(check_inequality_suite(ctx));
  report.checks.push_back(check_version3_advantage(ctx));
  return report;
}

}  // namespace partgen
