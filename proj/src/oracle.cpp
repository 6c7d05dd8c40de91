#include "partgen/oracle.hpp"

#include <string>

#include "partgen/errors.hpp"

namespace partgen::oracle {

namespace {

using Visit = std::function<void(std::span<const std::uint64_t>)>;

void recurse(std::uint64_t remaining, std::uint64_t min,
             std::vector<std::uint64_t>& prefix, const Visit& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  // Any first part works as long as the rest can still be filled with parts
  // at least as large; that leaves first <= remaining / 2 or first == remaining.
  for (std::uint64_t first = min; first <= remaining; ++first) {
    if (first != remaining && 2 * first > remaining) continue;
    prefix.push_back(first);
    recurse(remaining - first, first, prefix, visit);
    prefix.pop_back();
  }
}

void check(std::uint64_t n, std::uint64_t m, std::uint64_t max_n) {
  if (n < 1 || n > max_n) {
    throw CapacityError("oracle requires 1 <= n <= " + std::to_string(max_n) +
                        ", got " + std::to_string(n));
  }
  if (m < 1) throw DomainError("oracle requires m >= 1");
}

}  // namespace

void for_each_composition(std::uint64_t n, std::uint64_t m, const Visit& visit) {
  std::vector<std::uint64_t> prefix;
  prefix.reserve(n);
  recurse(n, m, prefix, visit);
}

std::vector<std::vector<std::uint64_t>> brute_compositions(std::uint64_t n,
                                                           std::uint64_t m) {
  check(n, m, kMaxListN);
  std::vector<std::vector<std::uint64_t>> out;
  for_each_composition(n, m, [&](std::span<const std::uint64_t> c) {
    out.emplace_back(c.begin(), c.end());
  });
  return out;
}

bool satisfies_ratio(std::span<const std::uint64_t> ascending, std::uint64_t t) {
  if (ascending.size() < 2) return true;
  const std::uint64_t largest = ascending[ascending.size() - 1];
  const std::uint64_t second = ascending[ascending.size() - 2];
  return largest >= t * second;
}

std::uint64_t brute_ratio_count(std::uint64_t n, std::uint64_t m, std::uint64_t t) {
  check(n, m, kMaxCountN);
  if (t < 1) throw DomainError("oracle requires t >= 1");
  std::uint64_t count = 0;
  for_each_composition(n, m, [&](std::span<const std::uint64_t> c) {
    if (satisfies_ratio(c, t)) ++count;
  });
  return count;
}

std::vector<std::vector<std::uint64_t>> brute_ratio_compositions(std::uint64_t n,
                                                                 std::uint64_t m,
                                                                 std::uint64_t t) {
  check(n, m, kMaxListN);
  if (t < 1) throw DomainError("oracle requires t >= 1");
  std::vector<std::vector<std::uint64_t>> out;
  for_each_composition(n, m, [&](std::span<const std::uint64_t> c) {
    if (satisfies_ratio(c, t)) out.emplace_back(c.begin(), c.end());
  });
  return out;
}

}  // namespace partgen::oracle
