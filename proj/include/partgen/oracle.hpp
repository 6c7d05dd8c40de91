#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

// Naive reference implementations. Deliberately independent of the counting
// recurrences and of the tree-derived generators: plain recursion over the
// first part.

namespace partgen::oracle {

inline constexpr std::uint64_t kMaxListN = 45;
inline constexpr std::uint64_t kMaxCountN = 60;

/// Calls visit on every nondecreasing sequence of integers >= m summing to n,
/// in lexicographic order. n = 0 yields the empty sequence once.
void for_each_composition(std::uint64_t n, std::uint64_t m,
                          const std::function<void(std::span<const std::uint64_t>)>& visit);

/// All ascending compositions of n with parts >= m, lexicographically
/// sorted. 1 <= n <= 45, m >= 1.
std::vector<std::vector<std::uint64_t>> brute_compositions(std::uint64_t n,
                                                           std::uint64_t m);

/// Largest part >= t * second largest (reading the ascending sequence from
/// the end); one-part sequences always qualify.
bool satisfies_ratio(std::span<const std::uint64_t> ascending, std::uint64_t t);

/// Counts compositions of n with parts >= m satisfying the ratio predicate.
/// n <= 60, m >= 1, t >= 1.
std::uint64_t brute_ratio_count(std::uint64_t n, std::uint64_t m, std::uint64_t t);

/// Same filter, materialized. n <= 45.
std::vector<std::vector<std::uint64_t>> brute_ratio_compositions(std::uint64_t n,
                                                                 std::uint64_t m,
                                                                 std::uint64_t t);

}  // namespace partgen::oracle
