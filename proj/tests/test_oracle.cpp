#include <cstdint>
#include <vector>

#include "doctest.h"
#include "partgen/errors.hpp"
#include "partgen/oracle.hpp"

using namespace partgen;
using Listing = std::vector<std::vector<std::uint64_t>>;

TEST_SUITE("oracle") {

TEST_CASE("ratio witnesses") {
  const Listing fifteen{{3, 3, 3, 6}, {3, 3, 9}, {3, 4, 8}, {3, 12}, {4, 11}, {5, 10}, {15}};
  CHECK(oracle::brute_ratio_compositions(15, 3, 2) == fifteen);
  CHECK(oracle::brute_ratio_compositions(12, 3, 2) == Listing{{3, 3, 6}, {3, 9}, {4, 8}, {12}});
  CHECK(oracle::brute_ratio_compositions(15, 3, 3) == Listing{{3, 3, 9}, {3, 12}, {15}});
  CHECK(oracle::brute_ratio_compositions(15, 4, 2) == Listing{{4, 11}, {5, 10}, {15}});
}

TEST_CASE("satisfies_ratio") {
  const std::vector<std::uint64_t> a{3, 4, 8};
  CHECK(oracle::satisfies_ratio(a, 2));
  CHECK_FALSE(oracle::satisfies_ratio(a, 3));
  CHECK(oracle::satisfies_ratio(std::vector<std::uint64_t>{7}, 100));
}

TEST_CASE("listing basics") {
  CHECK(oracle::brute_compositions(4, 1) == Listing{{1, 1, 1, 1}, {1, 1, 2}, {1, 3}, {2, 2}, {4}});
  CHECK(oracle::brute_compositions(4, 2) == Listing{{2, 2}, {4}});
  CHECK(oracle::brute_compositions(4, 5).empty());
  std::uint64_t empties = 0;
  oracle::for_each_composition(0, 1, [&](std::span<const std::uint64_t> c) { empties += c.empty(); });
  CHECK(empties == 1);
  CHECK(oracle::brute_ratio_count(60, 1, 1) == 966467);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(oracle::brute_compositions(46, 1), CapacityError);
  CHECK_THROWS_AS(oracle::brute_ratio_count(61, 1, 1), CapacityError);
  CHECK_THROWS_AS(oracle::brute_compositions(5, 0), DomainError);
  CHECK_THROWS_AS(oracle::brute_ratio_count(5, 1, 0), DomainError);
}

}  // TEST_SUITE
