#pragma once

#include <cstdint>
#include <ostream>

namespace partgen {

/// Operation tallies at pseudocode-line granularity: one assignment per
/// executed `<-` line, one boolean evaluation per evaluated while/if
/// condition, one visit per delivered node or composition.
struct OpCounters {
  std::uint64_t assignments = 0;
  std::uint64_t bool_evals = 0;
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
  std::uint64_t visits = 0;

  // Loop-body executions, for the iteration-count identities.
  std::uint64_t outer_iterations = 0;   // the top-level loop
  std::uint64_t middle_iterations = 0;  // the `2x <= y` loop of the 3x variants
  std::uint64_t pair_iterations = 0;    // the `x <= y` leaf-pair loop(s)

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const OpCounters& c) {
  return os << "{assignments=" << c.assignments << " bool_evals=" << c.bool_evals
            << " pushes=" << c.pushes << " pops=" << c.pops
            << " visits=" << c.visits << " outer=" << c.outer_iterations
            << " middle=" << c.middle_iterations
            << " pair=" << c.pair_iterations << "}";
}

namespace detail {

// Tally policies. The algorithms are written once against this interface;
// NoTally compiles every hook away for the timed path.
struct NoTally {
  static constexpr bool kEnabled = false;
  void assign(std::uint64_t = 1) {}
  bool test(bool cond) { return cond; }
  void push() {}
  void pop() {}
  void visit(std::uint64_t = 1) {}
  void outer() {}
  void middle() {}
  void pair() {}
};

struct CountingTally {
  static constexpr bool kEnabled = true;
  OpCounters c;
  void assign(std::uint64_t k = 1) { c.assignments += k; }
  bool test(bool cond) {
    ++c.bool_evals;
    return cond;
  }
  void push() { ++c.pushes; }
  void pop() { ++c.pops; }
  void visit(std::uint64_t k = 1) { c.visits += k; }
  void outer() { ++c.outer_iterations; }
  void middle() { ++c.middle_iterations; }
  void pair() { ++c.pair_iterations; }
};

}  // namespace detail
}  // namespace partgen
