#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "partgen/errors.hpp"
#include "partgen/op_counters.hpp"

namespace partgen {

using Part = std::uint64_t;

/// One ascending composition, valid only for the duration of the consumer
/// call that receives it. The generator reuses the underlying buffer.
using CompositionView = std::span<const Part>;

/// Generator versions. kV2 is the accelerated ascending-composition
/// generator; kV3 additionally avoids the stack for nodes with 2x <= y < 3x.
enum class Algorithm { kV1 = 1, kV2 = 2, kV3 = 3 };

std::string_view to_string(Algorithm alg);

// Consumers are callables taking a CompositionView. A consumer that returns
// bool stops generation by returning false; any other return type is ignored.

namespace detail {

template <class Consumer>
inline bool deliver(Consumer& consume, const Part* a, std::size_t len) {
  if constexpr (std::is_same_v<std::invoke_result_t<Consumer&, CompositionView>,
                               bool>) {
    return consume(CompositionView(a + 1, len));
  } else {
    consume(CompositionView(a + 1, len));
    return true;
  }
}

inline void require_n(std::uint64_t n, std::uint64_t min) {
  if (n < min) {
    throw DomainError("generation requires n >= " + std::to_string(min) +
                      ", got " + std::to_string(n));
  }
}

// a[0] is a sentinel 0: version 2 and 3 read a[k] after k drops to 0 on the
// final iteration. Size n + 3 covers the a[k + 2] write of version 3.
inline std::vector<Part> make_buffer(std::uint64_t n) {
  return std::vector<Part>(n + 3, 0);
}

template <class Tally, class Consumer>
std::uint64_t run_v1(std::uint64_t n, Consumer& consume, Tally& tl) {
  require_n(n, 1);
  std::vector<Part> buf = make_buffer(n);
  Part* a = buf.data();
  std::uint64_t visits = 0;

  std::uint64_t k = 0;
  Part x = 1;
  Part y = n - 1;
  bool more = true;
  tl.assign(4);
  while (tl.test(more)) {
    tl.outer();
    while (tl.test(2 * x <= y)) {
      k = k + 1;
      a[k] = x;
      y = y - x;
      tl.assign(3);
    }
    while (tl.test(x <= y)) {
      tl.pair();
      k = k + 1;
      a[k] = x;
      k = k + 1;
      a[k] = y;
      tl.assign(4);
      ++visits;
      tl.visit();
      if (!deliver(consume, a, k)) return visits;
      k = k - 2;
      x = x + 1;
      y = y - 1;
      tl.assign(3);
    }
    k = k + 1;
    a[k] = x + y;
    tl.assign(2);
    ++visits;
    tl.visit();
    if (!deliver(consume, a, k)) return visits;
    k = k - 1;
    tl.assign();
    if (tl.test(k > 0)) {
      y = x + y;
      x = a[k];
      k = k - 1;
      x = x + 1;
      y = y - 1;
      tl.assign(5);
    } else {
      more = false;
      tl.assign();
    }
  }
  return visits;
}

template <class Tally, class Consumer>
std::uint64_t run_v2(std::uint64_t n, Consumer& consume, Tally& tl) {
  require_n(n, 1);
  std::vector<Part> buf = make_buffer(n);
  Part* a = buf.data();
  std::uint64_t visits = 0;

  std::uint64_t k = 1;
  Part x = 1;
  Part y = n - 1;
  tl.assign(3);
  while (tl.test(k > 0)) {
    tl.outer();
    while (tl.test(2 * x <= y)) {
      a[k] = x;
      y = y - x;
      k = k + 1;
      tl.assign(3);
    }
    const std::uint64_t t = k + 1;
    tl.assign();
    while (tl.test(x <= y)) {
      tl.pair();
      a[k] = x;
      a[t] = y;
      tl.assign(2);
      ++visits;
      tl.visit();
      if (!deliver(consume, a, t)) return visits;
      x = x + 1;
      y = y - 1;
      tl.assign(2);
    }
    y = x + y - 1;
    a[k] = y + 1;
    tl.assign(2);
    ++visits;
    tl.visit();
    if (!deliver(consume, a, k)) return visits;
    k = k - 1;
    x = a[k] + 1;
    tl.assign(2);
  }
  return visits;
}

template <class Tally, class Consumer>
std::uint64_t run_v3(std::uint64_t n, Consumer& consume, Tally& tl) {
  require_n(n, 1);
  std::vector<Part> buf = make_buffer(n);
  Part* a = buf.data();
  std::uint64_t visits = 0;

  std::uint64_t k = 1;
  Part x = 1;
  Part y = n - 1;
  tl.assign(3);
  while (tl.test(k > 0)) {
    tl.outer();
    while (tl.test(3 * x <= y)) {
      a[k] = x;
      y = y - x;
      k = k + 1;
      tl.assign(3);
    }
    const std::uint64_t t = k + 1;
    const std::uint64_t u = k + 2;
    tl.assign(2);
    while (tl.test(2 * x <= y)) {
      tl.middle();
      a[k] = x;
      a[t] = x;
      a[u] = y - x;
      tl.assign(3);
      ++visits;
      tl.visit();
      if (!deliver(consume, a, u)) return visits;
      Part p = x + 1;
      Part q = y - p;
      tl.assign(2);
      while (tl.test(p <= q)) {
        tl.pair();
        a[t] = p;
        a[u] = q;
        tl.assign(2);
        ++visits;
        tl.visit();
        if (!deliver(consume, a, u)) return visits;
        p = p + 1;
        q = q - 1;
        tl.assign(2);
      }
      a[t] = y;
      tl.assign();
      ++visits;
      tl.visit();
      if (!deliver(consume, a, t)) return visits;
      x = x + 1;
      y = y - 1;
      tl.assign(2);
    }
    while (tl.test(x <= y)) {
      tl.pair();
      a[k] = x;
      a[t] = y;
      tl.assign(2);
      ++visits;
      tl.visit();
      if (!deliver(consume, a, t)) return visits;
      x = x + 1;
      y = y - 1;
      tl.assign(2);
    }
    y = x + y - 1;
    a[k] = y + 1;
    tl.assign(2);
    ++visits;
    tl.visit();
    if (!deliver(consume, a, k)) return visits;
    k = k - 1;
    x = a[k] + 1;
    tl.assign(2);
  }
  return visits;
}

}  // namespace detail

/// Version 1: direct transcription of the stack traversal onto the part
/// array, with the explicit continue flag and if/else. Returns the number of
/// compositions delivered (p(n) unless the consumer stopped early).
template <class Consumer>
std::uint64_t gen_v1(std::uint64_t n, Consumer&& consume) {
  detail::NoTally tl;
  return detail::run_v1(n, consume, tl);
}

/// Version 2: the if-free rearrangement of version 1.
template <class Consumer>
std::uint64_t gen_v2(std::uint64_t n, Consumer&& consume) {
  detail::NoTally tl;
  return detail::run_v2(n, consume, tl);
}

/// Version 3: version 2 with the 3x <= y stack discipline.
template <class Consumer>
std::uint64_t gen_v3(std::uint64_t n, Consumer&& consume) {
  detail::NoTally tl;
  return detail::run_v3(n, consume, tl);
}

/// Instrumented version 2. For n >= 2 the counters satisfy
///   assignments = 4 p(n) + 4 p^(2)(n),  bool_evals = p(n) + 3 p^(2)(n).
template <class Consumer>
OpCounters gen_v2_counted(std::uint64_t n, Consumer&& consume) {
  detail::require_n(n, 2);
  detail::CountingTally tl;
  detail::run_v2(n, consume, tl);
  return tl.c;
}

/// Instrumented version 3. For n >= 2 the counters satisfy
///   assignments = 4 p(n) + 5 p^(3)(n),  bool_evals = p(n) + 4 p^(3)(n).
template <class Consumer>
OpCounters gen_v3_counted(std::uint64_t n, Consumer&& consume) {
  detail::require_n(n, 2);
  detail::CountingTally tl;
  detail::run_v3(n, consume, tl);
  return tl.c;
}

template <class Consumer>
std::uint64_t generate(Algorithm alg, std::uint64_t n, Consumer&& consume) {
  switch (alg) {
    case Algorithm::kV1: return gen_v1(n, consume);
    case Algorithm::kV2: return gen_v2(n, consume);
    case Algorithm::kV3: return gen_v3(n, consume);
  }
  throw DomainError("unknown algorithm");
}

inline constexpr std::uint64_t kMaxCollectN = 45;

/// Materializes every composition of n. Test helper; n <= 45.
std::vector<std::vector<Part>> collect(Algorithm alg, std::uint64_t n);

}  // namespace partgen
