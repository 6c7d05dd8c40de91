#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "partgen/errors.hpp"

namespace partgen {

/// Arbitrary-precision nonnegative integer used for every partition count.
///
/// Subtraction that would go negative throws DomainError: all the identities
/// evaluated in this library only ever subtract a smaller count from a larger
/// one, so a negative intermediate means a broken identity, not a value.
class BigCount {
 public:
  using Raw = boost::multiprecision::cpp_int;

  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(Raw v) : value_(std::move(v)) {
    if (value_ < 0) throw DomainError("BigCount: negative value");
  }

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator-=(const BigCount& o) {
    if (o.value_ > value_) {
      throw DomainError("BigCount: subtraction " + str() + " - " + o.str() +
                        " is negative");
    }
    value_ -= o.value_;
    return *this;
  }
  BigCount& operator*=(std::uint64_t k) {
    value_ *= k;
    return *this;
  }

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
  friend BigCount operator*(BigCount a, std::uint64_t k) { return a *= k; }
  friend BigCount operator*(std::uint64_t k, BigCount a) { return a *= k; }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const Raw& raw() const { return value_; }
  std::string str() const { return value_.str(); }

  // Throws CapacityError when the value does not fit.
  std::uint64_t to_u64() const {
    if (value_ > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError("BigCount: " + str() + " exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigCount& c) {
    return os << c.value_;
  }

 private:
  Raw value_{0};
};

}  // namespace partgen
