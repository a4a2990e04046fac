#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace um {

/// Exact nonnegative rational distance value.
///
/// Every algorithm in this library branches on equality of distances, so
/// weights are kept as exact rationals from parse to output. Values are
/// created from decimal strings ("7", "0.125") and compared without any
/// tolerance.
class Weight {
 public:
  Weight() : value_(0) {}

  /// Parses a nonnegative decimal string: digits with an optional
  /// fractional part ("3", "12.5"). Returns nullopt on anything else.
  static std::optional<Weight> parse(std::string_view text);

  static Weight from_int(long n);

  bool is_zero() const { return sgn(value_) == 0; }

  /// Canonical decimal rendering when the denominator is a product of 2s
  /// and 5s (always the case for parsed values and their sums), otherwise
  /// "num/den".
  std::string str() const;

  const mpq_class& value() const { return value_; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Weight& operator+=(const Weight& other) {
    value_ += other.value_;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) {
    a += b;
    return a;
  }

 private:
  explicit Weight(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace um
