#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace digitprod {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value type over GMP's mpz_class. Negative values cannot be
/// constructed; subtraction is deliberately absent. Equality, ordering and
/// hashing are by value.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  /// Parses a decimal string of digits; throws std::invalid_argument on
  /// anything else (signs, whitespace, empty input).
  static Natural from_decimal(std::string_view text);

  /// 10^e
  static Natural power_of_ten(std::uint64_t e);

  /// base^e
  static Natural pow(std::uint64_t base, std::uint64_t e);

  [[nodiscard]] std::string to_string() const;

  /// Exact number of decimal digits; 0 has one digit.
  [[nodiscard]] std::size_t digit_count() const;

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool fits_u64() const;
  /// Precondition: fits_u64().
  [[nodiscard]] std::uint64_t to_u64() const;
  [[nodiscard]] std::optional<std::uint64_t> try_u64() const;

  [[nodiscard]] bool divisible_by(std::uint64_t d) const;
  /// Exact division; precondition divisible_by(d).
  void divide_exact(std::uint64_t d);
  [[nodiscard]] std::uint64_t mod(std::uint64_t m) const;

  [[nodiscard]] bool is_perfect_square() const;
  [[nodiscard]] Natural isqrt() const;
  /// True iff the value is 10^e for some e >= 0; the exponent is returned.
  [[nodiscard]] std::optional<std::uint64_t> power_of_ten_exponent() const;

  [[nodiscard]] Natural pow(std::uint64_t e) const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater
                                                      : std::strong_ordering::equal;
  }

  [[nodiscard]] std::size_t hash() const noexcept;

  [[nodiscard]] const mpz_class& mpz() const { return value_; }

 private:
  explicit Natural(mpz_class v) : value_(std::move(v)) {}

  mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

}  // namespace digitprod

template <>
struct std::hash<digitprod::Natural> {
  std::size_t operator()(const digitprod::Natural& n) const noexcept { return n.hash(); }
};
