#include "digitprod/natural.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace digitprod {

Natural::Natural(std::uint64_t v) {
  // mpz_class has no portable uint64 constructor on every platform.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative decimal integer: " + std::string(text));
    }
  }
  return Natural(mpz_class(std::string(text), 10));
}

Natural Natural::power_of_ten(std::uint64_t e) { return pow(10, e); }

Natural Natural::pow(std::uint64_t base, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return Natural(std::move(r));
}

std::string Natural::to_string() const { return value_.get_str(10); }

std::size_t Natural::digit_count() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase may overestimate by one for non-power-of-two bases.
  const std::size_t estimate = mpz_sizeinbase(value_.get_mpz_t(), 10);
  if (estimate == 1) return 1;
  mpz_class lower;
  mpz_ui_pow_ui(lower.get_mpz_t(), 10, estimate - 1);
  return value_ < lower ? estimate - 1 : estimate;
}

bool Natural::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t Natural::to_u64() const {
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return count == 0 ? 0 : out;
}

std::optional<std::uint64_t> Natural::try_u64() const {
  if (!fits_u64()) return std::nullopt;
  return to_u64();
}

bool Natural::divisible_by(std::uint64_t d) const {
  if (d == 0) throw std::invalid_argument("division by zero");
  if (d <= std::numeric_limits<unsigned long>::max()) {
    return mpz_divisible_ui_p(value_.get_mpz_t(), static_cast<unsigned long>(d)) != 0;
  }
  return mod(d) == 0;
}

void Natural::divide_exact(std::uint64_t d) {
  mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), Natural(d).value_.get_mpz_t());
}

std::uint64_t Natural::mod(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("modulus zero");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), value_.get_mpz_t(), Natural(m).value_.get_mpz_t());
  return Natural(std::move(r)).to_u64();
}

bool Natural::is_perfect_square() const { return mpz_perfect_square_p(value_.get_mpz_t()) != 0; }

Natural Natural::isqrt() const {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), value_.get_mpz_t());
  return Natural(std::move(r));
}

std::optional<std::uint64_t> Natural::power_of_ten_exponent() const {
  if (is_zero()) return std::nullopt;
  // 10^e = 2^e * 5^e, so the 2-adic valuation fixes the only candidate.
  const std::uint64_t e = mpz_scan1(value_.get_mpz_t(), 0);
  mpz_class probe;
  mpz_ui_pow_ui(probe.get_mpz_t(), 10, e);
  if (probe != value_) return std::nullopt;
  return e;
}

Natural Natural::pow(std::uint64_t e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), e);
  return Natural(std::move(r));
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

std::size_t Natural::hash() const noexcept {
  const mpz_srcptr z = value_.get_mpz_t();
  const std::size_t limbs = mpz_size(z);
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i));
    h *= 1099511628211ULL;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

}  // namespace digitprod
