#include <doctest.h>

#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "digitprod/natural.hpp"

using digitprod::Natural;

TEST_SUITE("natural") {
  TEST_CASE("decimal round trip") {
    for (const char* s : {"0", "1", "9", "10", "18446744073709551615", "18446744073709551616",
                          "54010152000000000", "123456789012345678901234567890"}) {
      CHECK(Natural::from_decimal(s).to_string() == s);
    }
    CHECK_THROWS_AS(Natural::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(Natural::from_decimal("-5"), std::invalid_argument);
    CHECK_THROWS_AS(Natural::from_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Natural::from_decimal(" 1"), std::invalid_argument);
  }

  TEST_CASE("leading zeros canonicalise") {
    CHECK(Natural::from_decimal("000375") == Natural(375));
    CHECK(Natural::from_decimal("000375").hash() == Natural(375).hash());
  }

  TEST_CASE("digit count") {
    CHECK(Natural(0).digit_count() == 1);
    CHECK(Natural(9).digit_count() == 1);
    CHECK(Natural(10).digit_count() == 2);
    for (std::uint64_t e = 0; e < 200; ++e) {
      const Natural p = Natural::power_of_ten(e);
      CHECK(p.digit_count() == e + 1);
      if (e > 0) {
        Natural below = Natural::pow(10, e);
        CHECK(below == p);
        // 10^e - 1 has e digits: rebuild it as a run of nines
        CHECK(Natural::from_decimal(std::string(e, '9')).digit_count() == e);
      }
    }
  }

  TEST_CASE("u64 boundaries") {
    const Natural max(std::numeric_limits<std::uint64_t>::max());
    CHECK(max.fits_u64());
    CHECK(max.to_u64() == std::numeric_limits<std::uint64_t>::max());
    const Natural over = max + Natural(1);
    CHECK_FALSE(over.fits_u64());
    CHECK_FALSE(over.try_u64().has_value());
  }

  TEST_CASE("isqrt and perfect squares") {
    for (std::uint64_t m = 0; m < 3000; ++m) {
      const Natural sq(m * m);
      CHECK(sq.is_perfect_square());
      CHECK(sq.isqrt() == Natural(m));
      if (m > 1) {
        CHECK_FALSE(Natural(m * m + 1).is_perfect_square());
        CHECK(Natural(m * m + 1).isqrt() == Natural(m));
      }
    }
    const Natural big = Natural::pow(7152, 6);
    CHECK(big.is_perfect_square());
    CHECK(big.isqrt() == Natural::pow(7152, 3));
  }

  TEST_CASE("power of ten exponent") {
    CHECK(Natural(1).power_of_ten_exponent() == 0u);
    CHECK(Natural(10000).power_of_ten_exponent() == 4u);
    CHECK(Natural::power_of_ten(77).power_of_ten_exponent() == 77u);
    CHECK_FALSE(Natural(0).power_of_ten_exponent());
    CHECK_FALSE(Natural(20).power_of_ten_exponent());
    CHECK_FALSE(Natural(1001).power_of_ten_exponent());
  }

  TEST_CASE("arithmetic and ordering") {
    CHECK(Natural(105) * Natural(105) == Natural(11025));
    CHECK(Natural(2).pow(64) == Natural::from_decimal("18446744073709551616"));
    CHECK(Natural(3) < Natural(10));
    CHECK(Natural::pow(10, 30) > Natural::pow(9, 31));
    Natural v(7152);
    CHECK(v.divisible_by(16));
    v.divide_exact(16);
    CHECK(v == Natural(447));
    CHECK(Natural::pow(49, 100).mod(100) == 1);
  }

  TEST_CASE("value-based hashing") {
    std::unordered_set<Natural> s;
    s.insert(Natural(324));
    s.insert(Natural::from_decimal("324"));
    s.insert(Natural(18) * Natural(18));
    CHECK(s.size() == 1);
  }
}
