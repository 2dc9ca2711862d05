#include "digitprod/smooth_factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace digitprod {

namespace {

std::uint64_t strip_factor(Natural& v, std::uint64_t p) {
  std::uint64_t e = 0;
  while (v.divisible_by(p)) {
    v.divide_exact(p);
    ++e;
  }
  return e;
}

}  // namespace

Factorization factor_smooth(const Natural& v) {
  if (v.is_zero()) throw std::invalid_argument("factor_smooth requires v >= 1");
  Factorization f{.value = v, .exponents = {}, .cofactor = v};
  f.exponents.e2 = strip_factor(f.cofactor, 2);
  f.exponents.e3 = strip_factor(f.cofactor, 3);
  f.exponents.e5 = strip_factor(f.cofactor, 5);
  f.exponents.e7 = strip_factor(f.cofactor, 7);
  return f;
}

bool is_seven_smooth(const Natural& v) { return factor_smooth(v).is_seven_smooth(); }

std::optional<Natural> digit_product_preimage(const Natural& v) {
  const Factorization f = factor_smooth(v);
  if (!f.is_seven_smooth()) return std::nullopt;
  if (v.is_one()) return Natural(1);

  // 5 and 7 only occur as themselves. On the 2^a 3^b part, taking the
  // largest digit first (9, 8, 6, 4, 3, 2) minimises the digit count.
  std::uint64_t twos = f.exponents.e2;
  std::uint64_t threes = f.exponents.e3;
  std::string digits;
  digits.append(f.exponents.e5, '5');
  digits.append(f.exponents.e7, '7');
  digits.append(threes / 2, '9');
  threes %= 2;
  digits.append(twos / 3, '8');
  twos %= 3;
  if (threes == 1 && twos >= 1) {
    digits.push_back('6');
    --twos;
    threes = 0;
  }
  if (threes == 1) digits.push_back('3');
  if (twos == 2) digits.push_back('4');
  if (twos == 1) digits.push_back('2');

  std::sort(digits.begin(), digits.end());
  return Natural::from_decimal(digits);
}

}  // namespace digitprod
