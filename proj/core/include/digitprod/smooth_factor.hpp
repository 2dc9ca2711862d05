#pragma once

#include <optional>

#include "digitprod/digit_map.hpp"
#include "digitprod/natural.hpp"

namespace digitprod {

/// value = 2^e2 * 3^e3 * 5^e5 * 7^e7 * cofactor, with gcd(cofactor, 210) = 1.
struct Factorization {
  Natural value;
  SmoothExponents exponents;
  Natural cofactor;

  [[nodiscard]] bool is_seven_smooth() const { return cofactor.is_one(); }
};

/// Trial division by 2, 3, 5, 7. Throws std::invalid_argument for v = 0.
Factorization factor_smooth(const Natural& v);

bool is_seven_smooth(const Natural& v);

/// Smallest positive m with P(m) = v, or nullopt when v has a prime factor
/// above 7 (no digit product can produce it).
std::optional<Natural> digit_product_preimage(const Natural& v);

}  // namespace digitprod
