#include "digitprod/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace digitprod {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

std::uint64_t pow10_u64(unsigned r) {
  if (r > 19) throw std::invalid_argument("10^r overflows 64 bits");
  std::uint64_t v = 1;
  for (unsigned i = 0; i < r; ++i) v *= 10;
  return v;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t carmichael(std::uint64_t m) {
  std::uint64_t lambda = 1;
  for (const auto& [p, e] : factorize(m)) {
    std::uint64_t part;
    if (p == 2) {
      part = e == 1 ? 1 : e == 2 ? 2 : (std::uint64_t{1} << (e - 2));
    } else {
      part = p - 1;
      for (unsigned i = 1; i < e; ++i) part *= p;
    }
    lambda = std::lcm(lambda, part);
  }
  return lambda;
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be >= 1");
  if (std::gcd(base, m) != 1) throw std::invalid_argument("base and modulus are not coprime");
  if (m == 1) return 1;
  std::uint64_t order = carmichael(m);
  for (const auto& [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % p == 0 && pow_mod(base, order / p, m) == 1; ++i) order /= p;
  }
  return order;
}

std::vector<std::uint64_t> squares_mod(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("squares_mod requires m >= 2");
  std::vector<std::uint8_t> hit(m, 0);
  for (std::uint64_t x = 0; x < m; ++x) hit[mul_mod(x, x, m)] = 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < m; ++r) {
    if (hit[r]) out.push_back(r);
  }
  return out;
}

namespace {

// v is a square modulo p^e (v already reduced mod p^e).
bool is_square_mod_prime_power(std::uint64_t v, std::uint64_t p, unsigned e) {
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  v %= pe;
  if (v == 0) return true;
  unsigned t = 0;
  while (v % p == 0) {
    v /= p;
    ++t;
  }
  if (t % 2 != 0) return false;
  const unsigned rest = e - t;  // v is now a unit modulo p^rest
  if (p == 2) {
    if (rest >= 3) return v % 8 == 1;
    if (rest == 2) return v % 4 == 1;
    return true;
  }
  return pow_mod(v % p, (p - 1) / 2, p) == 1;
}

}  // namespace

bool is_square_residue(std::uint64_t v, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("is_square_residue requires m >= 2");
  const auto primes = factorize(m);
  return std::all_of(primes.begin(), primes.end(),
                     [&](const auto& pe) { return is_square_mod_prime_power(v, pe.first, pe.second); });
}

std::optional<std::uint64_t> discrete_log(std::uint64_t generator, std::uint64_t target, std::uint64_t order,
                                          std::uint64_t m) {
  target %= m;
  std::uint64_t x = 0;      // solution modulo `modulus`
  std::uint64_t modulus = 1;
  for (const auto& [p, e] : factorize(order)) {
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    // Work inside the subgroup of order p^e.
    const std::uint64_t g = pow_mod(generator, order / pe, m);
    const std::uint64_t h = pow_mod(target, order / pe, m);
    const std::uint64_t gamma = pow_mod(g, pe / p, m);  // order p
    const auto g_inv = inverse_mod(g, m);
    if (!g_inv) return std::nullopt;

    std::uint64_t xk = 0;
    std::uint64_t pk = 1;
    for (unsigned k = 0; k < e; ++k) {
      // (g^-xk h)^(p^(e-1-k)) = gamma^digit
      const std::uint64_t shifted = mul_mod(pow_mod(*g_inv, xk, m), h, m);
      const std::uint64_t probe = pow_mod(shifted, pe / (pk * p), m);
      std::optional<std::uint64_t> digit;
      std::uint64_t acc = 1;
      for (std::uint64_t d = 0; d < p; ++d) {
        if (acc == probe) {
          digit = d;
          break;
        }
        acc = mul_mod(acc, gamma, m);
      }
      if (!digit) return std::nullopt;
      xk += *digit * pk;
      pk *= p;
    }
    // CRT: x = x (mod modulus), x = xk (mod pe)
    const std::uint64_t inv = *inverse_mod(modulus % pe, pe);
    const std::uint64_t delta = mul_mod((xk + pe - x % pe) % pe, inv, pe);
    x += modulus * delta;
    modulus *= pe;
  }
  x %= std::max<std::uint64_t>(order, 1);
  if (pow_mod(generator, x, m) != target) return std::nullopt;
  return x;
}

}  // namespace digitprod
