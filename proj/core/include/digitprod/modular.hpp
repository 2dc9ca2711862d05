#pragma once

// Word-sized modular arithmetic used by the residue sieve. Moduli must fit
// in 63 bits; products are formed in 128 bits.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace digitprod {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
std::uint64_t pow10_u64(unsigned r);

/// Inverse of a modulo m; nullopt unless gcd(a, m) = 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

/// Prime factorisation by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Carmichael function lambda(m).
std::uint64_t carmichael(std::uint64_t m);

/// Least e >= 1 with base^e = 1 (mod m). Throws std::invalid_argument unless
/// gcd(base, m) = 1 and m >= 1.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m);

/// Sorted set { x^2 mod m : 0 <= x < m } by enumeration. Throws
/// std::invalid_argument unless m >= 2.
std::vector<std::uint64_t> squares_mod(std::uint64_t m);

/// Whether v is congruent to a square modulo m, decided prime power by prime
/// power rather than by enumeration.
bool is_square_residue(std::uint64_t v, std::uint64_t m);

/// Exponent x in [0, order) with generator^x = target (mod m), where `order`
/// is the multiplicative order of the generator. nullopt when the target is
/// outside the cyclic subgroup. Pohlig-Hellman over the factorisation of
/// `order`; each prime-order sub-problem is solved by exhaustive search, so
/// the primes of `order` should be small.
std::optional<std::uint64_t> discrete_log(std::uint64_t generator, std::uint64_t target, std::uint64_t order,
                                          std::uint64_t m);

}  // namespace digitprod
