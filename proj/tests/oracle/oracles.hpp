#pragma once

// Deliberately naive re-implementations used as test oracles. Nothing here
// goes through GMP or the library's arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

// Schoolbook decimal integer, least significant digit first.
struct Decimal {
  std::vector<std::uint8_t> d{0};

  static Decimal of(std::uint64_t v) {
    Decimal x;
    x.d.clear();
    do {
      x.d.push_back(static_cast<std::uint8_t>(v % 10));
      v /= 10;
    } while (v != 0);
    return x;
  }

  std::string str() const {
    std::string s;
    for (auto it = d.rbegin(); it != d.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
    return s;
  }

  bool is_one() const { return d.size() == 1 && d[0] == 1; }
  std::size_t length() const { return d.size(); }
  bool operator==(const Decimal&) const = default;

  void trim() {
    while (d.size() > 1 && d.back() == 0) d.pop_back();
  }

  Decimal times_small(unsigned m) const {
    Decimal r;
    r.d.clear();
    unsigned carry = 0;
    for (auto digit : d) {
      const unsigned v = digit * m + carry;
      r.d.push_back(static_cast<std::uint8_t>(v % 10));
      carry = v / 10;
    }
    while (carry) {
      r.d.push_back(static_cast<std::uint8_t>(carry % 10));
      carry /= 10;
    }
    r.trim();
    return r;
  }

  Decimal times(const Decimal& o) const {
    std::vector<std::uint64_t> acc(d.size() + o.d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      for (std::size_t j = 0; j < o.d.size(); ++j) acc[i + j] += std::uint64_t{d[i]} * o.d[j];
    }
    Decimal r;
    r.d.clear();
    std::uint64_t carry = 0;
    for (auto v : acc) {
      v += carry;
      r.d.push_back(static_cast<std::uint8_t>(v % 10));
      carry = v / 10;
    }
    while (carry) {
      r.d.push_back(static_cast<std::uint8_t>(carry % 10));
      carry /= 10;
    }
    r.trim();
    return r;
  }
};

inline Decimal digit_product(const Decimal& n) {
  Decimal p = Decimal::of(1);
  for (auto digit : n.d) {
    if (digit > 1) p = p.times_small(digit);
  }
  return p;
}

inline Decimal power(const Decimal& base, unsigned k) {
  Decimal r = Decimal::of(1);
  for (unsigned i = 0; i < k; ++i) r = r.times(base);
  return r;
}

enum class Kind { one, cycle, steps, size };

struct NaiveOutcome {
  Kind kind = Kind::steps;
  std::size_t steps = 0;        // one
  std::size_t entry_index = 0;  // cycle
  std::string entry_value;      // cycle
  std::size_t length = 0;       // cycle
  std::vector<std::string> iterates;
};

// List of iterates plus a linear scan for repeats.
inline NaiveOutcome naive_trajectory(std::uint64_t start, unsigned k, std::size_t max_steps, std::size_t max_digits) {
  NaiveOutcome out;
  std::vector<Decimal> seen{Decimal::of(start)};
  auto finish = [&](Kind kind) {
    out.kind = kind;
    for (const auto& v : seen) out.iterates.push_back(v.str());
    return out;
  };
  if (seen[0].length() > max_digits) return finish(Kind::size);
  while (true) {
    const std::size_t index = seen.size() - 1;
    if (seen.back().is_one()) {
      out.steps = index;
      return finish(Kind::one);
    }
    if (index >= max_steps) return finish(Kind::steps);
    Decimal next = power(digit_product(seen.back()), k);
    if (next.length() > max_digits) return finish(Kind::size);
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == next) {
        out.entry_index = i;
        out.entry_value = next.str();
        out.length = seen.size() - i;
        return finish(Kind::cycle);
      }
    }
    seen.push_back(std::move(next));
  }
}

inline std::set<std::uint64_t> brute_squares_mod(std::uint64_t m) {
  std::set<std::uint64_t> s;
  for (std::uint64_t x = 0; x < m; ++x) s.insert(x * x % m);
  return s;
}

inline std::uint64_t slow_pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % m);
  return r;
}

inline std::uint64_t newton_isqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

// Roots d with d^2 < 10^max_square_digits whose square is written with 0/1,
// found by enumerating all 0/1 strings rather than all roots.
inline std::vector<std::uint64_t> binary_digit_square_roots(unsigned max_square_digits) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << max_square_digits); ++mask) {
    std::uint64_t v = 0;
    for (int bit = static_cast<int>(max_square_digits) - 1; bit >= 0; --bit) v = v * 10 + ((mask >> bit) & 1);
    const std::uint64_t r = newton_isqrt(v);
    if (r * r == v) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Smallest m (fewest digits, then smallest value) with P(m) = v for every
// v <= limit reachable from digit multisets over {2..9}.
inline std::map<std::uint64_t, std::string> exhaustive_min_preimages(std::uint64_t limit) {
  std::map<std::uint64_t, std::string> best{{1, "1"}};
  auto better = [](const std::string& a, const std::string& b) {
    return std::make_tuple(a.size(), a) < std::make_tuple(b.size(), b);
  };
  std::string digits;
  auto dfs = [&](auto&& self, unsigned lowest, std::uint64_t product) -> void {
    if (!digits.empty()) {
      auto [it, inserted] = best.try_emplace(product, digits);
      if (!inserted && better(digits, it->second)) it->second = digits;
    }
    for (unsigned d = lowest; d <= 9; ++d) {
      if (product * d > limit) break;
      digits.push_back(static_cast<char>('0' + d));
      self(self, d, product * d);
      digits.pop_back();
    }
  };
  dfs(dfs, 2, 1);
  return best;
}

// Every (a mod A, b mod B) with all-{0,1} residue of 9^a * 49^b mod 10^r.
inline std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> brute_sieve(unsigned r) {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < r; ++i) m *= 10;
  auto order = [m](std::uint64_t g) {
    std::uint64_t x = g % m, e = 1;
    while (x != 1) {
      x = x * g % m;
      ++e;
    }
    return e;
  };
  const std::uint64_t A = order(9), B = order(49);
  auto binary = [r](std::uint64_t v) {
    for (unsigned i = 0; i < r; ++i, v /= 10) {
      if (v % 10 > 1) return false;
    }
    return true;
  };
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
  std::uint64_t nine = 1;
  for (std::uint64_t a = 0; a < A; ++a) {
    std::uint64_t v = nine;
    for (std::uint64_t b = 0; b < B; ++b) {
      if (binary(v)) out.emplace_back(a, b, v);
      v = v * 49 % m;
    }
    nine = nine * 9 % m;
  }
  return out;
}

}  // namespace oracle
