#include "digitprod/digit_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace digitprod {

Exponent::Exponent(unsigned k) : k_(k) {
  if (k < 2) throw std::invalid_argument("exponent k must be >= 2, got " + std::to_string(k));
}

void IterationBudget::validate() const {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be >= 1");
  if (max_digits == 0) throw std::invalid_argument("max_digits must be >= 1");
}

IterationBudget IterationBudget::defaults(Exponent k) {
  IterationBudget b;
  b.max_steps = 64;
  b.max_digits = k.value() == 2 ? 1'000'000 : 10'000;
  return b;
}

Natural SmoothExponents::value() const {
  Natural v = Natural::pow(2, e2);
  if (e3 != 0) v *= Natural::pow(3, e3);
  if (e5 != 0) v *= Natural::pow(5, e5);
  if (e7 != 0) v *= Natural::pow(7, e7);
  return v;
}

double SmoothExponents::log10() const {
  return static_cast<double>(e2) * std::log10(2.0) + static_cast<double>(e3) * std::log10(3.0) +
         static_cast<double>(e5) * std::log10(5.0) + static_cast<double>(e7) * std::log10(7.0);
}

std::vector<std::uint8_t> digits_of(const Natural& n) {
  const std::string s = n.to_string();
  std::vector<std::uint8_t> out(s.size());
  std::transform(s.begin(), s.end(), out.begin(), [](char c) { return static_cast<std::uint8_t>(c - '0'); });
  return out;
}

DigitHistogram digit_histogram(std::string_view decimal) {
  DigitHistogram h{};
  for (char c : decimal) ++h[static_cast<std::size_t>(c - '0')];
  return h;
}

DigitHistogram digit_histogram(const Natural& n) {
  if (auto small = n.try_u64()) {
    DigitHistogram h{};
    std::uint64_t v = *small;
    do {
      ++h[v % 10];
      v /= 10;
    } while (v != 0);
    return h;
  }
  return digit_histogram(n.to_string());
}

SmoothExponents nonzero_digit_product_exponents(const DigitHistogram& h) {
  // 4 = 2^2, 6 = 2*3, 8 = 2^3, 9 = 3^2
  return SmoothExponents{
      .e2 = h[2] + 2 * h[4] + h[6] + 3 * h[8],
      .e3 = h[3] + h[6] + 2 * h[9],
      .e5 = h[5],
      .e7 = h[7],
  };
}

std::uint64_t product_nonzero_digits(std::uint64_t n) {
  std::uint64_t p = 1;
  while (n != 0) {
    const std::uint64_t d = n % 10;
    if (d > 1) p *= d;
    n /= 10;
  }
  return p;
}

Natural product_nonzero_digits(const Natural& n) {
  if (auto small = n.try_u64()) return product_nonzero_digits(*small);
  return nonzero_digit_product_exponents(digit_histogram(n)).value();
}

Natural step(const Natural& n, Exponent k) { return product_nonzero_digits(n).pow(k.value()); }

std::optional<Natural> Trajectory::penultimate() const {
  const auto* one = std::get_if<ReachesOne>(&outcome);
  if (one == nullptr || one->steps == 0) return std::nullopt;
  return iterates[one->steps - 1];
}

namespace {

// Computes f_k(current) unless its digit count is known to exceed the cap.
std::optional<Natural> bounded_step(const Natural& current, Exponent k, std::uint64_t max_digits) {
  const SmoothExponents p = nonzero_digit_product_exponents(digit_histogram(current));
  const double log10_next = static_cast<double>(k.value()) * p.log10();
  const double cap = static_cast<double>(max_digits);
  constexpr double kGuard = 1e-6;
  if (log10_next >= cap + kGuard) return std::nullopt;
  Natural next = p.value().pow(k.value());
  if (log10_next >= cap - kGuard && next.digit_count() > max_digits) return std::nullopt;
  return next;
}

}  // namespace

Trajectory iterate_trajectory(const Natural& n, Exponent k, const IterationBudget& budget) {
  if (n.is_zero()) throw std::invalid_argument("trajectory start must be >= 1");
  budget.validate();

  Trajectory t{.start = n, .k = k, .iterates = {n}, .outcome = Undecided{}};
  if (n.digit_count() > budget.max_digits) {
    t.outcome = Undecided{UndecidedReason::size_exceeded};
    return t;
  }

  std::unordered_map<Natural, std::size_t> seen{{n, 0}};
  while (true) {
    const Natural& current = t.iterates.back();
    const std::size_t index = t.iterates.size() - 1;
    if (current.is_one()) {
      t.outcome = ReachesOne{index};
      return t;
    }
    if (index >= budget.max_steps) {
      t.outcome = Undecided{UndecidedReason::steps_exhausted};
      return t;
    }
    std::optional<Natural> next = bounded_step(current, k, budget.max_digits);
    if (!next) {
      t.outcome = Undecided{UndecidedReason::size_exceeded};
      return t;
    }
    if (auto it = seen.find(*next); it != seen.end()) {
      t.outcome = EntersCycle{.entry_index = it->second,
                              .entry_value = it->first,
                              .length = t.iterates.size() - it->second};
      return t;
    }
    seen.emplace(*next, index + 1);
    t.iterates.push_back(std::move(*next));
  }
}

Membership membership_of(const Outcome& outcome) {
  if (std::holds_alternative<ReachesOne>(outcome)) return Membership::yes;
  if (std::holds_alternative<EntersCycle>(outcome)) return Membership::no;
  return Membership::undecided;
}

std::optional<std::size_t> steps_to_one(const Natural& n, Exponent k, const IterationBudget& budget) {
  const Trajectory t = iterate_trajectory(n, k, budget);
  if (const auto* one = std::get_if<ReachesOne>(&t.outcome)) return one->steps;
  return std::nullopt;
}

Membership is_term(const Natural& n, Exponent k, const IterationBudget& budget) {
  return membership_of(iterate_trajectory(n, k, budget).outcome);
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    case Membership::undecided: return "undecided";
  }
  return "?";
}

std::string_view to_string(UndecidedReason r) {
  return r == UndecidedReason::steps_exhausted ? "steps-exhausted" : "size-exceeded";
}

}  // namespace digitprod
