#pragma once

// The iterated digit map f_k(n) = P(n)^k, where P(n) is the product of the
// nonzero decimal digits of n, together with trajectory classification.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "digitprod/natural.hpp"

namespace digitprod {

/// Exponent k of the map; always >= 2.
class Exponent {
 public:
  explicit Exponent(unsigned k);
  [[nodiscard]] unsigned value() const { return k_; }
  friend bool operator==(Exponent, Exponent) = default;

 private:
  unsigned k_;
};

struct IterationBudget {
  std::uint64_t max_steps = 64;
  /// Decimal-digit cap applied to every iterate, including the start.
  std::uint64_t max_digits = 1'000'000;

  /// Throws std::invalid_argument unless both caps are positive.
  void validate() const;

  /// 64 steps; 10^6 digits for k = 2, 10^4 digits for k >= 3.
  static IterationBudget defaults(Exponent k);
  friend bool operator==(const IterationBudget&, const IterationBudget&) = default;
};

/// Occurrence count of each decimal digit.
using DigitHistogram = std::array<std::uint64_t, 10>;

/// Exponents of 2, 3, 5, 7 in a 7-smooth value such as P(n).
struct SmoothExponents {
  std::uint64_t e2 = 0;
  std::uint64_t e3 = 0;
  std::uint64_t e5 = 0;
  std::uint64_t e7 = 0;

  [[nodiscard]] Natural value() const;
  /// log10 of the value, in double precision.
  [[nodiscard]] double log10() const;
  friend bool operator==(const SmoothExponents&, const SmoothExponents&) = default;
};

/// Most significant digit first; digits_of(0) == {0}.
std::vector<std::uint8_t> digits_of(const Natural& n);
DigitHistogram digit_histogram(const Natural& n);
DigitHistogram digit_histogram(std::string_view decimal);

/// P(n) as prime exponents, read off the digit counts.
SmoothExponents nonzero_digit_product_exponents(const DigitHistogram& h);

/// P(n); P(0) = 1 (empty product).
Natural product_nonzero_digits(const Natural& n);
/// P(n) for machine words. A 20-digit word starts with 1, so P(n) <= 9^19.
std::uint64_t product_nonzero_digits(std::uint64_t n);

/// f_k(n) = P(n)^k.
Natural step(const Natural& n, Exponent k);

struct ReachesOne {
  std::size_t steps = 0;
  friend bool operator==(const ReachesOne&, const ReachesOne&) = default;
};

struct EntersCycle {
  std::size_t entry_index = 0;
  Natural entry_value;
  std::size_t length = 0;
  friend bool operator==(const EntersCycle&, const EntersCycle&) = default;
};

enum class UndecidedReason { steps_exhausted, size_exceeded };

struct Undecided {
  UndecidedReason reason = UndecidedReason::steps_exhausted;
  friend bool operator==(const Undecided&, const Undecided&) = default;
};

using Outcome = std::variant<ReachesOne, EntersCycle, Undecided>;

struct Trajectory {
  Natural start;
  Exponent k{2};
  /// iterates[0] == start; iterates[i + 1] == step(iterates[i], k).
  std::vector<Natural> iterates;
  Outcome outcome;

  /// Iterate immediately before 1, when the trajectory reaches 1 in >= 1 step.
  [[nodiscard]] std::optional<Natural> penultimate() const;
};

enum class Membership { yes, no, undecided };

/// Follows n until it reaches 1, revisits a value, or trips the budget.
/// Throws std::invalid_argument for n = 0.
Trajectory iterate_trajectory(const Natural& n, Exponent k, const IterationBudget& budget);

std::optional<std::size_t> steps_to_one(const Natural& n, Exponent k, const IterationBudget& budget);

Membership is_term(const Natural& n, Exponent k, const IterationBudget& budget);
Membership membership_of(const Outcome& outcome);

std::string_view to_string(Membership m);
std::string_view to_string(UndecidedReason r);

}  // namespace digitprod
