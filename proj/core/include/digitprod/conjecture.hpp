#pragma once

// Bounded machine checks of the structural claims about S_2 and its
// higher-exponent relatives. Every checker returns a ConjectureReport that
// records the bound actually scanned.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "digitprod/digit_map.hpp"
#include "digitprod/natural.hpp"
#include "digitprod/parallel.hpp"
#include "digitprod/report.hpp"

namespace digitprod {

/// Digit occurrence counts of one value.
struct DigitProfile {
  DigitHistogram counts{};

  static DigitProfile of(const Natural& v);
  [[nodiscard]] std::uint64_t length() const;
  [[nodiscard]] std::uint64_t count(unsigned digit) const { return counts.at(digit); }
  /// True iff no digit outside `allowed` occurs.
  [[nodiscard]] bool uses_only(std::initializer_list<unsigned> allowed) const;
};

/// count5 == count2 + 2*count4 + 3*count8 over digits {0,1,2,4,5,8}: the
/// digit shape forced on n when P(n) is a power of 10.
bool satisfies_power_of_ten_product_shape(const DigitProfile& p);
/// Digits {0,1,2,5} with count5 == count2.
bool satisfies_0125_shape(const DigitProfile& p);

/// Terms n <= limit of S_2 needing more than 3 steps.
ConjectureReport check_theorem1(std::uint64_t limit, const IterationBudget& budget, const ScanOptions& options = {});

/// Terms n <= limit of S_2 whose last iterate before 1 is not an even power
/// of ten (steps >= 2), or which reach 1 in one step without having only
/// digits 0 and 1.
ConjectureReport check_lemma1(std::uint64_t limit, const IterationBudget& budget, const ScanOptions& options = {});

/// Terms n <= limit of S_k needing more than `bound` steps.
ConjectureReport check_steps_bound(std::uint64_t limit, Exponent k, std::size_t bound, const IterationBudget& budget,
                                   const ScanOptions& options = {});

/// Perfect squares n = m^2 <= limit that are terms of S_2 with exactly
/// `steps` steps, ascending.
std::vector<std::uint64_t> find_square_terms_with_steps(std::uint64_t limit, std::size_t steps,
                                                        const IterationBudget& budget);

/// No perfect square <= limit is a 3-step term of S_2.
ConjectureReport check_conjecture1(std::uint64_t limit, const IterationBudget& budget);

/// The same restricted to squares of 7-smooth numbers, the only squares
/// that occur as images P(m)^2 of the map.
ConjectureReport check_conjecture1_images(std::uint64_t limit, const IterationBudget& budget);

/// Roots m <= bound with m^2 of power-of-ten-product shape. Throws
/// std::invalid_argument for bound = 0 or bound >= 2^32.
std::vector<std::uint64_t> scan_candidate_squares(std::uint64_t bound);

/// For every 3-step term n <= limit of S_2, f_2(n) has the 0125 shape.
ConjectureReport second_iterate_profile(std::uint64_t limit, const IterationBudget& budget,
                                        const ScanOptions& options = {});

/// For every 3-step term n <= limit of S_2, f_2(n) has the (weaker)
/// power-of-ten-product shape.
ConjectureReport second_iterate_product_shape(std::uint64_t limit, const IterationBudget& budget,
                                              const ScanOptions& options = {});

/// 7-smooth m <= bound with m^2 of 0125 shape, ascending.
std::vector<std::uint64_t> scan_smooth_squares_0125(std::uint64_t bound);

/// m = 10^j, 5*10^j or 105*10^j.
bool in_smooth_square_families(std::uint64_t m);

/// Every output of scan_smooth_squares_0125(bound) is in the three families.
ConjectureReport check_smooth_families(std::uint64_t bound);

/// No term n <= limit of S_2 contains the digit 9.
ConjectureReport check_no_nine(std::uint64_t limit, const IterationBudget& budget, const ScanOptions& options = {});

/// (|S_k1(limit)|, |S_k2(limit)|), each scanned with its own budget.
std::pair<std::uint64_t, std::uint64_t> compare_cardinalities(std::uint64_t limit, Exponent k1, Exponent k2,
                                                              const IterationBudget& budget1,
                                                              const IterationBudget& budget2,
                                                              const ScanOptions& options = {});

/// |S_k1(limit)| <= |S_k2(limit)|; a violation is reported as the limit.
ConjectureReport check_cardinality(std::uint64_t limit, Exponent k1, Exponent k2, const IterationBudget& budget1,
                                   const IterationBudget& budget2, const ScanOptions& options = {});

}  // namespace digitprod
