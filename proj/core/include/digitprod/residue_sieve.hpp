#pragma once

// Residue machinery for perfect squares whose decimal digits are all 0 or 1:
// square-residue exclusions of suffixes, the sieve of 9^a * 49^b modulo
// 10^r, exact digit lengths of 9^a * 49^b, and bounded searches.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "digitprod/natural.hpp"
#include "digitprod/report.hpp"

namespace digitprod {

/// Pairs (a, b) with a = a_offset (mod a_period), b = b_offset (mod b_period),
/// all of which satisfy 9^a * 49^b = residue (mod modulus).
struct ResidueClass {
  std::uint64_t a_offset = 0;
  std::uint64_t a_period = 1;
  std::uint64_t b_offset = 0;
  std::uint64_t b_period = 1;
  std::uint64_t modulus = 10;
  std::uint64_t residue = 0;

  /// Checks the defining congruence at a = a_offset + t*a_period,
  /// b = b_offset + u*b_period.
  [[nodiscard]] bool holds_at(std::uint64_t t, std::uint64_t u) const;
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// A residue with all-{0,1} digits reachable as 9^a * 49^b modulo 10^r.
struct SurvivingResidue {
  std::uint64_t residue = 0;
  /// Class of this residue with the smallest b offset.
  ResidueClass canonical;
  /// Number of (a mod a_period, b mod b_period) classes with this residue.
  std::uint64_t class_count = 0;
};

struct SieveOptions {
  unsigned max_r = 9;
  /// Every surviving class is listed while the total stays at or below this;
  /// above it only the canonical class of each residue is listed.
  std::uint64_t enumeration_cap = 100'000;
  unsigned threads = 1;
};

struct SieveReport {
  unsigned r = 1;
  std::uint64_t modulus = 10;
  std::uint64_t a_period = 1;  // ord(9, 10^r)
  std::uint64_t b_period = 1;  // ord(49, 10^r)
  /// Smallest m >= 1 with 49^m in the cyclic group generated by 9.
  std::uint64_t b_coset_period = 1;
  std::vector<SurvivingResidue> residues;  // ascending residue
  std::vector<ResidueClass> surviving;
  bool exhaustive = true;
  std::uint64_t surviving_class_count = 0;
  std::uint64_t eliminated_count = 0;

  [[nodiscard]] std::vector<std::uint64_t> surviving_residues() const;
  [[nodiscard]] bool residue_survives(std::uint64_t residue) const;
  /// Whether the class of (a, b) survives at this level.
  [[nodiscard]] bool contains(std::uint64_t a, std::uint64_t b) const;
};

/// Throws std::invalid_argument unless 1 <= r <= options.max_r (and r <= 18).
SieveReport sieve_binary_residues(unsigned r, const SieveOptions& options = {});

/// True iff every digit of v, written with exactly `width` digits (leading
/// zeros allowed), is 0 or 1.
bool has_binary_digits(std::uint64_t v, unsigned width);

struct ResidueTableRow {
  std::uint64_t a = 0;
  /// 0 for 49^(2r), 1 for 49^(2r+1).
  std::uint64_t b_parity = 0;
  std::uint64_t residue = 0;
};

/// 9^a * 49^(a mod 2) modulo 100 for a = 1..10 and a = 15: the rows in which
/// the exponents of 9 and 49 share parity, as N = 1 (mod 10) forces.
std::vector<ResidueTableRow> residue_table_mod100();

enum class SuffixVerdict { excluded, not_excluded };

/// Excluded iff the suffix value is not a square modulo 10^len. Throws
/// std::invalid_argument for an empty suffix, digits other than 0/1, or a
/// suffix longer than 18 digits.
SuffixVerdict exclude_suffix(std::string_view suffix);

/// Checks 9^a * 49^(b_offset + b_period*t) = target (mod 10^r) for
/// t = 0 .. samples-1. Counterexamples are the failing t values.
ConjectureReport verify_periodic_congruence(std::uint64_t a, std::uint64_t b_offset, std::uint64_t b_period,
                                            unsigned r, std::uint64_t target, std::uint64_t samples);

/// floor(a*log10(9) + b*log10(49)) + 1, or nullopt when the fractional part
/// lies within 1e-6 of an integer and the logarithm cannot decide.
std::optional<std::uint64_t> digit_length_by_logarithm(std::uint64_t a, std::uint64_t b);
/// Digit count of the exact big-integer 9^a * 49^b.
std::uint64_t digit_length_exact(std::uint64_t a, std::uint64_t b);
/// Logarithm when decisive, exact construction otherwise.
std::uint64_t digit_length_of_power_product(std::uint64_t a, std::uint64_t b);

struct BinaryDigitSquare {
  std::uint64_t root = 0;
  Natural square;
  bool power_of_ten = false;
};

/// Every d <= bound whose square has only digits 0 and 1. Throws
/// std::invalid_argument for bound = 0 or bound >= 2^32.
std::vector<BinaryDigitSquare> search_binary_digit_squares(std::uint64_t bound);

/// Removes trailing "00" pairs: n = core * 100^q with core not divisible by 100.
std::pair<Natural, std::uint64_t> strip_trailing_zero_pairs(const Natural& n);

/// Member of K: a perfect square with digits in {0,1} that is not a power of 10.
bool is_nontrivial_binary_square(const Natural& n);

/// (sqrt(5) * 10)^(-n). Throws std::invalid_argument for n = 0.
double heuristic_expected_count(unsigned n);

enum class NineRule { consistent, violation };

/// Consistent iff the number of 1-digits is a multiple of 9. Throws
/// std::invalid_argument when the candidate has digits other than 0/1.
NineRule count_ones_multiple_of_nine(const Natural& candidate);

std::string_view to_string(SuffixVerdict v);
std::string_view to_string(NineRule v);

}  // namespace digitprod
