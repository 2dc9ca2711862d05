#include "digitprod/residue_sieve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include <mpfr.h>

#include "digitprod/modular.hpp"
#include "digitprod/parallel.hpp"

namespace digitprod {

bool ResidueClass::holds_at(std::uint64_t t, std::uint64_t u) const {
  const std::uint64_t a = a_offset + t * a_period;
  const std::uint64_t b = b_offset + u * b_period;
  return mul_mod(pow_mod(9, a, modulus), pow_mod(49, b, modulus), modulus) == residue;
}

std::vector<std::uint64_t> SieveReport::surviving_residues() const {
  std::vector<std::uint64_t> out;
  out.reserve(residues.size());
  for (const auto& s : residues) out.push_back(s.residue);
  return out;
}

bool SieveReport::residue_survives(std::uint64_t residue) const {
  return std::ranges::binary_search(residues, residue, {}, &SurvivingResidue::residue);
}

bool SieveReport::contains(std::uint64_t a, std::uint64_t b) const {
  return residue_survives(mul_mod(pow_mod(9, a, modulus), pow_mod(49, b, modulus), modulus));
}

bool has_binary_digits(std::uint64_t v, unsigned width) {
  for (unsigned i = 0; i < width; ++i) {
    if (v % 10 > 1) return false;
    v /= 10;
  }
  return v == 0;
}

SieveReport sieve_binary_residues(unsigned r, const SieveOptions& options) {
  if (r < 1 || r > options.max_r || r > 18) {
    throw std::invalid_argument("sieve level r must be in [1, " + std::to_string(std::min(options.max_r, 18U)) +
                                "], got " + std::to_string(r));
  }
  SieveReport report;
  report.r = r;
  report.modulus = pow10_u64(r);
  const std::uint64_t m = report.modulus;
  report.a_period = multiplicative_order(9, m);
  report.b_period = multiplicative_order(49, m);
  const std::uint64_t order9 = report.a_period;

  // 49^j lies in <9> exactly for j in a subgroup coset_period*Z; that period
  // divides ord(49), so the first divisor that works is the period.
  std::uint64_t shift = 0;  // 49^coset_period = 9^shift
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= report.b_period; ++d) {
    if (report.b_period % d != 0) continue;
    divisors.push_back(d);
    if (d * d != report.b_period) divisors.push_back(report.b_period / d);
  }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t d : divisors) {
    if (auto x = discrete_log(9, pow_mod(49, d, m), order9, m)) {
      report.b_coset_period = d;
      shift = *x;
      break;
    }
  }

  const std::uint64_t coset = report.b_coset_period;
  const std::uint64_t inv49 = *inverse_mod(49, m);
  const std::uint64_t candidates = std::uint64_t{1} << r;

  // Candidate residues are the r-digit {0,1} strings indexed by bit pattern.
  auto found = scan_chunks(
      ScanPartition{.lo = 0, .hi = candidates - 1, .chunk = 64}, ScanOptions{.threads = options.threads, .progress = {}},
      [] { return 0; },
      [&](int&, std::uint64_t lo, std::uint64_t hi) {
        std::vector<SurvivingResidue> out;
        for (std::uint64_t bits = lo;; ++bits) {
          std::uint64_t rho = 0;
          std::uint64_t place = 1;
          for (unsigned i = 0; i < r; ++i, place *= 10) {
            if ((bits >> i) & 1U) rho += place;
          }
          // Residues ending in 0 are not units, whereas 9^a 49^b always is.
          if (rho % 10 == 1) {
            std::uint64_t y = rho;
            for (std::uint64_t b0 = 0; b0 < coset; ++b0, y = mul_mod(y, inv49, m)) {
              if (auto a0 = discrete_log(9, y, order9, m)) {
                out.push_back(SurvivingResidue{
                    .residue = rho,
                    .canonical = ResidueClass{.a_offset = *a0,
                                              .a_period = report.a_period,
                                              .b_offset = b0,
                                              .b_period = report.b_period,
                                              .modulus = m,
                                              .residue = rho},
                    .class_count = report.b_period / coset,
                });
                break;
              }
            }
          }
          if (bits == hi) break;
        }
        return out;
      });

  for (auto& chunk : found) report.residues.insert(report.residues.end(), chunk.begin(), chunk.end());
  std::sort(report.residues.begin(), report.residues.end(),
            [](const auto& x, const auto& y) { return x.residue < y.residue; });

  const std::uint64_t per_residue = report.b_period / coset;
  report.surviving_class_count = per_residue * report.residues.size();
  const auto total = static_cast<unsigned __int128>(report.a_period) * report.b_period;
  report.eliminated_count = static_cast<std::uint64_t>(total - report.surviving_class_count);
  report.exhaustive = report.surviving_class_count <= options.enumeration_cap;

  for (const auto& s : report.residues) {
    if (!report.exhaustive) {
      report.surviving.push_back(s.canonical);
      continue;
    }
    // Walk the coset: (a0 - j*shift, b0 + j*coset) keeps the same residue.
    ResidueClass c = s.canonical;
    for (std::uint64_t j = 0; j < per_residue; ++j) {
      report.surviving.push_back(c);
      c.a_offset = (c.a_offset + report.a_period - shift % report.a_period) % report.a_period;
      c.b_offset += coset;
    }
  }
  if (report.exhaustive) {
    std::sort(report.surviving.begin(), report.surviving.end(), [](const auto& x, const auto& y) {
      return std::tie(x.a_offset, x.b_offset) < std::tie(y.a_offset, y.b_offset);
    });
  }
  return report;
}

std::vector<ResidueTableRow> residue_table_mod100() {
  std::vector<ResidueTableRow> rows;
  auto add = [&](std::uint64_t a) {
    const std::uint64_t parity = a % 2;
    rows.push_back({a, parity, mul_mod(pow_mod(9, a, 100), pow_mod(49, parity, 100), 100)});
  };
  for (std::uint64_t a = 1; a <= 10; ++a) add(a);
  add(15);
  return rows;
}

SuffixVerdict exclude_suffix(std::string_view suffix) {
  if (suffix.empty()) throw std::invalid_argument("empty suffix");
  if (suffix.size() > 18) throw std::invalid_argument("suffix longer than 18 digits");
  std::uint64_t value = 0;
  for (char c : suffix) {
    if (c != '0' && c != '1') throw std::invalid_argument("suffix digits must be 0 or 1");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  const std::uint64_t modulus = pow10_u64(static_cast<unsigned>(suffix.size()));
  return is_square_residue(value, modulus) ? SuffixVerdict::not_excluded : SuffixVerdict::excluded;
}

ConjectureReport verify_periodic_congruence(std::uint64_t a, std::uint64_t b_offset, std::uint64_t b_period,
                                            unsigned r, std::uint64_t target, std::uint64_t samples) {
  if (r < 1 || r > 18) throw std::invalid_argument("congruence level r must be in [1, 18]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t m = pow10_u64(r);
  const std::uint64_t nine = pow_mod(9, a, m);

  ConjectureReport report;
  report.claim_id = "periodic-congruence";
  report.bound = Natural(samples);
  // b_offset + b_period*t may exceed 64 bits; reduce by the order of 49.
  const std::uint64_t ord = multiplicative_order(49, m);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto b = static_cast<unsigned __int128>(b_period) * t + b_offset;
    const auto reduced = static_cast<std::uint64_t>(b % ord);
    if (mul_mod(nine, pow_mod(49, reduced, m), m) != target % m) report.counterexamples.emplace_back(t);
  }
  report.add_metric("modulus", std::to_string(m));
  report.add_metric("residue", std::to_string(mul_mod(nine, pow_mod(49, b_offset, m), m)));
  report.finalize();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<std::uint64_t> digit_length_by_logarithm(std::uint64_t a, std::uint64_t b) {
  // 256 bits is roughly 77 significant decimal digits.
  constexpr mpfr_prec_t kPrecision = 256;
  mpfr_t log9, log49, total, scratch, frac;
  mpfr_inits2(kPrecision, log9, log49, total, scratch, frac, static_cast<mpfr_ptr>(nullptr));

  mpfr_set_ui(log9, 9, MPFR_RNDN);
  mpfr_log10(log9, log9, MPFR_RNDN);
  mpfr_set_ui(log49, 49, MPFR_RNDN);
  mpfr_log10(log49, log49, MPFR_RNDN);

  mpfr_mul_ui(total, log9, a, MPFR_RNDN);
  mpfr_mul_ui(scratch, log49, b, MPFR_RNDN);
  mpfr_add(total, total, scratch, MPFR_RNDN);

  mpfr_frac(frac, total, MPFR_RNDN);
  const double fractional = mpfr_get_d(frac, MPFR_RNDN);
  mpfr_floor(scratch, total);
  const std::uint64_t whole = mpfr_get_ui(scratch, MPFR_RNDN);
  mpfr_clears(log9, log49, total, scratch, frac, static_cast<mpfr_ptr>(nullptr));

  constexpr double kGuard = 1e-6;
  if (fractional < kGuard || fractional > 1.0 - kGuard) return std::nullopt;
  return whole + 1;
}

std::uint64_t digit_length_exact(std::uint64_t a, std::uint64_t b) {
  return (Natural::pow(9, a) * Natural::pow(49, b)).digit_count();
}

std::uint64_t digit_length_of_power_product(std::uint64_t a, std::uint64_t b) {
  if (auto fast = digit_length_by_logarithm(a, b)) return *fast;
  return digit_length_exact(a, b);
}

std::vector<BinaryDigitSquare> search_binary_digit_squares(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  if (bound >= (std::uint64_t{1} << 32)) throw std::invalid_argument("bound must be below 2^32");
  std::vector<BinaryDigitSquare> out;
  for (std::uint64_t d = 1; d <= bound; ++d) {
    // d^2 ends in 0 or 1 only for d ending in 0, 1 or 9.
    const std::uint64_t last = d % 10;
    if (last != 0 && last != 1 && last != 9) continue;
    const std::uint64_t sq = d * d;
    std::uint64_t v = sq;
    bool binary = true;
    while (v != 0) {
      if (v % 10 > 1) {
        binary = false;
        break;
      }
      v /= 10;
    }
    if (!binary) continue;
    Natural square(sq);
    const bool power = square.power_of_ten_exponent().has_value();
    out.push_back(BinaryDigitSquare{.root = d, .square = std::move(square), .power_of_ten = power});
  }
  return out;
}

std::pair<Natural, std::uint64_t> strip_trailing_zero_pairs(const Natural& n) {
  Natural core = n;
  std::uint64_t q = 0;
  if (core.is_zero()) return {core, 0};
  while (core.divisible_by(100)) {
    core.divide_exact(100);
    ++q;
  }
  return {core, q};
}

bool is_nontrivial_binary_square(const Natural& n) {
  if (n.is_zero()) return false;
  const std::string s = n.to_string();
  if (s.find_first_not_of("01") != std::string::npos) return false;
  // A square ends in an even number of zeros; dropping "00" pairs keeps it
  // a square with the same digit alphabet.
  const Natural core = strip_trailing_zero_pairs(n).first;
  return core.is_perfect_square() && !core.is_one();
}

double heuristic_expected_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("digit count must be >= 1");
  return std::pow(std::sqrt(5.0) * 10.0, -static_cast<double>(n));
}

NineRule count_ones_multiple_of_nine(const Natural& candidate) {
  const std::string s = candidate.to_string();
  if (s.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument("candidate must have only digits 0 and 1");
  }
  const auto ones = std::count(s.begin(), s.end(), '1');
  return ones % 9 == 0 ? NineRule::consistent : NineRule::violation;
}

std::string_view to_string(SuffixVerdict v) { return v == SuffixVerdict::excluded ? "excluded" : "not-excluded"; }
std::string_view to_string(NineRule v) { return v == NineRule::consistent ? "consistent" : "violation"; }

}  // namespace digitprod
