#include "digitprod/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>

#include "digitprod/sequence.hpp"
#include "digitprod/smooth_factor.hpp"

namespace digitprod {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::holds_with_undecided: return "holds-with-undecided";
  }
  return "unknown";
}

void ConjectureReport::finalize() {
  std::sort(counterexamples.begin(), counterexamples.end());
  counterexamples.erase(std::unique(counterexamples.begin(), counterexamples.end()), counterexamples.end());
  if (!counterexamples.empty()) {
    status = ClaimStatus::refuted;
  } else if (undecided_count != 0) {
    status = ClaimStatus::holds_with_undecided;
  } else {
    status = ClaimStatus::holds;
  }
}

void ConjectureReport::add_metric(std::string name, std::string value) {
  for (auto& m : metrics) {
    if (m.name == name) {
      m.value = std::move(value);
      return;
    }
  }
  metrics.push_back({std::move(name), std::move(value)});
}

std::string ConjectureReport::metric(std::string_view name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return m.value;
  }
  return {};
}

DigitProfile DigitProfile::of(const Natural& v) { return DigitProfile{digit_histogram(v)}; }

std::uint64_t DigitProfile::length() const {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

bool DigitProfile::uses_only(std::initializer_list<unsigned> allowed) const {
  for (unsigned d = 0; d < 10; ++d) {
    if (counts[d] != 0 && std::find(allowed.begin(), allowed.end(), d) == allowed.end()) return false;
  }
  return true;
}

bool satisfies_power_of_ten_product_shape(const DigitProfile& p) {
  return p.uses_only({0, 1, 2, 4, 5, 8}) && p.count(5) == p.count(2) + 2 * p.count(4) + 3 * p.count(8);
}

bool satisfies_0125_shape(const DigitProfile& p) { return p.uses_only({0, 1, 2, 5}) && p.count(5) == p.count(2); }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::vector<Natural> counterexamples;
  std::uint64_t undecided = 0;
  std::uint64_t terms = 0;
  std::size_t max_steps = 0;
};

// Classifies every n in [1, limit] and collects the terms for which
// `violates(n, classification)` holds.
template <class Violates>
Tally scan_terms(std::uint64_t limit, Exponent k, const IterationBudget& budget, const ScanOptions& options,
                 Violates violates) {
  if (limit == 0) throw std::invalid_argument("limit must be >= 1");
  auto chunks = scan_chunks(
      ScanPartition{.lo = 1, .hi = limit, .chunk = 1 << 14}, options, [&] { return TermClassifier(k, budget); },
      [&](TermClassifier& classifier, std::uint64_t lo, std::uint64_t hi) {
        Tally t;
        for (std::uint64_t n = lo;; ++n) {
          const Classification c = classifier.classify(n);
          if (c.membership == Membership::undecided) {
            ++t.undecided;
          } else if (c.membership == Membership::yes) {
            ++t.terms;
            t.max_steps = std::max(t.max_steps, c.steps);
            if (violates(n, c)) t.counterexamples.emplace_back(n);
          }
          if (n == hi) break;
        }
        return t;
      });
  Tally total;
  for (auto& t : chunks) {
    std::move(t.counterexamples.begin(), t.counterexamples.end(), std::back_inserter(total.counterexamples));
    total.undecided += t.undecided;
    total.terms += t.terms;
    total.max_steps = std::max(total.max_steps, t.max_steps);
  }
  return total;
}

ConjectureReport make_report(std::string claim, std::uint64_t bound, Exponent k, Tally tally,
                             Clock::time_point start) {
  ConjectureReport r;
  r.claim_id = std::move(claim);
  r.bound = Natural(bound);
  r.k = k;
  r.counterexamples = std::move(tally.counterexamples);
  r.undecided_count = tally.undecided;
  r.add_metric("terms", std::to_string(tally.terms));
  r.add_metric("max_steps_observed", std::to_string(tally.max_steps));
  r.finalize();
  r.elapsed_seconds = seconds_since(start);
  return r;
}

bool has_only_digits_01(std::uint64_t n) {
  do {
    if (n % 10 > 1) return false;
    n /= 10;
  } while (n != 0);
  return true;
}

bool has_digit_nine(std::uint64_t n) {
  do {
    if (n % 10 == 9) return true;
    n /= 10;
  } while (n != 0);
  return false;
}

std::uint64_t checked_square(std::uint64_t m) {
  if (m >= (std::uint64_t{1} << 32)) throw std::invalid_argument("root bound must be below 2^32");
  return m * m;
}

}  // namespace

ConjectureReport check_steps_bound(std::uint64_t limit, Exponent k, std::size_t bound, const IterationBudget& budget,
                                   const ScanOptions& options) {
  const auto start = Clock::now();
  Tally tally = scan_terms(limit, k, budget, options,
                           [bound](std::uint64_t, const Classification& c) { return c.steps > bound; });
  ConjectureReport r = make_report("steps-bound", limit, k, std::move(tally), start);
  r.add_metric("step_bound", std::to_string(bound));
  return r;
}

ConjectureReport check_theorem1(std::uint64_t limit, const IterationBudget& budget, const ScanOptions& options) {
  ConjectureReport r = check_steps_bound(limit, Exponent(2), 3, budget, options);
  r.claim_id = "theorem1";
  return r;
}

ConjectureReport check_lemma1(std::uint64_t limit, const IterationBudget& budget, const ScanOptions& options) {
  const auto start = Clock::now();
  Tally tally = scan_terms(limit, Exponent(2), budget, options, [](std::uint64_t n, const Classification& c) {
    if (c.steps == 0) return false;
    if (c.steps == 1) return !has_only_digits_01(n);
    const auto e = c.penultimate->power_of_ten_exponent();
    return !e || *e % 2 != 0;
  });
  return make_report("lemma1", limit, Exponent(2), std::move(tally), start);
}

std::vector<std::uint64_t> find_square_terms_with_steps(std::uint64_t limit, std::size_t steps,
                                                        const IterationBudget& budget) {
  std::vector<std::uint64_t> out;
  TermClassifier classifier(Exponent(2), budget);
  const std::uint64_t top = Natural(limit).isqrt().to_u64();
  for (std::uint64_t m = 1; m <= top; ++m) {
    const std::uint64_t n = checked_square(m);
    const Classification c = classifier.classify(n);
    if (c.membership == Membership::yes && c.steps == steps) out.push_back(n);
  }
  return out;
}

ConjectureReport check_conjecture1(std::uint64_t limit, const IterationBudget& budget) {
  const auto start = Clock::now();
  if (limit == 0) throw std::invalid_argument("limit must be >= 1");
  TermClassifier classifier(Exponent(2), budget);
  Tally tally;
  const std::uint64_t top = Natural(limit).isqrt().to_u64();
  for (std::uint64_t m = 1; m <= top; ++m) {
    const std::uint64_t n = checked_square(m);
    const Classification c = classifier.classify(n);
    if (c.membership == Membership::undecided) {
      ++tally.undecided;
    } else if (c.membership == Membership::yes) {
      ++tally.terms;
      tally.max_steps = std::max(tally.max_steps, c.steps);
      if (c.steps == 3) tally.counterexamples.emplace_back(n);
    }
  }
  ConjectureReport r = make_report("conjecture1", limit, Exponent(2), std::move(tally), start);
  r.add_metric("squares_scanned", std::to_string(top));
  return r;
}

namespace {

std::vector<std::uint64_t> seven_smooth_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> smooth;
  for (std::uint64_t p2 = 1; p2 <= bound; p2 *= 2) {
    for (std::uint64_t p3 = p2; p3 <= bound; p3 *= 3) {
      for (std::uint64_t p5 = p3; p5 <= bound; p5 *= 5) {
        for (std::uint64_t p7 = p5; p7 <= bound; p7 *= 7) smooth.push_back(p7);
      }
    }
  }
  std::sort(smooth.begin(), smooth.end());
  return smooth;
}

}  // namespace

ConjectureReport check_conjecture1_images(std::uint64_t limit, const IterationBudget& budget) {
  const auto start = Clock::now();
  if (limit == 0) throw std::invalid_argument("limit must be >= 1");
  TermClassifier classifier(Exponent(2), budget);
  Tally tally;
  const std::vector<std::uint64_t> roots = seven_smooth_up_to(Natural(limit).isqrt().to_u64());
  for (std::uint64_t m : roots) {
    const std::uint64_t n = checked_square(m);
    const Classification c = classifier.classify(n);
    if (c.membership == Membership::undecided) {
      ++tally.undecided;
    } else if (c.membership == Membership::yes) {
      ++tally.terms;
      tally.max_steps = std::max(tally.max_steps, c.steps);
      if (c.steps == 3) tally.counterexamples.emplace_back(n);
    }
  }
  ConjectureReport r = make_report("conjecture1-images", limit, Exponent(2), std::move(tally), start);
  r.add_metric("squares_scanned", std::to_string(roots.size()));
  return r;
}

std::vector<std::uint64_t> scan_candidate_squares(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (satisfies_power_of_ten_product_shape(DigitProfile::of(Natural(checked_square(m))))) out.push_back(m);
  }
  return out;
}

namespace {

template <class Shape>
ConjectureReport check_three_step_images(std::string claim, std::uint64_t limit, const IterationBudget& budget,
                                         const ScanOptions& options, Shape shape) {
  const auto start = Clock::now();
  std::atomic<std::uint64_t> three_step{0};
  Tally tally = scan_terms(limit, Exponent(2), budget, options, [&](std::uint64_t n, const Classification& c) {
    if (c.steps != 3) return false;
    three_step.fetch_add(1, std::memory_order_relaxed);
    return !shape(DigitProfile::of(step(Natural(n), Exponent(2))));
  });
  ConjectureReport r = make_report(std::move(claim), limit, Exponent(2), std::move(tally), start);
  r.add_metric("three_step_terms", std::to_string(three_step.load()));
  return r;
}

}  // namespace

ConjectureReport second_iterate_profile(std::uint64_t limit, const IterationBudget& budget,
                                        const ScanOptions& options) {
  return check_three_step_images("profile0125", limit, budget, options, satisfies_0125_shape);
}

ConjectureReport second_iterate_product_shape(std::uint64_t limit, const IterationBudget& budget,
                                              const ScanOptions& options) {
  return check_three_step_images("product-shape", limit, budget, options, satisfies_power_of_ten_product_shape);
}

std::vector<std::uint64_t> scan_smooth_squares_0125(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  if (bound >= (std::uint64_t{1} << 32)) throw std::invalid_argument("root bound must be below 2^32");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : seven_smooth_up_to(bound)) {
    if (satisfies_0125_shape(DigitProfile::of(Natural(m * m)))) out.push_back(m);
  }
  return out;
}

bool in_smooth_square_families(std::uint64_t m) {
  if (m == 0) return false;
  while (m % 10 == 0) m /= 10;
  return m == 1 || m == 5 || m == 105;
}

ConjectureReport check_smooth_families(std::uint64_t bound) {
  const auto start = Clock::now();
  const std::vector<std::uint64_t> found = scan_smooth_squares_0125(bound);
  Tally tally;
  for (std::uint64_t m : found) {
    if (!in_smooth_square_families(m)) tally.counterexamples.emplace_back(m);
  }
  std::uint64_t family_size = 0;
  for (std::uint64_t core : {1ULL, 5ULL, 105ULL}) {
    for (std::uint64_t v = core; v <= bound; v *= 10) ++family_size;
  }
  ConjectureReport r = make_report("smooth-families", bound, Exponent(2), std::move(tally), start);
  r.metrics.clear();
  r.add_metric("members", std::to_string(found.size()));
  r.add_metric("family_members_in_range", std::to_string(family_size));
  return r;
}

ConjectureReport check_no_nine(std::uint64_t limit, const IterationBudget& budget, const ScanOptions& options) {
  const auto start = Clock::now();
  Tally tally = scan_terms(limit, Exponent(2), budget, options,
                           [](std::uint64_t n, const Classification&) { return has_digit_nine(n); });
  return make_report("no-nine", limit, Exponent(2), std::move(tally), start);
}

namespace {

// Number of terms of S_k in [1, n] for every n in [1, limit]; index 0 is 0.
struct CumulativeCounts {
  std::vector<std::uint32_t> counts;
  std::uint64_t undecided = 0;
};

CumulativeCounts cumulative_terms(std::uint64_t limit, Exponent k, const IterationBudget& budget,
                                  const ScanOptions& options) {
  const TermTable table = enumerate_terms(limit, k, budget, options);
  CumulativeCounts out;
  out.counts.assign(limit + 1, 0);
  out.undecided = table.undecided.size();
  std::size_t next = 0;
  std::uint32_t running = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (next < table.records.size() && table.records[next].n == n) {
      ++running;
      ++next;
    }
    out.counts[n] = running;
  }
  return out;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> compare_cardinalities(std::uint64_t limit, Exponent k1, Exponent k2,
                                                              const IterationBudget& budget1,
                                                              const IterationBudget& budget2,
                                                              const ScanOptions& options) {
  return {enumerate_terms(limit, k1, budget1, options).records.size(),
          enumerate_terms(limit, k2, budget2, options).records.size()};
}

ConjectureReport check_cardinality(std::uint64_t limit, Exponent k1, Exponent k2, const IterationBudget& budget1,
                                   const IterationBudget& budget2, const ScanOptions& options) {
  const auto start = Clock::now();
  if (limit == 0) throw std::invalid_argument("limit must be >= 1");
  const CumulativeCounts first = cumulative_terms(limit, k1, budget1, options);
  const CumulativeCounts second = cumulative_terms(limit, k2, budget2, options);
  Tally tally;
  // Checked at every n <= limit, not only at the limit.
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (first.counts[n] > second.counts[n]) tally.counterexamples.emplace_back(n);
  }
  // Undecided values on the second side can only enlarge |S_k2|, so only
  // the first side's undecided values weaken the certificate.
  tally.undecided = first.undecided;
  ConjectureReport r = make_report("cardinality", limit, k1, std::move(tally), start);
  r.metrics.clear();
  r.add_metric("k2", std::to_string(k2.value()));
  r.add_metric("count_k1", std::to_string(first.counts[limit]));
  r.add_metric("count_k2", std::to_string(second.counts[limit]));
  r.add_metric("undecided_k2", std::to_string(second.undecided));
  return r;
}

}  // namespace digitprod
