#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitprod/conjecture.hpp"
#include "digitprod/sequence.hpp"
#include "digitprod/smooth_factor.hpp"
#include "oracle/oracles.hpp"

using namespace digitprod;

namespace {

const IterationBudget kBudget = IterationBudget::defaults(Exponent(2));

bool digits_within(std::uint64_t v, const std::string& allowed) {
  for (char c : std::to_string(v)) {
    if (allowed.find(c) == std::string::npos) return false;
  }
  return true;
}

std::uint64_t count_digit(std::uint64_t v, char d) {
  const std::string s = std::to_string(v);
  return static_cast<std::uint64_t>(std::count(s.begin(), s.end(), d));
}

std::vector<std::uint64_t> u64s(const std::vector<Natural>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.to_u64());
  return out;
}

}  // namespace

TEST_SUITE("conjecture-lab") {
  TEST_CASE("report status derivation") {
    ConjectureReport r;
    r.finalize();
    CHECK(r.status == ClaimStatus::holds);
    r.undecided_count = 3;
    r.finalize();
    CHECK(r.status == ClaimStatus::holds_with_undecided);
    r.counterexamples = {Natural(9), Natural(2), Natural(9)};
    r.finalize();
    CHECK(r.status == ClaimStatus::refuted);
    CHECK(r.counterexamples == std::vector<Natural>{2, 9});
    r.add_metric("x", "1");
    r.add_metric("x", "2");
    CHECK(r.metric("x") == "2");
    CHECK(r.metric("missing").empty());
    CHECK(to_string(ClaimStatus::holds_with_undecided) == "holds-with-undecided");
  }

  TEST_CASE("digit profiles") {
    const DigitProfile p = DigitProfile::of(Natural(51151104));
    CHECK(p.length() == 8);
    CHECK(p.count(5) == 2);
    CHECK(p.count(4) == 1);
    CHECK(satisfies_power_of_ten_product_shape(p));
    CHECK_FALSE(satisfies_0125_shape(p));
    CHECK(satisfies_0125_shape(DigitProfile::of(Natural(11025))));
    CHECK(satisfies_0125_shape(DigitProfile::of(Natural(2500))));
    CHECK_FALSE(satisfies_0125_shape(DigitProfile::of(Natural(2550))));
    CHECK_FALSE(satisfies_power_of_ten_product_shape(DigitProfile::of(Natural(35))));
  }

  TEST_CASE("theorem1") {
    const auto small = check_theorem1(1000, kBudget);
    CHECK(small.status == ClaimStatus::holds);
    CHECK(small.metric("max_steps_observed") == "3");
    CHECK(check_theorem1(1, kBudget).status == ClaimStatus::holds);
    CHECK(check_theorem1(1, kBudget).metric("max_steps_observed") == "0");
    const auto full = check_theorem1(1'000'000, kBudget);
    CHECK(full.status == ClaimStatus::holds);
    CHECK(full.counterexamples.empty());
    CHECK(full.undecided_count == 0);
    CHECK(full.bound == Natural(1'000'000));
    CHECK(full.claim_id == "theorem1");
    CHECK_THROWS_AS(check_theorem1(0, kBudget), std::invalid_argument);
  }

  TEST_CASE("lemma1") {
    CHECK(*steps_to_one(Natural(455), Exponent(2), kBudget) == 2);
    CHECK(iterate_trajectory(Natural(455), Exponent(2), kBudget).penultimate() == Natural(10000));
    CHECK(*steps_to_one(Natural(11), Exponent(2), kBudget) == 1);
    const auto r = check_lemma1(1'000'000, kBudget);
    CHECK(r.status == ClaimStatus::holds);
    CHECK(r.undecided_count == 0);
  }

  TEST_CASE("lemma1 detects a violation under a distorted budget") {
    // Stopping one step short makes 3-step terms undecided, never a false violation.
    const auto r = check_lemma1(1000, {.max_steps = 2, .max_digits = 100});
    CHECK(r.counterexamples.empty());
    CHECK(r.status == ClaimStatus::holds_with_undecided);
  }

  TEST_CASE("steps bounds") {
    const auto cubes = check_steps_bound(1000, Exponent(3), 10, IterationBudget::defaults(Exponent(3)));
    CHECK(cubes.counterexamples.empty());
    CHECK(cubes.metric("max_steps_observed") == "10");
    CHECK(cubes.undecided_count == 814);
    CHECK(cubes.status == ClaimStatus::holds_with_undecided);
    CHECK(check_steps_bound(1000, Exponent(3), 9, IterationBudget::defaults(Exponent(3))).status ==
          ClaimStatus::refuted);
    for (unsigned k : {4u, 5u}) {
      const auto r = check_steps_bound(1000, Exponent(k), 2, IterationBudget::defaults(Exponent(k)));
      CHECK(r.counterexamples.empty());
    }
    CHECK(check_steps_bound(1000, Exponent(2), 3, kBudget).status == ClaimStatus::holds);
    CHECK(check_steps_bound(1000, Exponent(2), 2, kBudget).status == ClaimStatus::refuted);
  }

  TEST_CASE("square terms by step count") {
    CHECK(find_square_terms_with_steps(10'000, 1, kBudget) == std::vector<std::uint64_t>{100, 10000});
    const auto two = find_square_terms_with_steps(100'000'000, 2, kBudget);
    CHECK(std::binary_search(two.begin(), two.end(), 51151104));
  }

  TEST_CASE("oracle: 3-step perfect squares below 10^8") {
    // Naive re-derivation; the literal conjecture fails at 235^2 = 55225.
    std::vector<std::uint64_t> want;
    for (std::uint64_t m = 1; m <= 10'000; ++m) {
      const auto o = oracle::naive_trajectory(m * m, 2, 64, 1000);
      if (o.kind == oracle::Kind::one && o.steps == 3) want.push_back(m * m);
    }
    CHECK(want.size() == 17);
    CHECK(want.front() == 55225);
    CHECK(find_square_terms_with_steps(100'000'000, 3, kBudget) == want);

    const auto report = check_conjecture1(100'000'000, kBudget);
    CHECK(report.status == ClaimStatus::refuted);
    CHECK(u64s(report.counterexamples) == want);
  }

  TEST_CASE("conjecture1 restricted to images of the map") {
    const auto r = check_conjecture1_images(1'000'000'000'000'000'000ULL, kBudget);
    CHECK(r.status == ClaimStatus::holds);
    for (std::uint64_t n : find_square_terms_with_steps(100'000'000, 3, kBudget)) {
      CHECK_FALSE(is_seven_smooth(Natural(n).isqrt()));
    }
  }

  TEST_CASE("property: reported counterexamples re-classify as violations") {
    for (const auto& n : check_conjecture1(100'000'000, kBudget).counterexamples) {
      CHECK(n.is_perfect_square());
      CHECK(steps_to_one(n, Exponent(2), kBudget) == 3u);
    }
    for (const auto& n : check_steps_bound(1000, Exponent(2), 2, kBudget).counterexamples) {
      CHECK(steps_to_one(n, Exponent(2), kBudget) == 3u);
    }
  }

  TEST_CASE("property: square terms are terms") {
    const auto table = enumerate_terms(100'000, Exponent(2), kBudget);
    const auto values = table.term_values();
    const std::set<std::uint64_t> all(values.begin(), values.end());
    for (std::size_t s = 0; s <= 4; ++s) {
      for (std::uint64_t n : find_square_terms_with_steps(100'000, s, kBudget)) CHECK(all.contains(n));
    }
  }

  TEST_CASE("candidate squares") {
    const auto c = scan_candidate_squares(10'000);
    CHECK(std::binary_search(c.begin(), c.end(), 7152));
    for (std::uint64_t p : {1u, 10u, 100u, 1000u, 10000u}) CHECK(std::binary_search(c.begin(), c.end(), p));
    // Direct digit scan as the regression fixture.
    std::vector<std::uint64_t> want;
    for (std::uint64_t m = 1; m <= 10'000; ++m) {
      const std::uint64_t sq = m * m;
      if (digits_within(sq, "012458") &&
          count_digit(sq, '5') == count_digit(sq, '2') + 2 * count_digit(sq, '4') + 3 * count_digit(sq, '8')) {
        want.push_back(m);
      }
    }
    CHECK(c == want);
    CHECK_THROWS_AS(scan_candidate_squares(0), std::invalid_argument);
  }

  TEST_CASE("second iterate profiles") {
    CHECK(step(Natural(357), Exponent(2)) == Natural(11025));
    CHECK(step(Natural(255), Exponent(2)) == Natural(2500));
    const auto r = second_iterate_profile(1'000'000, kBudget);
    CHECK(r.status == ClaimStatus::holds);
    CHECK(r.metric("three_step_terms") != "0");
    CHECK(second_iterate_product_shape(100'000, kBudget).status == ClaimStatus::holds);
  }

  TEST_CASE("smooth squares of 0125 shape") {
    const std::vector<std::uint64_t> want = {1,     5,      10,     50,     100,    105,     500,    1000,   1050,
                                             5000,  10000,  10500,  50000,  100000, 105000,  500000, 1000000};
    const auto got = scan_smooth_squares_0125(1'000'000);
    CHECK(got == want);
    for (std::uint64_t m : got) {
      if (m * 10 <= 1'000'000) CHECK(std::binary_search(got.begin(), got.end(), m * 10));
      CHECK(in_smooth_square_families(m));
    }
    CHECK_FALSE(std::binary_search(got.begin(), got.end(), 7152));
    CHECK(check_smooth_families(1'000'000).status == ClaimStatus::holds);
    CHECK_FALSE(in_smooth_square_families(0));
    CHECK_FALSE(in_smooth_square_families(15));
    CHECK(in_smooth_square_families(1050));
  }

  TEST_CASE("no nine") {
    CHECK(check_no_nine(1000, kBudget).status == ClaimStatus::holds);
    CHECK(is_term(Natural(9), Exponent(2), kBudget) == Membership::no);
  }

  TEST_CASE("cardinalities") {
    const IterationBudget b3 = IterationBudget::defaults(Exponent(3));
    CHECK(compare_cardinalities(1000, Exponent(2), Exponent(3), kBudget, b3) == std::pair<std::uint64_t, std::uint64_t>{44, 186});
    CHECK(compare_cardinalities(1, Exponent(2), Exponent(3), kBudget, b3) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    const auto [s2, s3] = compare_cardinalities(100'000, Exponent(2), Exponent(3), kBudget, b3);
    CHECK(s2 <= s3);
    CHECK(check_cardinality(100'000, Exponent(2), Exponent(3), kBudget, b3).status == ClaimStatus::holds);
    // Reversed, the inequality fails from n = 2 on.
    const auto reversed = check_cardinality(1000, Exponent(3), Exponent(2), b3, kBudget);
    CHECK(reversed.status == ClaimStatus::refuted);
    CHECK(reversed.counterexamples.front() == Natural(2));
  }
}
