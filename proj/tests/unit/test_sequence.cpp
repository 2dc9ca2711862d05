#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitprod/report_json.hpp"
#include "digitprod/sequence.hpp"
#include "fixtures/listings.hpp"

using namespace digitprod;

namespace {

TermTable terms(std::uint64_t limit, unsigned k, unsigned threads = 1) {
  const Exponent e(k);
  return enumerate_terms(limit, e, IterationBudget::defaults(e), ScanOptions{.threads = threads, .progress = {}});
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

Membership classify(const Natural& n) { return is_term(n, Exponent(2), IterationBudget::defaults(Exponent(2))); }

}  // namespace

TEST_SUITE("sequence-engine") {
  TEST_CASE("published listings below 1000") {
    CHECK(terms(1000, 2).term_values() == fixtures::kS2Below1000);
    CHECK(terms(1000, 3).term_values() == fixtures::kS3Below1000);
    CHECK(terms(1000, 4).term_values() == fixtures::kS4Below1000);
    CHECK(terms(1000, 5).term_values() == fixtures::kS5Below1000);
    CHECK(fixtures::kS2Below1000.size() == 44);
    CHECK(fixtures::kS4Below1000.size() == 23);
  }

  TEST_CASE("records carry steps and penultimate") {
    const TermTable t = terms(1000, 2);
    CHECK(t.undecided.empty());
    for (const auto& r : t.records) {
      if (r.steps == 0) {
        CHECK(r.n == 1);
        CHECK_FALSE(r.penultimate);
      } else {
        REQUIRE(r.penultimate);
        CHECK(step(*r.penultimate, Exponent(2)) == Natural(1));
      }
    }
    CHECK(t.records[1].n == 5);
    CHECK(t.records[1].steps == 3);
    CHECK(*t.records[1].penultimate == Natural(100));
  }

  TEST_CASE("bad limits") {
    CHECK_THROWS_AS(terms(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(parallel_scan({.lo = 0, .hi = 5, .chunk = 1}, Exponent(2), IterationBudget{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parallel_scan({.lo = 6, .hi = 5, .chunk = 1}, Exponent(2), IterationBudget{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parallel_scan({.lo = 1, .hi = 5, .chunk = 0}, Exponent(2), IterationBudget{}),
                    std::invalid_argument);
  }

  TEST_CASE("closure_insert") {
    CHECK(closure_insert(Natural(375), 0, 1) == Natural(3075));
    CHECK(closure_insert(Natural(375), 1, 3) == Natural(3751));
    CHECK(closure_insert(Natural(1), 0, 1) == Natural(10));
    CHECK(closure_insert(Natural(375), 1, 0) == Natural(1375));
    CHECK_THROWS_AS(closure_insert(Natural(375), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(closure_insert(Natural(375), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(closure_insert(Natural(375), 1, 4), std::invalid_argument);
  }

  TEST_CASE("digit_permutations") {
    CHECK(digit_permutations(Natural(375)) == std::set<Natural>{357, 375, 537, 573, 735, 753});
    CHECK(digit_permutations(Natural(11)) == std::set<Natural>{11});
    CHECK(digit_permutations(Natural(105)) == std::set<Natural>{105, 150, 501, 510});
    CHECK(digit_permutations(Natural(1000)) == std::set<Natural>{1000});
    CHECK_THROWS_AS(digit_permutations(Natural(0)), std::invalid_argument);
  }

  TEST_CASE("b-file export") {
    const auto s2 = lines(export_bfile(terms(1000, 2)));
    REQUIRE(s2.size() == 44);
    CHECK(s2[0] == "1 1");
    CHECK(s2[1] == "2 5");
    CHECK(s2[2] == "3 10");
    CHECK(s2[43] == "44 1000");
    CHECK(export_bfile(terms(1000, 2)).back() == '\n');
    const auto shifted = lines(export_bfile(terms(10, 2), 0));
    CHECK(shifted.front() == "0 1");

    // S_4(1000) carries divergent-looking starts, so the certified export refuses.
    const TermTable s4 = terms(1000, 4);
    CHECK_FALSE(s4.undecided.empty());
    CHECK_THROWS_AS(export_bfile(s4), ExportBlocked);

    TermTable empty{.k = Exponent(2), .first = 1, .limit = 1, .budget = {}, .records = {}, .undecided = {}};
    CHECK_THROWS_AS(export_bfile(empty), std::invalid_argument);
  }

  TEST_CASE("CSV and JSON exports list undecided values separately") {
    const TermTable t = enumerate_terms(20, Exponent(3), {.max_steps = 64, .max_digits = 200});
    const auto csv = lines(export_terms_csv(t));
    CHECK(csv.front() == "n,status,steps,penultimate");
    CHECK(csv.size() == 1 + t.records.size() + t.undecided.size());
    CHECK(csv[1] == "1,term,0,");
    bool saw_undecided = false;
    for (const auto& l : csv) saw_undecided = saw_undecided || l == "4,undecided,,";
    CHECK(saw_undecided);

    const std::string json = to_json(t);
    CHECK(json.find("\"k\": 3") != std::string::npos);
    CHECK(json.find("\"undecided\": [") != std::string::npos);
    CHECK(json.find("\"k\"") < json.find("\"limit\""));
    CHECK(json.find("\"limit\"") < json.find("\"terms\""));
    CHECK(json.find("\"terms\"") < json.find("\"undecided\""));
    CHECK(json.find("\"undecided\"") < json.find("\"budget\""));
  }

  TEST_CASE("trajectory CSV") {
    const Trajectory a = iterate_trajectory(Natural(375), Exponent(2), IterationBudget{});
    const Trajectory b = iterate_trajectory(Natural(4), Exponent(2), IterationBudget{});
    const std::vector<Trajectory> ts{a, b};
    const auto csv = lines(export_trajectories_csv(ts));
    CHECK(csv[0] == "n,step_index,value");
    CHECK(csv[1] == "375,0,375");
    CHECK(csv[4] == "375,3,1");
    CHECK(csv[5] == "4,0,4");
    CHECK(csv.size() == 1 + 4 + 8);
  }

  TEST_CASE("parallel_scan matches enumerate_terms") {
    const Exponent k(2);
    const IterationBudget b = IterationBudget::defaults(k);
    CHECK(parallel_scan({.lo = 1, .hi = 1000, .chunk = 100}, k, b).records == terms(1000, 2).records);
    const TermTable one = parallel_scan({.lo = 1, .hi = 1, .chunk = 1}, k, b);
    REQUIRE(one.records.size() == 1);
    CHECK(one.records[0].n == 1);
    CHECK(one.records[0].steps == 0);
    const TermTable mid = parallel_scan({.lo = 500, .hi = 600, .chunk = 9}, k, b);
    CHECK(mid.term_values() == std::vector<std::uint64_t>{500, 501, 502, 510, 511, 512, 520, 521, 525, 537, 545,
                                                           552, 554, 573});
  }

  TEST_CASE("parallel_scan over 10^6 equals the sequential scan") {
    const Exponent k(2);
    const IterationBudget b = IterationBudget::defaults(k);
    const TermTable sequential = terms(1'000'000, 2);
    const TermTable chunked = parallel_scan({.lo = 1, .hi = 1'000'000, .chunk = 10'000}, k, b, {.threads = 4});
    CHECK(chunked == sequential);
  }

  TEST_CASE("property: partition independence") {
    for (unsigned k : {2u, 3u}) {
      const Exponent e(k);
      const IterationBudget b = IterationBudget::defaults(e);
      const std::string reference =
          export_terms_csv(parallel_scan({.lo = 1, .hi = 20'000, .chunk = 4096}, e, b, {.threads = 1}));
      for (std::uint64_t chunk : {1u, 7u, 100u, 4096u}) {
        for (unsigned threads : {1u, 3u}) {
          const std::string got =
              export_terms_csv(parallel_scan({.lo = 1, .hi = 20'000, .chunk = chunk}, e, b, {.threads = threads}));
          CHECK_MESSAGE(got == reference, "k=" << k << " chunk=" << chunk << " threads=" << threads);
        }
      }
    }
  }

  TEST_CASE("memoised classification agrees with direct classification") {
    for (unsigned k = 2; k <= 5; ++k) {
      const Exponent e(k);
      for (const IterationBudget b : {IterationBudget::defaults(e), IterationBudget{.max_steps = 2, .max_digits = 40},
                                      IterationBudget{.max_steps = 3, .max_digits = 500}}) {
        TermClassifier memo(e, b);
        std::size_t mismatches = 0;
        for (std::uint64_t n = 1; n <= 3000; ++n) {
          const Classification a = memo.classify(n);
          const Classification d = memo.classify_direct(n);
          if (a.membership != d.membership || a.steps != d.steps || a.penultimate != d.penultimate) ++mismatches;
        }
        CHECK_MESSAGE(mismatches == 0, "k=" << k << " steps=" << b.max_steps << " digits=" << b.max_digits);
      }
    }
  }

  TEST_CASE("property: closure under 0/1 insertion and permutation for terms <= 10^4") {
    std::size_t failures = 0;
    for (std::uint64_t n : terms(10'000, 2).term_values()) {
      const Natural v(n);
      const std::size_t len = v.digit_count();
      for (std::size_t pos = 0; pos <= len; ++pos) {
        for (unsigned d : {0u, 1u}) {
          if (d == 0 && pos == 0) continue;
          if (classify(closure_insert(v, d, pos)) != Membership::yes) ++failures;
        }
      }
      for (const auto& p : digit_permutations(v)) {
        if (classify(p) != Membership::yes) ++failures;
      }
    }
    CHECK(failures == 0);
  }

  TEST_CASE("property: powers of ten are terms") {
    for (unsigned k = 2; k <= 5; ++k) {
      for (std::uint64_t j = 0; j <= 18; ++j) {
        const Exponent e(k);
        CHECK(steps_to_one(Natural::power_of_ten(j), e, IterationBudget::defaults(e)) == (j == 0 ? 0u : 1u));
      }
    }
  }

  TEST_CASE("property: |S_2(n)| <= |S_3(n)|") {
    for (std::uint64_t n : {1'000u, 10'000u, 100'000u, 1'000'000u}) {
      CHECK(terms(n, 2).records.size() <= terms(n, 3).records.size());
    }
  }
}
