#pragma once

// Enumeration of S_k(limit), the digit-insertion and permutation closures,
// and the b-file / CSV exporters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "digitprod/digit_map.hpp"
#include "digitprod/natural.hpp"
#include "digitprod/parallel.hpp"

namespace digitprod {

struct TermRecord {
  std::uint64_t n = 0;
  std::size_t steps = 0;
  /// Iterate right before 1; absent iff steps == 0.
  std::optional<Natural> penultimate;
  friend bool operator==(const TermRecord&, const TermRecord&) = default;
};

struct TermTable {
  Exponent k{2};
  std::uint64_t first = 1;
  std::uint64_t limit = 1;
  IterationBudget budget;
  /// Strictly increasing by n.
  std::vector<TermRecord> records;
  std::vector<std::uint64_t> undecided;

  [[nodiscard]] std::vector<std::uint64_t> term_values() const;
  friend bool operator==(const TermTable&, const TermTable&) = default;
};

/// Membership of a single start value, with the fields a TermRecord needs.
struct Classification {
  Membership membership = Membership::undecided;
  std::size_t steps = 0;
  std::optional<Natural> penultimate;
};

/// Classifies n under f_k with a fixed budget. Since f_k(n) depends only on
/// P(n), the trajectory of the image P(n)^k is cached per product value; any
/// cached answer that could differ from the direct trajectory near the step
/// budget is recomputed directly. Not thread-safe: use one per worker.
class TermClassifier {
 public:
  TermClassifier(Exponent k, IterationBudget budget);

  Classification classify(std::uint64_t n);
  /// Same answer without the cache.
  [[nodiscard]] Classification classify_direct(std::uint64_t n) const;

  [[nodiscard]] Exponent k() const { return k_; }
  [[nodiscard]] const IterationBudget& budget() const { return budget_; }

 private:
  struct ImageResult {
    Membership membership;
    std::size_t steps;
    std::optional<Natural> penultimate;
    bool needs_direct;
  };

  const ImageResult& image_of(std::uint64_t product);

  Exponent k_;
  IterationBudget budget_;
  std::unordered_map<std::uint64_t, ImageResult> cache_;
};

Classification classification_of(const Trajectory& t);

TermTable enumerate_terms(std::uint64_t limit, Exponent k, const IterationBudget& budget,
                          const ScanOptions& options = {});

TermTable parallel_scan(const ScanPartition& partition, Exponent k, const IterationBudget& budget,
                        const ScanOptions& options = {});

/// Splices `digit` (0 or 1) into n so that it becomes digit number `position`
/// counted from the most significant end. Throws std::invalid_argument for
/// other digits, out-of-range positions, and a leading zero.
Natural closure_insert(const Natural& n, unsigned digit, std::size_t position);

/// Every distinct integer with the same digit multiset as n and the same
/// digit count (arrangements with a leading zero are dropped).
std::set<Natural> digit_permutations(const Natural& n);

class ExportBlocked : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// OEIS b-file: "index value\n" per term. Throws ExportBlocked while the
/// table has undecided values and std::invalid_argument when it is empty.
std::string export_bfile(const TermTable& table, std::uint64_t offset = 1);

/// Columns n,status,steps,penultimate; undecided values carry status
/// "undecided" and empty step fields.
std::string export_terms_csv(const TermTable& table);

/// Columns n,step_index,value, one row per stored iterate.
std::string export_trajectories_csv(std::span<const Trajectory> trajectories);

}  // namespace digitprod
