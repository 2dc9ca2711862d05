#include "digitprod/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace digitprod {

void ScanPartition::validate() const {
  if (lo > hi) throw std::invalid_argument("scan partition requires lo <= hi");
  if (chunk == 0) throw std::invalid_argument("scan chunk must be >= 1");
}

std::uint64_t ScanPartition::chunk_count() const {
  const std::uint64_t span = hi - lo;  // inclusive width minus one
  return span / chunk + 1;
}

std::pair<std::uint64_t, std::uint64_t> ScanPartition::chunk_bounds(std::uint64_t index) const {
  const std::uint64_t start = lo + index * chunk;
  const std::uint64_t end = hi - start < chunk - 1 ? hi : start + (chunk - 1);
  return {start, end};
}

std::vector<std::uint64_t> TermTable::term_values() const {
  std::vector<std::uint64_t> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.n);
  return out;
}

Classification classification_of(const Trajectory& t) {
  Classification c;
  c.membership = membership_of(t.outcome);
  if (const auto* one = std::get_if<ReachesOne>(&t.outcome)) {
    c.steps = one->steps;
    c.penultimate = t.penultimate();
  }
  return c;
}

TermClassifier::TermClassifier(Exponent k, IterationBudget budget) : k_(k), budget_(budget) {
  budget_.validate();
}

Classification TermClassifier::classify_direct(std::uint64_t n) const {
  return classification_of(iterate_trajectory(n, k_, budget_));
}

const TermClassifier::ImageResult& TermClassifier::image_of(std::uint64_t product) {
  if (auto it = cache_.find(product); it != cache_.end()) return it->second;

  IterationBudget rest = budget_;
  rest.max_steps -= 1;
  const Trajectory t = iterate_trajectory(Natural(product).pow(k_.value()), k_, rest);
  ImageResult r{.membership = membership_of(t.outcome), .steps = 0, .penultimate = std::nullopt, .needs_direct = false};
  if (const auto* one = std::get_if<ReachesOne>(&t.outcome)) {
    r.steps = one->steps;
    r.penultimate = t.penultimate();
  } else if (const auto* u = std::get_if<Undecided>(&t.outcome)) {
    // The start value itself can close a cycle one step earlier than the
    // image trajectory sees it, which only matters at the step boundary.
    r.needs_direct = u->reason == UndecidedReason::steps_exhausted;
  }
  return cache_.emplace(product, std::move(r)).first->second;
}

Classification TermClassifier::classify(std::uint64_t n) {
  if (n == 1) return Classification{.membership = Membership::yes, .steps = 0, .penultimate = std::nullopt};
  if (budget_.max_steps < 2 || budget_.max_digits < 20) return classify_direct(n);

  const std::uint64_t product = product_nonzero_digits(n);
  if (product == 1) return Classification{.membership = Membership::yes, .steps = 1, .penultimate = Natural(n)};

  const ImageResult& image = image_of(product);
  if (image.needs_direct) return classify_direct(n);
  Classification c{.membership = image.membership, .steps = 0, .penultimate = std::nullopt};
  if (image.membership == Membership::yes) {
    c.steps = image.steps + 1;
    c.penultimate = image.penultimate;
  }
  return c;
}

namespace {

struct ChunkResult {
  std::vector<TermRecord> records;
  std::vector<std::uint64_t> undecided;
};

}  // namespace

TermTable parallel_scan(const ScanPartition& partition, Exponent k, const IterationBudget& budget,
                        const ScanOptions& options) {
  partition.validate();
  if (partition.lo == 0) throw std::invalid_argument("scan range must start at 1 or above");
  budget.validate();

  auto chunks = scan_chunks(
      partition, options, [&] { return TermClassifier(k, budget); },
      [](TermClassifier& classifier, std::uint64_t lo, std::uint64_t hi) {
        ChunkResult out;
        for (std::uint64_t n = lo;; ++n) {
          Classification c = classifier.classify(n);
          if (c.membership == Membership::yes) {
            out.records.push_back(TermRecord{.n = n, .steps = c.steps, .penultimate = std::move(c.penultimate)});
          } else if (c.membership == Membership::undecided) {
            out.undecided.push_back(n);
          }
          if (n == hi) break;
        }
        return out;
      });

  TermTable table{.k = k, .first = partition.lo, .limit = partition.hi, .budget = budget, .records = {}, .undecided = {}};
  for (auto& chunk : chunks) {
    std::move(chunk.records.begin(), chunk.records.end(), std::back_inserter(table.records));
    table.undecided.insert(table.undecided.end(), chunk.undecided.begin(), chunk.undecided.end());
  }
  return table;
}

TermTable enumerate_terms(std::uint64_t limit, Exponent k, const IterationBudget& budget, const ScanOptions& options) {
  if (limit == 0) throw std::invalid_argument("limit must be >= 1");
  return parallel_scan(ScanPartition{.lo = 1, .hi = limit, .chunk = 4096}, k, budget, options);
}

Natural closure_insert(const Natural& n, unsigned digit, std::size_t position) {
  if (digit > 1) throw std::invalid_argument("only digits 0 and 1 are closure-preserving");
  std::string s = n.to_string();
  if (position > s.size()) throw std::invalid_argument("insertion position out of range");
  if (digit == 0 && position == 0) throw std::invalid_argument("inserting 0 in front creates a leading zero");
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(position), static_cast<char>('0' + digit));
  return Natural::from_decimal(s);
}

std::set<Natural> digit_permutations(const Natural& n) {
  if (n.is_zero()) throw std::invalid_argument("digit_permutations requires n >= 1");
  std::string s = n.to_string();
  std::sort(s.begin(), s.end());
  std::set<Natural> out;
  do {
    if (s.front() != '0') out.insert(Natural::from_decimal(s));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::string export_bfile(const TermTable& table, std::uint64_t offset) {
  if (!table.undecided.empty()) {
    throw ExportBlocked("b-file export blocked: " + std::to_string(table.undecided.size()) +
                        " undecided value(s) in range");
  }
  if (table.records.empty()) throw std::invalid_argument("b-file export of an empty table");
  std::ostringstream os;
  std::uint64_t index = offset;
  for (const auto& r : table.records) os << index++ << ' ' << r.n << '\n';
  return os.str();
}

std::string export_terms_csv(const TermTable& table) {
  struct Row {
    std::uint64_t n;
    const TermRecord* record;
  };
  std::vector<Row> rows;
  rows.reserve(table.records.size() + table.undecided.size());
  for (const auto& r : table.records) rows.push_back({r.n, &r});
  for (auto u : table.undecided) rows.push_back({u, nullptr});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.n < b.n; });

  std::ostringstream os;
  os << "n,status,steps,penultimate\n";
  for (const auto& row : rows) {
    if (row.record == nullptr) {
      os << row.n << ",undecided,,\n";
      continue;
    }
    os << row.n << ",term," << row.record->steps << ',';
    if (row.record->penultimate) os << *row.record->penultimate;
    os << '\n';
  }
  return os.str();
}

std::string export_trajectories_csv(std::span<const Trajectory> trajectories) {
  std::ostringstream os;
  os << "n,step_index,value\n";
  for (const auto& t : trajectories) {
    for (std::size_t i = 0; i < t.iterates.size(); ++i) os << t.start << ',' << i << ',' << t.iterates[i] << '\n';
  }
  return os.str();
}

}  // namespace digitprod
