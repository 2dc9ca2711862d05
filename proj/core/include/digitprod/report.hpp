#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "digitprod/digit_map.hpp"
#include "digitprod/natural.hpp"

namespace digitprod {

enum class ClaimStatus { holds, refuted, holds_with_undecided };

std::string_view to_string(ClaimStatus s);

/// Named auxiliary figure attached to a report (e.g. the largest step count
/// seen). Values are decimal strings so big integers survive serialisation.
struct Metric {
  std::string name;
  std::string value;
  friend bool operator==(const Metric&, const Metric&) = default;
};

/// Outcome of bounded verification of one claim.
struct ConjectureReport {
  std::string claim_id;
  Natural bound;
  Exponent k{2};
  ClaimStatus status = ClaimStatus::holds;
  std::vector<Natural> counterexamples;
  std::uint64_t undecided_count = 0;
  double elapsed_seconds = 0.0;
  std::vector<Metric> metrics;

  /// Sorts counterexamples and derives status: refuted iff any
  /// counterexample, else holds-with-undecided iff any undecided value.
  void finalize();
  void add_metric(std::string name, std::string value);
  /// Value of a metric by name, or empty when absent.
  [[nodiscard]] std::string metric(std::string_view name) const;
};

}  // namespace digitprod
