#pragma once

// Stable-key-order JSON renderings. Big integers are emitted as decimal
// strings, machine-sized counts as JSON numbers.

#include <string>

#include "digitprod/digit_map.hpp"
#include "digitprod/report.hpp"
#include "digitprod/residue_sieve.hpp"
#include "digitprod/sequence.hpp"

namespace digitprod {

/// {k, limit, terms, undecided, budget}
std::string to_json(const TermTable& table);
/// {start, k, iterates, outcome}
std::string to_json(const Trajectory& trajectory);
/// Elapsed time is deliberately left out so that output is reproducible.
std::string to_json(const ConjectureReport& report);
std::string to_json(const SieveReport& report);

}  // namespace digitprod
