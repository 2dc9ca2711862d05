#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "digitprod/conjecture.hpp"
#include "digitprod/digit_map.hpp"
#include "digitprod/report_json.hpp"
#include "digitprod/residue_sieve.hpp"
#include "digitprod/sequence.hpp"
#include "digitprod/smooth_factor.hpp"

namespace digitprod::cli {

namespace {

// Raised for semantically invalid flag values that CLI11 cannot check.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetFlags {
  std::uint64_t max_steps = 64;
  std::optional<std::uint64_t> max_digits;

  IterationBudget resolve(Exponent k) const {
    IterationBudget b = IterationBudget::defaults(k);
    b.max_steps = max_steps;
    if (max_digits) b.max_digits = *max_digits;
    return b;
  }
};

struct OutputFlags {
  std::string format = "text";
  std::string path;
};

struct Config {
  unsigned k = 2;
  std::optional<unsigned> verify_k;
  unsigned k2 = 3;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> bound;
  BudgetFlags budget;
  unsigned threads = 1;
  bool quiet = false;
  OutputFlags output;
  std::uint64_t offset = 1;
  std::string value;  // positional n / claim / suffix
  unsigned r = 2;
  std::uint64_t cap = 100'000;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t b_period = 1;
  std::uint64_t target = 1;
  std::uint64_t samples = 1;
};

void add_budget(CLI::App* sub, BudgetFlags& b) {
  sub->add_option("--max-steps", b.max_steps, "Map applications allowed per trajectory")
      ->capture_default_str()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32));
  sub->add_option("--max-digits", b.max_digits,
                  "Decimal-digit cap per iterate [default: 1000000 for k=2, 10000 for k>=3]")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
}

void add_threads(CLI::App* sub, Config& c) {
  sub->add_option("--threads", c.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  sub->add_flag("--quiet", c.quiet, "Suppress progress on stderr");
}

void add_output(CLI::App* sub, OutputFlags& o, std::vector<std::string> formats) {
  std::string help = "Output format (";
  for (std::size_t i = 0; i < formats.size(); ++i) help += (i ? "|" : "") + formats[i];
  help += ")";
  sub->add_option("--format", o.format, help)->capture_default_str()->check(CLI::IsMember(formats));
  sub->add_option("--out", o.path, "Write output to this file instead of stdout");
}

void emit(const OutputFlags& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + o.path + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("write to " + o.path + " failed");
}

Exponent exponent(unsigned k) {
  if (k < 2) throw UsageError("--k must be >= 2");
  return Exponent(k);
}

ScanOptions scan_options(const Config& c, std::uint64_t span, std::ostream& err) {
  ScanOptions opts;
  opts.threads = c.threads;
  if (!c.quiet && span >= 1'000'000) {
    opts.progress = [&err](std::uint64_t done, std::uint64_t total) {
      if (done == total || done % 64 == 0) {
        err << "\rprogress " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
      }
    };
  }
  return opts;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  return s;
}

// ---------------------------------------------------------------- terms

int cmd_terms(const Config& c, std::ostream& out, std::ostream& err) {
  const Exponent k = exponent(c.k);
  const std::uint64_t limit = c.limit.value_or(1000);
  if (limit == 0) throw UsageError("--limit must be >= 1");
  const TermTable table = enumerate_terms(limit, k, c.budget.resolve(k), scan_options(c, limit, err));

  std::string text;
  if (c.output.format == "json") {
    text = to_json(table);
  } else if (c.output.format == "csv") {
    text = export_terms_csv(table);
  } else if (c.output.format == "bfile") {
    try {
      text = export_bfile(table, c.offset);
    } catch (const ExportBlocked& e) {
      err << "error: " << e.what() << "\n";
      return kExportBlocked;
    }
  } else {
    text = join(table.term_values()) + "\n";
    text += "count " + std::to_string(table.records.size()) + ", undecided " + std::to_string(table.undecided.size()) +
            "\n";
    if (!table.undecided.empty()) text += "undecided: " + join(table.undecided) + "\n";
  }
  emit(c.output, text, out);
  return kOk;
}

// ----------------------------------------------------------- trajectory

std::string describe(const Outcome& outcome) {
  if (const auto* one = std::get_if<ReachesOne>(&outcome)) {
    return "reaches 1 in " + std::to_string(one->steps) + (one->steps == 1 ? " step" : " steps");
  }
  if (const auto* cycle = std::get_if<EntersCycle>(&outcome)) {
    return "cycle of length " + std::to_string(cycle->length) + " entering at " + cycle->entry_value.to_string() +
           " (index " + std::to_string(cycle->entry_index) + ")";
  }
  return "undecided (" + std::string(to_string(std::get<Undecided>(outcome).reason)) + ")";
}

int cmd_trajectory(const Config& c, std::ostream& out, std::ostream&) {
  const Exponent k = exponent(c.k);
  Natural n;
  try {
    n = Natural::from_decimal(c.value);
  } catch (const std::invalid_argument&) {
    throw UsageError("start value must be a decimal integer: " + c.value);
  }
  if (n.is_zero()) throw UsageError("start value must be >= 1");
  const Trajectory t = iterate_trajectory(n, k, c.budget.resolve(k));

  std::string text;
  if (c.output.format == "json") {
    text = to_json(t);
  } else if (c.output.format == "csv") {
    text = export_trajectories_csv(std::span<const Trajectory>(&t, 1));
  } else {
    for (std::size_t i = 0; i < t.iterates.size(); ++i) {
      if (i) text += " -> ";
      text += t.iterates[i].to_string();
    }
    text += "\n" + describe(t.outcome) + "\n";
  }
  emit(c.output, text, out);
  return kOk;
}

// --------------------------------------------------------------- verify

const std::map<std::string, std::uint64_t>& claim_default_limits() {
  static const std::map<std::string, std::uint64_t> limits = {
      {"lemma1", 1'000'000},       {"theorem1", 1'000'000}, {"conjecture1", 100'000'000},
      {"conjecture1-images", 1'000'000'000'000'000'000},
      {"profile0125", 1'000'000},  {"product-shape", 1'000'000},
      {"smooth-families", 1'000'000}, {"no-nine", 10'000'000}, {"steps-bound", 1000},
      {"cardinality", 1000},
  };
  return limits;
}

std::string render_report(const ConjectureReport& r) {
  std::ostringstream s;
  s << "claim            " << r.claim_id << "\n";
  s << "bound            " << r.bound << "\n";
  s << "k                " << r.k.value() << "\n";
  s << "status           " << to_string(r.status) << "\n";
  s << "counterexamples  " << r.counterexamples.size();
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < std::min(kShown, r.counterexamples.size()); ++i) {
    s << (i ? ", " : ": ") << r.counterexamples[i];
  }
  if (r.counterexamples.size() > kShown) s << ", ...";
  s << "\n";
  s << "undecided        " << r.undecided_count << "\n";
  for (const auto& m : r.metrics) {
    std::string label = m.name;
    label.resize(std::max<std::size_t>(label.size() + 1, 17), ' ');
    s << label << m.value << "\n";
  }
  return s.str();
}

int exit_code(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return kOk;
    case ClaimStatus::refuted: return kRefuted;
    case ClaimStatus::holds_with_undecided: return kHoldsWithUndecided;
  }
  return kRefuted;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const std::string& claim = c.value;
  const std::uint64_t limit = c.limit.value_or(claim_default_limits().at(claim));
  if (limit == 0) throw UsageError("--limit must be >= 1");
  const ScanOptions opts = scan_options(c, limit, err);
  const IterationBudget b2 = c.budget.resolve(Exponent(2));

  ConjectureReport report;
  if (claim == "lemma1") {
    report = check_lemma1(limit, b2, opts);
  } else if (claim == "theorem1") {
    report = check_theorem1(limit, b2, opts);
  } else if (claim == "conjecture1") {
    report = check_conjecture1(limit, b2);
  } else if (claim == "conjecture1-images") {
    report = check_conjecture1_images(limit, b2);
  } else if (claim == "profile0125") {
    report = second_iterate_profile(limit, b2, opts);
  } else if (claim == "product-shape") {
    report = second_iterate_product_shape(limit, b2, opts);
  } else if (claim == "smooth-families") {
    if (limit >= (std::uint64_t{1} << 32)) throw UsageError("--limit must be below 2^32 for smooth-families");
    report = check_smooth_families(limit);
  } else if (claim == "no-nine") {
    report = check_no_nine(limit, b2, opts);
  } else if (claim == "steps-bound") {
    const Exponent k = exponent(c.k);
    report = check_steps_bound(limit, k, c.bound.value_or(10), c.budget.resolve(k), opts);
  } else if (claim == "cardinality") {
    const Exponent k1 = exponent(c.k);
    const Exponent k2 = exponent(c.k2);
    report = check_cardinality(limit, k1, k2, c.budget.resolve(k1), c.budget.resolve(k2), opts);
  } else {
    throw UsageError("unknown claim: " + claim);
  }
  err << "elapsed " << report.elapsed_seconds << " s\n";
  emit(c.output, c.output.format == "json" ? to_json(report) : render_report(report), out);
  return exit_code(report.status);
}

// ---------------------------------------------------------------- sieve

std::string render_sieve(const SieveReport& s) {
  std::ostringstream o;
  o << "modulus 10^" << s.r << " = " << s.modulus << "\n";
  o << "ord(9) = " << s.a_period << ", ord(49) = " << s.b_period << ", coset period of 49 = " << s.b_coset_period
    << "\n";
  o << "surviving classes " << s.surviving_class_count << ", eliminated " << s.eliminated_count << "\n";
  if (s.r == 2) {
    o << "\nresidues of 9^a * 49^b (mod 100), a and b of equal parity\n";
    for (const auto& row : residue_table_mod100()) {
      o << "  9^" << row.a << " * 49^(2r" << (row.b_parity ? "+1" : "") << ") = " << row.residue << " (mod 100)\n";
    }
  }
  o << "\nsurviving residues\n";
  for (const auto& res : s.residues) {
    std::string digits = std::to_string(res.residue);
    digits.insert(0, s.r - std::min<std::size_t>(s.r, digits.size()), '0');
    const auto& c = res.canonical;
    o << "  " << digits << "  a = " << c.a_offset << " (mod " << c.a_period << "), b = " << c.b_offset << " (mod "
      << c.b_period << "), " << res.class_count << (res.class_count == 1 ? " class" : " classes") << "\n";
  }
  if (s.exhaustive && s.surviving.size() <= 64) {
    o << "\nsurviving classes\n";
    for (const auto& c : s.surviving) {
      o << "  a = " << c.a_offset << " (mod " << c.a_period << "), b = " << c.b_offset << " (mod " << c.b_period
        << ") -> " << c.residue << "\n";
    }
  } else if (!s.exhaustive) {
    o << "\n(class list omitted: " << s.surviving_class_count << " classes exceed the enumeration cap)\n";
  }
  return o.str();
}

int cmd_sieve(const Config& c, std::ostream& out, std::ostream&) {
  SieveOptions opts;
  opts.enumeration_cap = c.cap;
  opts.threads = c.threads;
  opts.max_r = std::max(9u, c.r);
  if (c.r < 1 || c.r > 18) throw UsageError("--r must be in [1, 18]");
  const SieveReport report = sieve_binary_residues(c.r, opts);
  emit(c.output, c.output.format == "json" ? to_json(report) : render_sieve(report), out);
  return kOk;
}

// ---------------------------------------------------------------- extras

Natural positive(const std::string& text) {
  Natural v;
  try {
    v = Natural::from_decimal(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("expected a decimal integer: " + text);
  }
  if (v.is_zero()) throw UsageError("value must be >= 1");
  return v;
}

int cmd_factor(const Config& c, std::ostream& out, std::ostream&) {
  const Factorization f = factor_smooth(positive(c.value));
  std::ostringstream o;
  o << f.value << " = 2^" << f.exponents.e2 << " * 3^" << f.exponents.e3 << " * 5^" << f.exponents.e5 << " * 7^"
    << f.exponents.e7 << " * " << f.cofactor << "\n";
  o << "7-smooth " << (f.is_seven_smooth() ? "yes" : "no") << "\n";
  emit(c.output, o.str(), out);
  return kOk;
}

int cmd_preimage(const Config& c, std::ostream& out, std::ostream&) {
  const auto m = digit_product_preimage(positive(c.value));
  emit(c.output, m ? m->to_string() + "\n" : std::string("none\n"), out);
  return m ? kOk : kRefuted;
}

int cmd_digit_length(const Config& c, std::ostream& out, std::ostream&) {
  const auto by_log = digit_length_by_logarithm(c.a, c.b);
  std::ostringstream o;
  o << digit_length_of_power_product(c.a, c.b) << "\n";
  o << "logarithm " << (by_log ? "decisive" : "inside guard band, exact fallback") << "\n";
  emit(c.output, o.str(), out);
  return kOk;
}

int cmd_congruence(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.r < 1 || c.r > 18) throw UsageError("--r must be in [1, 18]");
  if (c.samples < 1) throw UsageError("--samples must be >= 1");
  if (c.b_period < 1) throw UsageError("--b-period must be >= 1");
  const ConjectureReport report = verify_periodic_congruence(c.a, c.b, c.b_period, c.r, c.target, c.samples);
  err << "elapsed " << report.elapsed_seconds << " s\n";
  emit(c.output, c.output.format == "json" ? to_json(report) : render_report(report), out);
  return exit_code(report.status);
}

int cmd_binary_squares(const Config& c, std::ostream& out, std::ostream&) {
  const std::uint64_t bound = c.bound.value_or(10'000'000);
  if (bound == 0 || bound >= (std::uint64_t{1} << 32)) throw UsageError("--bound must be in [1, 2^32)");
  std::string text;
  bool nontrivial = false;
  for (const auto& s : search_binary_digit_squares(bound)) {
    text += std::to_string(s.root) + " " + s.square.to_string() + (s.power_of_ten ? "" : " nontrivial") + "\n";
    nontrivial = nontrivial || !s.power_of_ten;
  }
  emit(c.output, text, out);
  return nontrivial ? kRefuted : kOk;
}

int cmd_candidates(const Config& c, std::ostream& out, std::ostream&) {
  const std::uint64_t bound = c.bound.value_or(10'000);
  if (bound == 0 || bound >= (std::uint64_t{1} << 32)) throw UsageError("--bound must be in [1, 2^32)");
  emit(c.output, join(scan_candidate_squares(bound)) + "\n", out);
  return kOk;
}

int cmd_suffix(const Config& c, std::ostream& out, std::ostream&) {
  SuffixVerdict v;
  try {
    v = exclude_suffix(c.value);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(c.output, std::string(to_string(v)) + "\n", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Iterated nonzero-digit-product map n -> P(n)^k: term lists, trajectories and bounded checks",
               "digitprod"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto* terms = app.add_subcommand("terms", "List the terms of S_k up to --limit");
  terms->add_option("--k", c.k, "Exponent k >= 2")->capture_default_str();
  terms->add_option("--limit", c.limit, "Largest start value scanned [default: 1000]");
  terms->add_option("--offset", c.offset, "First b-file index")->capture_default_str();
  add_budget(terms, c.budget);
  add_threads(terms, c);
  add_output(terms, c.output, {"text", "json", "csv", "bfile"});

  auto* traj = app.add_subcommand("trajectory", "Print the orbit of one start value");
  traj->add_option("n", c.value, "Start value >= 1")->required();
  traj->add_option("--k", c.k, "Exponent k >= 2")->capture_default_str();
  add_budget(traj, c.budget);
  add_output(traj, c.output, {"text", "json", "csv"});

  auto* verify = app.add_subcommand("verify", "Bounded check of one claim");
  std::vector<std::string> claims;
  for (const auto& [name, _] : claim_default_limits()) claims.push_back(name);
  verify->add_option("claim", c.value, "Claim id")->required()->check(CLI::IsMember(claims));
  verify->add_option("--limit", c.limit,
                     "Scan bound [default: lemma1, theorem1, profile0125, product-shape 1000000; conjecture1 "
                     "100000000; conjecture1-images 10^18; smooth-families 1000000 (bound on the root); no-nine 10000000; steps-bound, "
                     "cardinality 1000]");
  verify->add_option("--k", c.verify_k, "Exponent for steps-bound [default: 3], first exponent for cardinality [default: 2]");
  verify->add_option("--k2", c.k2, "Second exponent for cardinality")->capture_default_str();
  verify->add_option("--bound", c.bound, "Step bound for steps-bound [default: 10]");
  add_budget(verify, c.budget);
  add_threads(verify, c);
  add_output(verify, c.output, {"text", "json"});

  auto* sieve = app.add_subcommand("sieve", "Residues of 9^a * 49^b modulo 10^r with only digits 0 and 1");
  sieve->add_option("--r", c.r, "Level r (modulus 10^r), 1..18")->capture_default_str();
  sieve->add_option("--cap", c.cap, "Largest class count listed in full")->capture_default_str();
  sieve->add_option("--threads", c.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  add_output(sieve, c.output, {"text", "json"});

  auto* factor = app.add_subcommand("factor", "Split v into its 7-smooth part and cofactor");
  factor->add_option("v", c.value, "Value >= 1")->required();
  add_output(factor, c.output, {"text"});

  auto* preimage = app.add_subcommand("preimage", "Smallest m with P(m) = v (exit 1 if none)");
  preimage->add_option("v", c.value, "Value >= 1")->required();
  add_output(preimage, c.output, {"text"});

  auto* length = app.add_subcommand("digit-length", "Decimal length of 9^a * 49^b");
  length->add_option("--a", c.a, "Exponent of 9")->capture_default_str();
  length->add_option("--b", c.b, "Exponent of 49")->capture_default_str();
  add_output(length, c.output, {"text"});

  auto* congruence =
      app.add_subcommand("congruence", "Check 9^a * 49^(b + period*t) = target (mod 10^r) for t < samples");
  congruence->add_option("--a", c.a, "Exponent of 9")->capture_default_str();
  congruence->add_option("--b", c.b, "Offset of the exponent of 49")->capture_default_str();
  congruence->add_option("--b-period", c.b_period, "Period of the exponent of 49")->capture_default_str();
  congruence->add_option("--r", c.r, "Level r (modulus 10^r)")->capture_default_str();
  congruence->add_option("--target", c.target, "Expected residue")->capture_default_str();
  congruence->add_option("--samples", c.samples, "Number of t values")->capture_default_str();
  add_output(congruence, c.output, {"text", "json"});

  auto* binsq = app.add_subcommand("binary-squares", "Roots d <= bound whose square has only digits 0 and 1");
  binsq->add_option("--bound", c.bound, "Bound on the root [default: 10000000]");
  add_output(binsq, c.output, {"text"});

  auto* cand = app.add_subcommand("candidates", "Roots m <= bound whose square has the power-of-ten-product shape");
  cand->add_option("--bound", c.bound, "Bound on the root [default: 10000]");
  add_output(cand, c.output, {"text"});

  auto* suffix = app.add_subcommand("suffix", "Whether a 0/1 suffix is impossible for a perfect square");
  suffix->add_option("digits", c.value, "Suffix of digits 0 and 1")->required();
  add_output(suffix, c.output, {"text"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) {
      c.k = c.verify_k.value_or(c.value == "steps-bound" ? 3 : 2);
      return cmd_verify(c, out, err);
    }
    if (terms->parsed()) return cmd_terms(c, out, err);
    if (traj->parsed()) return cmd_trajectory(c, out, err);
    if (sieve->parsed()) return cmd_sieve(c, out, err);
    if (factor->parsed()) return cmd_factor(c, out, err);
    if (preimage->parsed()) return cmd_preimage(c, out, err);
    if (length->parsed()) return cmd_digit_length(c, out, err);
    if (congruence->parsed()) return cmd_congruence(c, out, err);
    if (binsq->parsed()) return cmd_binary_squares(c, out, err);
    if (cand->parsed()) return cmd_candidates(c, out, err);
    if (suffix->parsed()) return cmd_suffix(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace digitprod::cli
