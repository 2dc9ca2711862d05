#include "digitprod/report_json.hpp"

#include <type_traits>
#include <variant>

#include <json.hpp>

namespace digitprod {

namespace {

using Json = nlohmann::ordered_json;

Json budget_json(const IterationBudget& b) { return Json{{"max_steps", b.max_steps}, {"max_digits", b.max_digits}}; }

Json outcome_json(const Outcome& outcome) {
  return std::visit(
      [](const auto& o) -> Json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ReachesOne>) {
          return Json{{"kind", "reaches-one"}, {"steps", o.steps}};
        } else if constexpr (std::is_same_v<T, EntersCycle>) {
          return Json{{"kind", "enters-cycle"},
                      {"entry_index", o.entry_index},
                      {"entry_value", o.entry_value.to_string()},
                      {"length", o.length}};
        } else {
          return Json{{"kind", "undecided"}, {"reason", std::string(to_string(o.reason))}};
        }
      },
      outcome);
}

Json class_json(const ResidueClass& c) {
  return Json{{"a_offset", c.a_offset}, {"a_period", c.a_period}, {"b_offset", c.b_offset},
              {"b_period", c.b_period}, {"modulus", c.modulus},   {"residue", c.residue}};
}

}  // namespace

std::string to_json(const TermTable& table) {
  Json terms = Json::array();
  for (const auto& r : table.records) {
    terms.push_back(Json{{"n", r.n},
                         {"steps", r.steps},
                         {"penultimate", r.penultimate ? Json(r.penultimate->to_string()) : Json(nullptr)}});
  }
  Json j;
  j["k"] = table.k.value();
  j["limit"] = table.limit;
  j["terms"] = std::move(terms);
  j["undecided"] = table.undecided;
  j["budget"] = budget_json(table.budget);
  return j.dump(2) + "\n";
}

std::string to_json(const Trajectory& t) {
  Json iterates = Json::array();
  for (const auto& v : t.iterates) iterates.push_back(v.to_string());
  Json j;
  j["start"] = t.start.to_string();
  j["k"] = t.k.value();
  j["iterates"] = std::move(iterates);
  j["outcome"] = outcome_json(t.outcome);
  return j.dump(2) + "\n";
}

std::string to_json(const ConjectureReport& report) {
  Json counterexamples = Json::array();
  for (const auto& c : report.counterexamples) counterexamples.push_back(c.to_string());
  Json metrics = Json::object();
  for (const auto& m : report.metrics) metrics[m.name] = m.value;
  Json j;
  j["claim_id"] = report.claim_id;
  j["bound"] = report.bound.to_string();
  j["k"] = report.k.value();
  j["status"] = std::string(to_string(report.status));
  j["counterexamples"] = std::move(counterexamples);
  j["undecided_count"] = report.undecided_count;
  j["metrics"] = std::move(metrics);
  return j.dump(2) + "\n";
}

std::string to_json(const SieveReport& report) {
  Json residues = Json::array();
  for (const auto& s : report.residues) {
    residues.push_back(Json{{"residue", s.residue}, {"class_count", s.class_count}, {"canonical", class_json(s.canonical)}});
  }
  Json surviving = Json::array();
  for (const auto& c : report.surviving) surviving.push_back(class_json(c));
  Json j;
  j["r"] = report.r;
  j["modulus"] = report.modulus;
  j["a_period"] = report.a_period;
  j["b_period"] = report.b_period;
  j["b_coset_period"] = report.b_coset_period;
  j["exhaustive"] = report.exhaustive;
  j["surviving_class_count"] = report.surviving_class_count;
  j["eliminated_count"] = report.eliminated_count;
  j["residues"] = std::move(residues);
  j["surviving"] = std::move(surviving);
  return j.dump(2) + "\n";
}

}  // namespace digitprod
