#ifndef REES_JSON_REPORT_HPP
#define REES_JSON_REPORT_HPP

#include <json.hpp>

#include "rees/harness.hpp"
#include "rees/rees.hpp"

namespace rees {

inline nlohmann::json report_to_json(const ReesReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["gd"] = rep.gd_ok;
  j["linear_type"] = rep.linear_type;
  nlohmann::json h;
  h["L"] = rep.ht_L;
  h["A"] = rep.ht_A;
  h["IdB1"] = rep.ht_IdB1 ? nlohmann::json(*rep.ht_IdB1) : nullptr;
  h["IdBphi_prime"] =
      rep.ht_IdBphi_prime ? nlohmann::json(*rep.ht_IdBphi_prime) : nullptr;
  h["Id1Bphi_prime"] =
      rep.ht_Id1Bphi_prime ? nlohmann::json(*rep.ht_Id1Bphi_prime) : nullptr;
  j["heights"] = h;
  j["sat_index"] = rep.sat_index;
  j["stabilization_level"] = rep.stabilization_level;
  j["stabilization_reached"] = rep.stabilization_reached;
  j["forms_equal"] = rep.forms_equal;
  j["fiber_degree"] = rep.fiber.is_principal ? nlohmann::json(rep.fiber.degree)
                                             : nullptr;
  j["fiber_principal"] = rep.fiber.is_principal;
  j["relation_type"] = rep.relation_type_value;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : rep.A_min_gens) gens.push_back(g.str());
  j["generators"] = gens;
  return j;
}

inline nlohmann::json summary_to_json(const BatchSummary& s) {
  nlohmann::json j;
  j["trials_run"] = s.trials_run;
  j["Gd_pass_count"] = s.Gd_pass_count;
  j["forms_equal_count"] = s.forms_equal_count;
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [k, v] : s.sat_index_histogram)
    hist[std::to_string(k)] = v;
  j["sat_index_histogram"] = hist;
  j["height_violation_count"] = s.height_violation_count;
  j["law_violation_count"] = s.law_violation_count;
  j["budget_exceeded_count"] = s.budget_exceeded_count;
  j["generation_failures"] = s.generation_failures;
  j["counterexample_dumps"] = s.counterexample_dumps;
  j["violations"] = s.violation_messages;
  return j;
}

}  // namespace rees

#endif
