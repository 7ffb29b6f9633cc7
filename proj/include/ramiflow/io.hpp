#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramiflow/experiments.hpp"
#include "ramiflow/laws.hpp"
#include "ramiflow/measure.hpp"
#include "ramiflow/network.hpp"
#include "ramiflow/optimizer.hpp"
#include "ramiflow/plan.hpp"
#include "ramiflow/tree_weights.hpp"
#include "ramiflow/weight_ode.hpp"

namespace ramiflow::io {

// Serialization for the documented JSON schemas:
//   measure  {"atoms":[{"point":[...],"mass":m},...]}
//   plan     {"groups":[{"mass":m,"path":[[...],...]},...]}
//   network  {"root":[...],"branches":[{"id":..,"parent":..|null,
//             "vertices":[[...],...],"multiplicity":[{"s_from":..,
//             "value":..},...],"node_mass":..},...]}
//   laws     {"f":{"type":"zero"|"power"|"directional","c":..,"beta":..,
//             "gauge":{"norm_coef":..,"terms":[{"coef":..,"dir":[...]}]}},
//            "psi":{"type":"power","alpha":..}}
// Malformed documents raise ValidationError(MalformedInput); semantic
// violations surface through the types' own validation.

AtomicMeasure measure_from_json(const std::string& text);
std::string measure_to_json(const AtomicMeasure& mu);

IrrigationPlan plan_from_json(const std::string& text);
std::string plan_to_json(const IrrigationPlan& plan);

BranchedNetwork network_from_json(const std::string& text);
std::string network_to_json(const BranchedNetwork& net);

struct Laws {
  WeightLaw f;
  PsiLaw psi;
};
Laws laws_from_json(const std::string& text);
std::string laws_to_json(const Laws& laws);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// CSV emitters (header row first, one record per line).
std::string profiles_csv(const std::map<int, WeightProfile>& profiles,
                         int samples_per_piece = 8);
std::string lsc_csv(const LscReport& rep);
std::string topology_table_csv(const std::vector<TopologyRow>& rows);
std::string cost_breakdown_csv(const CostBreakdown& costs);

std::string lsc_summary_json(const LscReport& rep);
std::string suites_json(const SuiteReport& rep);

}  // namespace ramiflow::io
