#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "majority/conditions.hpp"
#include "majority/cycles.hpp"
#include "majority/margins.hpp"
#include "majority/oi_framework.hpp"
#include "majority/oracle.hpp"
#include "majority/reduction.hpp"

// JSON report builders for the command-line front end. Key order is fixed
// (insertion order), so byte output is deterministic for fixed inputs.
// Every report carries "schema": 1.
namespace majority::report {

using json = nlohmann::ordered_json;

json json_envelope(const std::string& command);

json triple_names(const AlternativeSet& alts, const Triple& t);

json aggregate_report(const Profile& p);
json condition_report_json(const Profile& p, const Triple& t);
json reduction_report(const ReducedStructure& rs);
json rewrite_trace_json(const ReducedStructure& rs);
json cycles_report(const Profile& p, const Triple& t);
json theorem_report(const TheoremVerdict& v, const AlternativeSet& alts);
json decomposition_report(const std::optional<Decomposition>& d);
json axiom_report_json(const AxiomReport& r);
json census_report_json(const CensusReport& r);
std::string census_report_csv(const CensusReport& r);
json sufficiency_report_json(const SufficiencyResult& r);

// Text renderings of the same verdicts.
std::string aggregate_text(const Profile& p);
std::string condition_text(const Profile& p, const Triple& t);
std::string reduction_text(const ReducedStructure& rs);
std::string cycles_text(const Profile& p, const Triple& t);
std::string theorem_text(const TheoremVerdict& v, const AlternativeSet& alts);
std::string decomposition_text(const std::optional<Decomposition>& d);
std::string axiom_text(const AxiomReport& r);
std::string census_text(const CensusReport& r);
std::string sufficiency_text(const SufficiencyResult& r);

} // namespace majority::report
