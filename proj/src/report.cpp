#include "majority/report.hpp"

#include <sstream>

namespace majority::report {

namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ids[i]);
    }
    return out;
}

const Triple kLocalTriple(0, 1, 2, 3);

} // namespace

json json_envelope(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

json triple_names(const AlternativeSet& alts, const Triple& t) {
    return json::array({alts.name(t.a), alts.name(t.b), alts.name(t.c)});
}

json aggregate_report(const Profile& p) {
    const AlternativeSet& alts = p.alternatives();
    PairCounts counts = pair_counts(p);
    MajorityRelation rel = aggregate(p);

    json j;
    j["voters"] = p.size();
    j["alternatives"] = alts.names();
    json count_obj = json::object();
    json margin_obj = json::object();
    for (int a = 0; a < alts.size(); ++a) {
        for (int b = 0; b < alts.size(); ++b) {
            if (a == b) continue;
            std::string key = alts.name(a) + ">" + alts.name(b);
            count_obj[key] = counts.prefers(a, b);
            if (a < b) {
                margin_obj[alts.name(a) + "," + alts.name(b)] = rel.margin_matrix().at(a, b);
            }
        }
    }
    j["counts"] = count_obj;
    j["margins"] = margin_obj;
    json pairs = json::array();
    for (int a = 0; a < alts.size(); ++a) {
        for (int b = a + 1; b < alts.size(); ++b) {
            std::string verdict = rel.prefers(a, b)
                                      ? alts.name(a) + " P " + alts.name(b)
                                      : (rel.prefers(b, a) ? alts.name(b) + " P " + alts.name(a)
                                                           : alts.name(a) + " I " + alts.name(b));
            pairs.push_back(verdict);
        }
    }
    j["relation"] = pairs;
    j["transitive"] = rel.transitive();
    if (rel.transitive()) {
        j["social_ordering"] = rel.format_ordering(alts);
    } else {
        j["witness"] = triple_names(alts, *rel.witness());
    }
    return j;
}

std::string aggregate_text(const Profile& p) {
    const AlternativeSet& alts = p.alternatives();
    PairCounts counts = pair_counts(p);
    MajorityRelation rel = aggregate(p);
    std::ostringstream out;
    out << "profile: " << p.size() << " voters over {";
    for (int a = 0; a < alts.size(); ++a) out << (a ? ", " : "") << alts.name(a);
    out << "}\n";
    for (int a = 0; a < alts.size(); ++a) {
        for (int b = a + 1; b < alts.size(); ++b) {
            out << "N(" << alts.name(a) << "P" << alts.name(b) << ")=" << counts.prefers(a, b)
                << "  N(" << alts.name(b) << "P" << alts.name(a) << ")=" << counts.prefers(b, a)
                << "  margin=" << rel.margin_matrix().at(a, b) << "\n";
        }
    }
    if (rel.transitive()) {
        out << "social ordering: " << rel.format_ordering(alts) << " (transitive)\n";
    } else {
        const Triple& w = *rel.witness();
        out << "social relation is INTRANSITIVE, witness triple (" << alts.name(w.a) << ","
            << alts.name(w.b) << "," << alts.name(w.c) << ")\n";
    }
    return out.str();
}

namespace {

json verdict_json(const ConditionVerdict& v) {
    json j;
    j["condition"] = condition_name(v.condition);
    j["holds"] = v.holds;
    j["applicable"] = v.applicable;
    if (v.holds) {
        j["certificate"] = v.certificate;
    } else {
        j["witness_voters"] = v.witness_voters;
    }
    return j;
}

} // namespace

json condition_report_json(const Profile& p, const Triple& t) {
    ConditionReport report = condition_report(p, t);
    json j;
    j["conditions"] = json::array();
    for (const ConditionVerdict& v : report.verdicts) j["conditions"].push_back(verdict_json(v));
    j["any_satisfied"] = report.any_satisfied;
    return j;
}

std::string condition_text(const Profile& p, const Triple& t) {
    ConditionReport report = condition_report(p, t);
    const AlternativeSet& alts = p.alternatives();
    std::ostringstream out;
    out << "triple (" << alts.name(t.a) << "," << alts.name(t.b) << "," << alts.name(t.c)
        << "):\n";
    for (const ConditionVerdict& v : report.verdicts) {
        out << "  " << condition_name(v.condition);
        for (size_t pad = std::string(condition_name(v.condition)).size(); pad < 22; ++pad) {
            out << ' ';
        }
        if (v.holds) {
            out << "holds";
            if (!v.applicable) out << " (not applicable: even concerned count)";
            if (!v.certificate.empty()) out << "  [" << v.certificate << "]";
        } else {
            out << "VIOLATED  witness voters {" << join_ids(v.witness_voters) << "}";
        }
        out << "\n";
    }
    out << "  any condition satisfied: " << (report.any_satisfied ? "yes" : "no") << "\n";
    return out.str();
}

json rewrite_trace_json(const ReducedStructure& rs) {
    const AlternativeSet& alts = rs.residual.alternatives();
    json trace = json::array();
    for (const Rewrite& r : rs.trace) {
        json produced = json::array();
        for (const TripleType& type : r.produced) {
            produced.push_back(type.format(alts, kLocalTriple));
        }
        trace.push_back(json{{"rule", rewrite_rule_name(r.rule)},
                             {"consumed", r.consumed},
                             {"produced", produced}});
    }
    return trace;
}

json reduction_report(const ReducedStructure& rs) {
    const AlternativeSet& alts = rs.residual.alternatives();
    json j;
    j["steps"] = rs.trace.size();
    j["trace"] = rewrite_trace_json(rs);
    json residual = json::array();
    for (const auto& e : rs.residual.entries()) {
        residual.push_back(json{{"voter", e.voter_id}, {"ordering", e.ordering.format(alts)}});
    }
    j["residual"] = residual;
    j["k"] = rs.k;
    j["l"] = rs.l;
    j["form"] = rs.form_label();
    return j;
}

std::string reduction_text(const ReducedStructure& rs) {
    const AlternativeSet& alts = rs.residual.alternatives();
    std::ostringstream out;
    for (const Rewrite& r : rs.trace) {
        out << "  " << rewrite_rule_name(r.rule) << " consumed {" << join_ids(r.consumed) << "}";
        if (!r.produced.empty()) {
            out << " produced {";
            for (size_t i = 0; i < r.produced.size(); ++i) {
                out << (i ? ", " : "") << r.produced[i].format(alts, kLocalTriple);
            }
            out << "}";
        }
        out << "\n";
    }
    if (rs.trace.empty()) out << "  no rewrite applies\n";
    out << "  residual: ";
    if (rs.residual.empty()) {
        out << "(empty)";
    } else {
        for (int i = 0; i < rs.residual.size(); ++i) {
            const auto& e = rs.residual.entries()[static_cast<size_t>(i)];
            out << (i ? ", " : "") << e.voter_id << ":" << e.ordering.format(alts);
        }
    }
    out << "\n  standard form: " << rs.form_label() << "\n";
    return out.str();
}

json cycles_report(const Profile& p, const Triple& t) {
    std::vector<CycleFinding> findings = find_strict_cycles(p, t);
    const AlternativeSet& alts = p.alternatives();
    json j;
    j["cycles"] = json::array();
    for (const CycleFinding& f : findings) {
        j["cycles"].push_back(json{{"members", f.members},
                                   {"orientation", cycle_tag_name(f.orientation)},
                                   {"labeling", triple_names(alts, f.labeling)}});
    }
    j["count"] = findings.size();
    return j;
}

std::string cycles_text(const Profile& p, const Triple& t) {
    std::vector<CycleFinding> findings = find_strict_cycles(p, t);
    const AlternativeSet& alts = p.alternatives();
    std::ostringstream out;
    if (findings.empty()) {
        out << "  no strict cycle\n";
        return out.str();
    }
    for (const CycleFinding& f : findings) {
        out << "  cycle " << cycle_tag_name(f.orientation) << " members {"
            << join_ids({f.members.begin(), f.members.end()}) << "} labeling ("
            << alts.name(f.labeling.a) << "," << alts.name(f.labeling.b) << ","
            << alts.name(f.labeling.c) << ")\n";
    }
    return out.str();
}

json theorem_report(const TheoremVerdict& v, const AlternativeSet& alts) {
    json j;
    j["premises_hold"] = v.premises_hold;
    j["condition_holds"] = v.condition_holds;
    if (v.labeling_used) {
        j["labeling"] = triple_names(alts, *v.labeling_used);
    }
    j["cycle_members"] = v.cycle_members;
    j["predicted_transitive"] = v.predicted_transitive;
    j["actual_transitive"] = v.actual_transitive;
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

std::string theorem_text(const TheoremVerdict& v, const AlternativeSet& alts) {
    std::ostringstream out;
    out << "  premises: " << (v.premises_hold ? "hold" : "fail");
    if (!v.cycle_members.empty()) out << "  cycle members {" << join_ids(v.cycle_members) << "}";
    out << "\n  condition: " << (v.condition_holds ? "holds" : "fails");
    if (v.labeling_used) {
        out << " under labeling (" << alts.name(v.labeling_used->a) << ","
            << alts.name(v.labeling_used->b) << "," << alts.name(v.labeling_used->c) << ")";
    }
    out << "\n  predicted transitive: " << (v.predicted_transitive ? "yes" : "no")
        << "\n  actually transitive:  " << (v.actual_transitive ? "yes" : "no") << "\n";
    if (!v.detail.empty()) out << "  note: " << v.detail << "\n";
    return out.str();
}

json decomposition_report(const std::optional<Decomposition>& d) {
    json j;
    j["found"] = d.has_value();
    if (d) {
        j["balanced_part"] = d->balanced_part;
        j["remainder"] = d->remainder;
        j["remainder_ordinal"] = d->remainder_ordinal;
    }
    return j;
}

std::string decomposition_text(const std::optional<Decomposition>& d) {
    std::ostringstream out;
    if (!d) {
        out << "  no balanced decomposition\n";
        return out.str();
    }
    out << "  balanced part T = {" << join_ids(d->balanced_part) << "}\n";
    out << "  remainder       = {" << join_ids(d->remainder) << "}"
        << (d->remainder_ordinal ? " (ordinal)" : "") << "\n";
    return out.str();
}

namespace {

json axiom_check_json(const AxiomCheck& c) {
    json j;
    j["pass"] = c.pass;
    j["cases_checked"] = c.cases_checked;
    if (!c.pass) j["counterexample"] = c.counterexample;
    return j;
}

} // namespace

json axiom_report_json(const AxiomReport& r) {
    json j;
    j["axiom1"] = axiom_check_json(r.axiom1);
    j["axiom2"] = axiom_check_json(r.axiom2);
    j["axiom3"] = axiom_check_json(r.axiom3);
    j["axiom4"] = axiom_check_json(r.axiom4);
    j["axiom2_universal"] = axiom_check_json(r.axiom2_universal);
    j["all_pass"] = r.all_pass();
    return j;
}

std::string axiom_text(const AxiomReport& r) {
    auto line = [](const char* name, const AxiomCheck& c) {
        std::ostringstream out;
        out << "  " << name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.cases_checked
            << " cases)";
        if (!c.pass) out << "  counterexample: " << c.counterexample;
        out << "\n";
        return out.str();
    };
    std::string out;
    out += line("axiom 1 (non-preference) ", r.axiom1);
    out += line("axiom 2 (additivity)     ", r.axiom2);
    out += line("axiom 3 (subtractivity)  ", r.axiom3);
    out += line("axiom 4 (substitutability)", r.axiom4);
    out += line("axiom 2, any base set    ", r.axiom2_universal);
    return out;
}

json census_report_json(const CensusReport& r) {
    json j;
    j["n_voters"] = r.n_voters;
    j["total_profiles"] = r.total_profiles;
    j["transitive_count"] = r.transitive_count;
    json per = json::object();
    for (size_t k = 0; k < kAllConditions.size(); ++k) {
        per[condition_name(kAllConditions[k])] =
            json{{"holds", r.per_condition[k].holds},
                 {"holds_and_transitive", r.per_condition[k].holds_and_transitive}};
    }
    j["per_condition"] = per;
    return j;
}

std::string census_report_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "n_voters,total_profiles,transitive_count,condition,holds,holds_and_transitive\n";
    for (size_t k = 0; k < kAllConditions.size(); ++k) {
        out << r.n_voters << "," << r.total_profiles << "," << r.transitive_count << ","
            << condition_name(kAllConditions[k]) << "," << r.per_condition[k].holds << ","
            << r.per_condition[k].holds_and_transitive << "\n";
    }
    return out.str();
}

std::string census_text(const CensusReport& r) {
    std::ostringstream out;
    out << "n=" << r.n_voters << "  profiles=" << r.total_profiles
        << "  transitive=" << r.transitive_count << "\n";
    for (size_t k = 0; k < kAllConditions.size(); ++k) {
        out << "  " << condition_name(kAllConditions[k]) << ": holds "
            << r.per_condition[k].holds << ", of which transitive "
            << r.per_condition[k].holds_and_transitive << "\n";
    }
    return out.str();
}

json sufficiency_report_json(const SufficiencyResult& r) {
    json j;
    j["condition"] = r.condition;
    j["n_max"] = r.n_max;
    j["pass"] = r.pass();
    j["multisets_checked"] = r.multisets_checked;
    j["holding"] = r.holding;
    if (r.counterexample) {
        const AlternativeSet& alts = r.counterexample->alternatives();
        json orderings = json::array();
        for (const auto& e : r.counterexample->entries()) {
            orderings.push_back(e.ordering.format(alts));
        }
        j["counterexample"] = orderings;
    }
    return j;
}

std::string sufficiency_text(const SufficiencyResult& r) {
    std::ostringstream out;
    out << "condition " << r.condition << " up to n=" << r.n_max << ": "
        << (r.pass() ? "sufficient" : "NOT sufficient") << " (" << r.holding
        << " holding profiles of " << r.multisets_checked << " checked)\n";
    if (r.counterexample) {
        const AlternativeSet& alts = r.counterexample->alternatives();
        out << "  counterexample: {";
        for (int i = 0; i < r.counterexample->size(); ++i) {
            out << (i ? ", " : "")
                << r.counterexample->entries()[static_cast<size_t>(i)].ordering.format(alts);
        }
        out << "}\n";
    }
    return out.str();
}

} // namespace majority::report
