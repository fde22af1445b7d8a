#include "majority/conditions.hpp"

#include <algorithm>

namespace majority {

const char* condition_name(Condition c) {
    switch (c) {
    case Condition::Dichotomous: return "dichotomous";
    case Condition::Echoic: return "echoic";
    case Condition::Antagonistic: return "antagonistic";
    case Condition::ValueRestriction: return "value_restriction";
    case Condition::Taboo: return "taboo";
    case Condition::ExtremalRestriction: return "extremal_restriction";
    case Condition::LimitedAgreement: return "limited_agreement";
    case Condition::CycleBalance: return "cycle_balance";
    }
    return "?";
}

const char* value_name(Value v) {
    switch (v) {
    case Value::Best: return "best";
    case Value::Worst: return "worst";
    case Value::Medium: return "medium";
    }
    return "?";
}

bool has_value(const TripleType& type, int position, Value value) {
    int p = position;
    int q = (position + 1) % 3;
    int r = (position + 2) % 3;
    switch (value) {
    case Value::Best:
        return type.weakly_prefers(p, q) && type.weakly_prefers(p, r);
    case Value::Worst:
        return type.weakly_prefers(q, p) && type.weakly_prefers(r, p);
    case Value::Medium:
        return (type.weakly_prefers(q, p) && type.weakly_prefers(p, r)) ||
               (type.weakly_prefers(r, p) && type.weakly_prefers(p, q));
    }
    return false;
}

namespace {

struct TripleView {
    std::vector<std::pair<int, TripleType>> voters; // sorted by id
    const Profile* profile;
    Triple triple;

    int concerned() const {
        int n = 0;
        for (const auto& [id, type] : voters) n += !type.unconcerned();
        return n;
    }
};

TripleView make_view(const Profile& p, const Triple& t) {
    TripleView view;
    view.profile = &p;
    view.triple = t;
    view.voters.reserve(p.entries().size());
    for (const auto& entry : p.entries()) {
        view.voters.emplace_back(entry.voter_id, TripleType::of(entry.ordering, t));
    }
    std::sort(view.voters.begin(), view.voters.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return view;
}

// All 6 ordered arrangements of triple positions, scanned in this fixed
// order so witnesses are deterministic.
constexpr int kArrangements[6][3] = {
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
};

constexpr int kOrderedPairs[6][2] = {
    {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1},
};

std::string pair_label(const TripleView& view, int a, int b) {
    const AlternativeSet& alts = view.profile->alternatives();
    return alts.name(view.triple[a]) + "," + alts.name(view.triple[b]);
}

} // namespace

ConditionVerdict check_dichotomous(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::Dichotomous;
    for (const auto& [id, type] : view.voters) {
        if (type.strict()) {
            v.holds = false;
            v.witness_voters = {id};
            return v;
        }
    }
    v.holds = true;
    v.certificate = "no strict ordering present";
    return v;
}

ConditionVerdict check_echoic(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::Echoic;
    for (const auto& arr : kArrangements) {
        int a = arr[0], b = arr[1], c = arr[2];
        for (const auto& [i, ti] : view.voters) {
            if (!(ti.prefers(a, b) && ti.prefers(b, c))) continue;
            for (const auto& [j, tj] : view.voters) {
                if (j == i) continue;
                if (tj.prefers(c, a)) {
                    v.holds = false;
                    v.witness_voters = {i, j};
                    return v;
                }
            }
        }
    }
    v.holds = true;
    v.certificate = "no ordering echoes against a strict chain";
    return v;
}

ConditionVerdict check_antagonistic(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::Antagonistic;
    for (const auto& arr : kArrangements) {
        int a = arr[0], b = arr[1], c = arr[2];
        for (const auto& [i, ti] : view.voters) {
            if (!(ti.prefers(a, b) && ti.prefers(b, c))) continue;
            for (const auto& [j, tj] : view.voters) {
                if (j == i) continue;
                // The same chain, its full reverse, or indifference between
                // the extremes.
                bool ok = (tj.prefers(a, b) && tj.prefers(b, c)) ||
                          (tj.prefers(c, b) && tj.prefers(b, a)) || tj.indifferent(a, c);
                if (!ok) {
                    v.holds = false;
                    v.witness_voters = {i, j};
                    return v;
                }
            }
        }
    }
    v.holds = true;
    v.certificate = "every strict chain is met by its reverse or extreme indifference";
    return v;
}

ConditionVerdict check_value_restriction(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::ValueRestriction;
    v.applicable = view.concerned() % 2 == 1;

    constexpr Value kValues[3] = {Value::Best, Value::Worst, Value::Medium};
    // realizer[pos][value] = lowest concerned voter giving `pos` that value
    int realizer[3][3];
    for (int pos = 0; pos < 3; ++pos) {
        for (int val = 0; val < 3; ++val) {
            realizer[pos][val] = -1;
            for (const auto& [id, type] : view.voters) {
                if (type.unconcerned()) continue;
                if (has_value(type, pos, kValues[val])) {
                    realizer[pos][val] = id;
                    break;
                }
            }
            if (realizer[pos][val] == -1) {
                v.holds = true;
                v.certificate = p.alternatives().name(t[pos]) + " never " +
                                value_name(kValues[val]) + " for any concerned voter";
                v.certificate_avoided = std::make_pair(t[pos], kValues[val]);
                return v;
            }
        }
    }
    v.holds = false;
    for (int pos = 0; pos < 3; ++pos)
        for (int val = 0; val < 3; ++val)
            if (std::find(v.witness_voters.begin(), v.witness_voters.end(),
                          realizer[pos][val]) == v.witness_voters.end())
                v.witness_voters.push_back(realizer[pos][val]);
    return v;
}

ConditionVerdict check_taboo(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::Taboo;
    v.applicable = view.concerned() % 2 == 1;

    for (const auto& [id, type] : view.voters) {
        if (type.unconcerned()) {
            v.holds = false;
            v.witness_voters = {id};
            return v;
        }
    }
    // violator[k] = lowest voter for whom pair k fails (no a-best, no b-worst)
    int violator[6];
    for (int k = 0; k < 6; ++k) {
        int a = kOrderedPairs[k][0], b = kOrderedPairs[k][1];
        violator[k] = -1;
        for (const auto& [id, type] : view.voters) {
            if (!has_value(type, a, Value::Best) && !has_value(type, b, Value::Worst)) {
                violator[k] = id;
                break;
            }
        }
        if (violator[k] == -1) {
            v.holds = true;
            v.certificate = "(" + pair_label(view, a, b) + "): first best or second worst for all";
            v.certificate_pair = std::make_pair(t[a], t[b]);
            return v;
        }
    }
    v.holds = false;
    for (int k = 0; k < 6; ++k) {
        if (std::find(v.witness_voters.begin(), v.witness_voters.end(), violator[k]) ==
            v.witness_voters.end()) {
            v.witness_voters.push_back(violator[k]);
        }
    }
    return v;
}

ConditionVerdict check_extremal_restriction(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::ExtremalRestriction;
    for (const auto& arr : kArrangements) {
        int a = arr[0], b = arr[1], c = arr[2];
        for (const auto& [i, ti] : view.voters) {
            if (!(ti.prefers(a, b) && ti.prefers(b, c))) continue;
            for (const auto& [j, tj] : view.voters) {
                if (tj.prefers(c, a) && !(tj.prefers(c, b) && tj.prefers(b, a))) {
                    v.holds = false;
                    v.witness_voters = {i, j};
                    return v;
                }
            }
        }
    }
    v.holds = true;
    v.certificate = "every extreme reversal is a full reversal";
    return v;
}

ConditionVerdict check_limited_agreement(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::LimitedAgreement;
    int violator[6];
    for (int k = 0; k < 6; ++k) {
        int a = kOrderedPairs[k][0], b = kOrderedPairs[k][1];
        violator[k] = -1;
        for (const auto& [id, type] : view.voters) {
            if (type.prefers(b, a)) {
                violator[k] = id;
                break;
            }
        }
        if (violator[k] == -1) {
            v.holds = true;
            v.certificate = "(" + pair_label(view, a, b) + ") weakly preferred by all";
            v.certificate_pair = std::make_pair(t[a], t[b]);
            return v;
        }
    }
    v.holds = false;
    for (int k = 0; k < 6; ++k) {
        if (std::find(v.witness_voters.begin(), v.witness_voters.end(), violator[k]) ==
            v.witness_voters.end()) {
            v.witness_voters.push_back(violator[k]);
        }
    }
    return v;
}

ConditionVerdict check_cycle_balance(const Profile& p, const Triple& t) {
    TripleView view = make_view(p, t);
    ConditionVerdict v;
    v.condition = Condition::CycleBalance;
    int counts[6] = {};
    for (const auto& [id, type] : view.voters) {
        if (type.unconcerned()) continue;
        if (!type.strict()) {
            v.holds = false;
            v.witness_voters = {id};
            return v;
        }
        ++counts[type.canonical_index()];
    }
    for (int k = 1; k < 6; ++k) {
        if (counts[k] != counts[0]) {
            v.holds = false;
            for (const auto& [id, type] : view.voters) {
                if (type.strict()) v.witness_voters.push_back(id);
            }
            return v;
        }
    }
    v.holds = true;
    v.certificate = std::to_string(counts[0]) + " clockwise and " + std::to_string(counts[0]) +
                    " counterclockwise cycles";
    return v;
}

ConditionVerdict check_condition(Condition c, const Profile& p, const Triple& t) {
    switch (c) {
    case Condition::Dichotomous: return check_dichotomous(p, t);
    case Condition::Echoic: return check_echoic(p, t);
    case Condition::Antagonistic: return check_antagonistic(p, t);
    case Condition::ValueRestriction: return check_value_restriction(p, t);
    case Condition::Taboo: return check_taboo(p, t);
    case Condition::ExtremalRestriction: return check_extremal_restriction(p, t);
    case Condition::LimitedAgreement: return check_limited_agreement(p, t);
    case Condition::CycleBalance: return check_cycle_balance(p, t);
    }
    raise(ErrorCode::UsageError, "unknown condition");
}

const ConditionVerdict& ConditionReport::verdict(Condition c) const {
    return verdicts[static_cast<size_t>(c)];
}

ConditionReport condition_report(const Profile& p, const Triple& t) {
    ConditionReport report;
    for (size_t k = 0; k < kAllConditions.size(); ++k) {
        report.verdicts[k] = check_condition(kAllConditions[k], p, t);
        if (report.verdicts[k].holds && report.verdicts[k].applicable) {
            report.any_satisfied = true;
        }
    }
    return report;
}

bool revalidate_witness(const Profile& p, const Triple& t, const ConditionVerdict& verdict) {
    if (verdict.holds) return true;
    if (verdict.witness_voters.empty()) return false;
    Profile sub = p.subset(verdict.witness_voters);
    return !check_condition(verdict.condition, sub, t).holds;
}

} // namespace majority
