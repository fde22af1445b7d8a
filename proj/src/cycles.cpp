#include "majority/cycles.hpp"

#include <algorithm>
#include <functional>

#include "majority/error.hpp"
#include "majority/margins.hpp"

namespace majority {

namespace {

struct TypedVoter {
    int id;
    TripleType type;
};

std::vector<TypedVoter> typed_voters(const Profile& p, const Triple& t) {
    std::vector<TypedVoter> out;
    for (const auto& e : p.entries()) {
        out.push_back({e.voter_id, TripleType::of(e.ordering, t)});
    }
    std::sort(out.begin(), out.end(),
              [](const TypedVoter& a, const TypedVoter& b) { return a.id < b.id; });
    return out;
}

} // namespace

std::vector<CycleFinding> find_strict_cycles(const Profile& p, const Triple& t) {
    std::vector<TypedVoter> voters = typed_voters(p, t);
    const int n = static_cast<int>(voters.size());
    std::vector<CycleFinding> out;
    for (int i = 0; i < n; ++i) {
        OrderingClass ci = classify_type(voters[i].type);
        if (ci.kind != OrderingKind::Strict) continue;
        for (int j = i + 1; j < n; ++j) {
            OrderingClass cj = classify_type(voters[j].type);
            if (cj.kind != OrderingKind::Strict || cj.cycle != ci.cycle ||
                cj.position == ci.position) {
                continue;
            }
            for (int k = j + 1; k < n; ++k) {
                OrderingClass ck = classify_type(voters[k].type);
                if (ck.kind != OrderingKind::Strict || ck.cycle != ci.cycle ||
                    ck.position == ci.position || ck.position == cj.position) {
                    continue;
                }
                CycleFinding finding;
                finding.members = {voters[i].id, voters[j].id, voters[k].id};
                finding.orientation = ci.cycle;
                // A U2 cycle holds the clockwise pattern under the
                // reversed reference triple.
                finding.labeling = ci.cycle == CycleTag::U1
                                       ? t
                                       : Triple(t.c, t.b, t.a, std::max({t.a, t.b, t.c}) + 1);
                out.push_back(finding);
            }
        }
    }
    return out;
}

std::vector<CycleFinding> extract_disjoint_cycles(const Profile& p, const Triple& t) {
    std::vector<CycleFinding> out;
    Profile remaining = p;
    while (true) {
        std::vector<CycleFinding> found = find_strict_cycles(remaining, t);
        if (found.empty()) break;
        const CycleFinding& first = found.front();
        out.push_back(first);
        for (int id : first.members) remaining.remove_voter(id);
    }
    return out;
}

std::vector<TripleType> admissible_remainder_types() {
    std::vector<TripleType> out;
    for (const TripleType& type : TripleType::all()) {
        if (type.weakly_prefers(0, 1) && type.weakly_prefers(1, 2) && type.prefers(0, 2)) {
            out.push_back(type);
        }
    }
    return out;
}

std::vector<WeakOrdering> admissible_remainder_orderings() {
    std::vector<WeakOrdering> out;
    for (const TripleType& type : admissible_remainder_types()) {
        out.push_back(type.to_ordering());
    }
    return out;
}

namespace {

bool triple_transitive(const Profile& p, const Triple& t) {
    auto m = triple_margins(p, t);
    return triple_relation_transitive(m[0], m[1], m[2]);
}

// Condition (1): x R y, y R z, x P z for every voter outside the cycle,
// under some rotational labeling of the cycle.
bool condition_one_holds(const Profile& p, const CycleFinding& cycle, Triple* labeling_used) {
    const Triple& base = cycle.labeling;
    const int bound = std::max({base.a, base.b, base.c}) + 1;
    const Triple rotations[3] = {
        base,
        Triple(base.b, base.c, base.a, bound),
        Triple(base.c, base.a, base.b, bound),
    };
    for (const Triple& rot : rotations) {
        bool ok = true;
        for (const auto& e : p.entries()) {
            if (std::find(cycle.members.begin(), cycle.members.end(), e.voter_id) !=
                cycle.members.end()) {
                continue;
            }
            const WeakOrdering& o = e.ordering;
            if (!(o.weakly_prefers(rot.a, rot.b) && o.weakly_prefers(rot.b, rot.c) &&
                  o.prefers(rot.a, rot.c))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (labeling_used) *labeling_used = rot;
            return true;
        }
    }
    return false;
}

// Shared premise of the corollary checks: all voters concerned, n >= 9,
// and a disjoint pair of antagonistic cycles. Returns the first such pair
// in ascending member-id order.
bool antagonistic_cycle_premises(const Profile& p, const Triple& t, TheoremVerdict& v) {
    if (p.concerned_on_triple(t) != p.size()) {
        v.detail = "unconcerned voter present";
        return false;
    }
    if (p.size() < 9) {
        v.detail = "fewer than 9 concerned voters";
        return false;
    }
    std::vector<CycleFinding> found = find_strict_cycles(p, t);
    for (const CycleFinding& y1 : found) {
        if (y1.orientation != CycleTag::U1) continue;
        for (const CycleFinding& y2 : found) {
            if (y2.orientation != CycleTag::U2) continue;
            bool disjoint = true;
            for (int m : y1.members) {
                if (std::find(y2.members.begin(), y2.members.end(), m) != y2.members.end()) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) {
                v.cycle_members.assign(y1.members.begin(), y1.members.end());
                v.cycle_members.insert(v.cycle_members.end(), y2.members.begin(),
                                       y2.members.end());
                return true;
            }
        }
    }
    v.detail = "no disjoint pair of antagonistic cycles";
    return false;
}

} // namespace

TheoremVerdict check_theorem1(const Profile& p, const Triple& t) {
    TheoremVerdict v;
    v.actual_transitive = triple_transitive(p, t);
    if (p.concerned_on_triple(t) != p.size()) {
        v.detail = "unconcerned voter present";
        return v;
    }
    if (p.size() < 5) {
        v.detail = "fewer than 5 concerned voters";
        return v;
    }
    std::vector<CycleFinding> cycles = extract_disjoint_cycles(p, t);
    if (cycles.size() != 1) {
        v.detail = cycles.empty() ? "no strict cycle present" : "more than one disjoint cycle";
        return v;
    }
    v.premises_hold = true;
    v.cycle_members.assign(cycles.front().members.begin(), cycles.front().members.end());
    Triple labeling(0, 1, 2, 3);
    if (condition_one_holds(p, cycles.front(), &labeling)) {
        v.condition_holds = true;
        v.labeling_used = labeling;
    }
    v.predicted_transitive = v.condition_holds;
    return v;
}

TheoremVerdict check_corollary1(const Profile& p, const Triple& t) {
    TheoremVerdict v;
    v.actual_transitive = triple_transitive(p, t);
    if (!antagonistic_cycle_premises(p, t, v)) return v;
    v.premises_hold = true;
    Profile remainder = p.without(v.cycle_members);
    v.condition_holds = check_extremal_restriction(remainder, t).holds;
    v.predicted_transitive = v.condition_holds;
    if (!v.condition_holds) v.detail = "remainder violates extremal restriction";
    return v;
}

TheoremVerdict check_corollary2(const Profile& p, const Triple& t) {
    TheoremVerdict v;
    v.actual_transitive = triple_transitive(p, t);
    if (!antagonistic_cycle_premises(p, t, v)) return v;
    v.premises_hold = true;
    Profile remainder = p.without(v.cycle_members);
    constexpr Condition kInadaList[5] = {
        Condition::Dichotomous, Condition::Echoic, Condition::Antagonistic,
        Condition::ValueRestriction, Condition::Taboo,
    };
    for (Condition c : kInadaList) {
        ConditionVerdict verdict = check_condition(c, remainder, t);
        if (verdict.holds && verdict.applicable) {
            v.condition_holds = true;
            v.detail = std::string("remainder satisfies ") + condition_name(c);
            break;
        }
    }
    v.predicted_transitive = v.condition_holds;
    if (!v.condition_holds) v.detail = "remainder satisfies no applicable Inada condition";
    return v;
}

MinAdditionsResult min_additions_to_destroy_cycle(int k_max) {
    if (k_max < 1) raise(ErrorCode::SearchBoundExceeded, "k_max must be at least 1");
    // Bare clockwise cycle margins relative to (x,y,z).
    std::array<int, 3> base = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        auto m = TripleType::all()[static_cast<size_t>(i)].margins();
        base[0] += m[0];
        base[1] += m[1];
        base[2] += m[2];
    }

    const auto& types = TripleType::all();
    std::vector<int> pick;
    // Multisets as non-decreasing index sequences, lexicographic.
    std::function<bool(int, std::array<int, 3>)> search = [&](int remaining,
                                                              std::array<int, 3> sum) {
        if (remaining == 0) {
            return triple_relation_transitive(sum[0], sum[1], sum[2]);
        }
        int start = pick.empty() ? 0 : pick.back();
        for (int idx = start; idx < 13; ++idx) {
            auto m = types[static_cast<size_t>(idx)].margins();
            pick.push_back(idx);
            if (search(remaining - 1, {sum[0] + m[0], sum[1] + m[1], sum[2] + m[2]})) {
                return true;
            }
            pick.pop_back();
        }
        return false;
    };

    for (int k = 1; k <= k_max; ++k) {
        pick.clear();
        if (search(k, base)) {
            MinAdditionsResult result;
            result.additions = k;
            for (int idx : pick) result.witness.push_back(types[static_cast<size_t>(idx)]);
            return result;
        }
    }
    raise(ErrorCode::SearchBoundExceeded,
          "no multiset of at most " + std::to_string(k_max) +
              " additional orderings restores transitivity");
}

} // namespace majority
