#include "majority/reduction.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "majority/error.hpp"
#include "majority/margins.hpp"
#include "majority/ordering.hpp"

namespace majority {

const char* rewrite_rule_name(RewriteRule rule) {
    switch (rule) {
    case RewriteRule::StrictAntagonisticPair: return "R1_strict_antagonistic_pair";
    case RewriteRule::WeakAntagonisticPair: return "R2a_weak_antagonistic_pair";
    case RewriteRule::CompleteVCycle: return "R2b_complete_V_cycle";
    case RewriteRule::SameVMerge: return "R3_same_V_pair_merge";
    case RewriteRule::CrossUMerge: return "R4_cross_U_pair_merge";
    }
    return "?";
}

std::string ReducedStructure::form_label() const {
    return "B_{" + std::to_string(k) + "," + std::to_string(l) + "}";
}

namespace {

struct TypedVoter {
    int id;
    TripleType type;
};

std::vector<TypedVoter> typed_voters(const Profile& p, const Triple& t) {
    std::vector<TypedVoter> out;
    out.reserve(p.entries().size());
    for (const auto& e : p.entries()) {
        out.push_back({e.voter_id, TripleType::of(e.ordering, t)});
    }
    std::sort(out.begin(), out.end(), [](const TypedVoter& a, const TypedVoter& b) {
        return a.id < b.id;
    });
    return out;
}

std::array<int, 3> type_margin_sum(const std::vector<TripleType>& types) {
    std::array<int, 3> m = {0, 0, 0};
    for (const TripleType& t : types) {
        auto tm = t.margins();
        m[0] += tm[0];
        m[1] += tm[1];
        m[2] += tm[2];
    }
    return m;
}

// The one-tie type whose margins are exactly half of `sum`; exists for
// every non-antagonistic cross-U strict pair.
TripleType half_margin_one_tie(const std::array<int, 3>& sum) {
    for (const TripleType& t : TripleType::all()) {
        if (!t.one_tie()) continue;
        auto tm = t.margins();
        if (tm[0] * 2 == sum[0] && tm[1] * 2 == sum[1] && tm[2] * 2 == sum[2]) return t;
    }
    throw std::logic_error("no one-tie ordering matches half the pair margins");
}

} // namespace

std::vector<Rewrite> find_redexes(const Profile& p, const Triple& t) {
    std::vector<TypedVoter> voters = typed_voters(p, t);
    const int n = static_cast<int>(voters.size());
    std::vector<Rewrite> out;

    auto add = [&](RewriteRule rule, std::vector<int> ids, std::vector<TripleType> types,
                   std::vector<TripleType> produced) {
        out.push_back(Rewrite{rule, std::move(ids), std::move(types), std::move(produced)});
    };

    // R1: strict antagonistic pairs.
    for (int i = 0; i < n; ++i) {
        if (!voters[i].type.strict()) continue;
        for (int j = i + 1; j < n; ++j) {
            if (voters[j].type == voters[i].type.reversed()) {
                add(RewriteRule::StrictAntagonisticPair, {voters[i].id, voters[j].id},
                    {voters[i].type, voters[j].type}, {});
            }
        }
    }
    // R2a: weak antagonistic pairs.
    for (int i = 0; i < n; ++i) {
        if (!voters[i].type.one_tie()) continue;
        for (int j = i + 1; j < n; ++j) {
            if (voters[j].type == voters[i].type.reversed()) {
                add(RewriteRule::WeakAntagonisticPair, {voters[i].id, voters[j].id},
                    {voters[i].type, voters[j].type}, {});
            }
        }
    }
    // R2b: three voters covering one complete V-cycle.
    for (int i = 0; i < n; ++i) {
        OrderingClass ci = classify_type(voters[i].type);
        if (ci.kind != OrderingKind::OneTie) continue;
        for (int j = i + 1; j < n; ++j) {
            OrderingClass cj = classify_type(voters[j].type);
            if (cj.kind != OrderingKind::OneTie || cj.cycle != ci.cycle ||
                cj.position == ci.position) {
                continue;
            }
            for (int k = j + 1; k < n; ++k) {
                OrderingClass ck = classify_type(voters[k].type);
                if (ck.kind == OrderingKind::OneTie && ck.cycle == ci.cycle &&
                    ck.position != ci.position && ck.position != cj.position) {
                    add(RewriteRule::CompleteVCycle,
                        {voters[i].id, voters[j].id, voters[k].id},
                        {voters[i].type, voters[j].type, voters[k].type}, {});
                }
            }
        }
    }
    // R3: two distinct types of the same V-cycle.
    for (int i = 0; i < n; ++i) {
        OrderingClass ci = classify_type(voters[i].type);
        if (ci.kind != OrderingKind::OneTie) continue;
        for (int j = i + 1; j < n; ++j) {
            OrderingClass cj = classify_type(voters[j].type);
            if (cj.kind != OrderingKind::OneTie || cj.cycle != ci.cycle ||
                cj.position == ci.position) {
                continue;
            }
            // The replacement is the other V-cycle's type at the remaining
            // position: antagonism is position-wise, so it opposes neither.
            int pos = 3 - ci.position - cj.position;
            CycleTag other = ci.cycle == CycleTag::V1 ? CycleTag::V2 : CycleTag::V1;
            int base = other == CycleTag::V1 ? 6 : 9;
            TripleType produced = TripleType::all()[static_cast<size_t>(base + pos)];
            add(RewriteRule::SameVMerge, {voters[i].id, voters[j].id},
                {voters[i].type, voters[j].type}, {produced});
        }
    }
    // R4: non-antagonistic strict pairs from different U-cycles.
    for (int i = 0; i < n; ++i) {
        OrderingClass ci = classify_type(voters[i].type);
        if (ci.kind != OrderingKind::Strict) continue;
        for (int j = i + 1; j < n; ++j) {
            OrderingClass cj = classify_type(voters[j].type);
            if (cj.kind != OrderingKind::Strict || cj.cycle == ci.cycle) continue;
            if (voters[j].type == voters[i].type.reversed()) continue; // that's R1
            TripleType w = half_margin_one_tie(
                type_margin_sum({voters[i].type, voters[j].type}));
            add(RewriteRule::CrossUMerge, {voters[i].id, voters[j].id},
                {voters[i].type, voters[j].type}, {w, w});
        }
    }
    return out;
}

Profile apply_rewrite(const Profile& p, const Rewrite& r) {
    if (p.alternatives().size() != 3) {
        raise(ErrorCode::NotATripleOrdering, "rewrites apply to triple profiles");
    }
    const Triple t(0, 1, 2, 3);
    for (size_t i = 0; i < r.consumed.size(); ++i) {
        int id = r.consumed[i];
        if (!p.has_voter(id)) {
            raise(ErrorCode::StaleRewrite, "consumed voter " + std::to_string(id) + " absent");
        }
        if (!(TripleType::of(p.ordering_of(id), t) == r.consumed_types[i])) {
            raise(ErrorCode::StaleRewrite,
                  "voter " + std::to_string(id) + " no longer holds the consumed ordering");
        }
    }
    if (!(type_margin_sum(r.consumed_types) == type_margin_sum(r.produced))) {
        throw std::logic_error("rewrite does not preserve margins");
    }

    Profile out(p.alternatives());
    int next_synthetic = 0;
    for (const auto& e : p.entries()) {
        next_synthetic = std::min(next_synthetic, e.voter_id);
        if (std::find(r.consumed.begin(), r.consumed.end(), e.voter_id) == r.consumed.end()) {
            out.add(e.voter_id, e.ordering);
        }
    }
    for (const TripleType& type : r.produced) {
        out.add(--next_synthetic, type.to_ordering());
    }
    return out;
}

namespace {

ReducedStructure reduce_with_chooser(
    const Profile& p, const Triple& t,
    const std::function<size_t(const std::vector<Rewrite>&)>& choose) {
    ReducedStructure rs;
    rs.triple = t;
    Profile work = p.restricted(t);
    const Triple local(0, 1, 2, 3);
    while (true) {
        std::vector<Rewrite> redexes = find_redexes(work, local);
        if (redexes.empty()) break;
        const Rewrite& pick = redexes[choose(redexes)];
        work = apply_rewrite(work, pick);
        rs.trace.push_back(pick);
    }
    // Unconcerned entries carry no pairwise support; the residual keeps
    // only concerned voters.
    Profile residual(work.alternatives());
    for (const auto& e : work.entries()) {
        if (e.ordering.concerned()) residual.add(e.voter_id, e.ordering);
    }
    rs.residual = std::move(residual);
    auto [k, l] = classify_standard_form(rs);
    rs.k = k;
    rs.l = l;
    return rs;
}

} // namespace

ReducedStructure reduce(const Profile& p, const Triple& t) {
    return reduce_with_chooser(p, t, [](const std::vector<Rewrite>&) { return size_t{0}; });
}

ReducedStructure reduce_randomized(const Profile& p, const Triple& t, uint64_t seed) {
    std::mt19937_64 rng(seed);
    // The four procedures run in sequence; only the scan order within the
    // active rule is free. Ignoring the rule order is not class-safe:
    // {xPyPz, yPzPx, zPyPx} ends in B_{1,0} via R1 but in B_{1,1} when R4
    // consumes the reversed pair's partner first.
    return reduce_with_chooser(p, t, [&rng](const std::vector<Rewrite>& redexes) {
        RewriteRule active = redexes.front().rule;
        size_t count = 0;
        while (count < redexes.size() && redexes[count].rule == active) ++count;
        return std::uniform_int_distribution<size_t>(0, count - 1)(rng);
    });
}

std::pair<int, int> classify_standard_form(const ReducedStructure& rs) {
    const Triple local(0, 1, 2, 3);
    if (!find_redexes(rs.residual, local).empty()) {
        raise(ErrorCode::NotSteady, "structure still admits a rewrite");
    }
    std::vector<TripleType> strict_types;
    std::vector<TripleType> weak_types;
    for (const auto& e : rs.residual.entries()) {
        TripleType type = TripleType::of(e.ordering, local);
        if (type.unconcerned()) continue;
        auto& bucket = type.strict() ? strict_types : weak_types;
        if (std::find(bucket.begin(), bucket.end(), type) == bucket.end()) {
            bucket.push_back(type);
        }
    }
    // Steady-state shape guarantees: strict types share one U-cycle, weak
    // types come from different V-cycles and are not antagonistic.
    for (const TripleType& a : strict_types) {
        if (classify_type(a).cycle != classify_type(strict_types.front()).cycle) {
            throw std::logic_error("steady strict types from different U-cycles");
        }
    }
    if (weak_types.size() > 2) throw std::logic_error("more than two steady weak types");
    return {static_cast<int>(strict_types.size()), static_cast<int>(weak_types.size())};
}

} // namespace majority
