#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "majority/profile.hpp"

namespace majority {

// The profile rewrite rules, applied in this priority order:
//   R1  strict antagonistic pair        -> nothing
//   R2a weak antagonistic pair          -> nothing
//   R2b complete V-cycle (three voters) -> nothing
//   R3  two distinct types of one V-cycle -> the non-antagonistic third
//       type of the other V-cycle, once
//   R4  two non-antagonistic strict types from different U-cycles -> the
//       one-tie ordering with half their joint margins, twice
// Every rule preserves the triple's margin matrix exactly.
enum class RewriteRule {
    StrictAntagonisticPair,
    WeakAntagonisticPair,
    CompleteVCycle,
    SameVMerge,
    CrossUMerge,
};

const char* rewrite_rule_name(RewriteRule rule);

struct Rewrite {
    RewriteRule rule = RewriteRule::StrictAntagonisticPair;
    std::vector<int> consumed;             // voter ids, ascending
    std::vector<TripleType> consumed_types; // parallel to `consumed`
    std::vector<TripleType> produced;      // possibly empty
};

// Steady state of the rewrite system on a triple profile, with its
// standard-form label B_{k,l}: k distinct strict types (all from one
// U-cycle), l distinct one-tie types (from different V-cycles).
struct ReducedStructure {
    Profile residual; // over the triple's three alternatives; no unconcerned
    Triple triple;
    int k = 0;
    int l = 0;
    std::vector<Rewrite> trace;

    std::string form_label() const; // "B_{k,l}"
};

// Every applicable rewrite instance, grouped by rule priority and ordered
// by ascending consumed-id sets within each rule.
std::vector<Rewrite> find_redexes(const Profile& p, const Triple& t);

// Removes the consumed entries and appends the produced orderings under
// fresh synthetic (negative) voter ids. Throws StaleRewrite when a consumed
// voter is absent or its ordering changed. Margins are preserved.
Profile apply_rewrite(const Profile& p, const Rewrite& r);

// Iterates rewrites under the fixed priority until none applies, then drops
// unconcerned entries. The step measure 2*(#strict)+(#one-tie) strictly
// decreases, so this halts within 2|p| steps.
ReducedStructure reduce(const Profile& p, const Triple& t);

// Same iteration with a seeded random choice among the redexes of the
// active (highest-priority) rule at every step. Margins never depend on
// any ordering; the B_{k,l} class additionally needs the rule priority
// respected, which is why the randomization stays within one rule.
ReducedStructure reduce_randomized(const Profile& p, const Triple& t, uint64_t seed);

// (k, l) of a steady structure. Throws NotSteady if a rewrite still applies.
std::pair<int, int> classify_standard_form(const ReducedStructure& rs);

} // namespace majority
