#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "majority/conditions.hpp"
#include "majority/profile.hpp"

namespace majority {

inline constexpr uint64_t kDefaultBudget = 50'000'000;

// All weak orderings over an n-element set (ordered set partitions):
// 13 for n = 3, 75 for n = 4, 541 for n = 5.
std::vector<WeakOrdering> enumerate_orderings(int n_alternatives);

// The 13 triple orderings in taxonomy order, as orderings over a
// three-alternative set.
std::vector<WeakOrdering> canonical_triple_orderings();

// Ordered assignments of one ordering from `types` to each of n voters
// (ids 1..n). Throws BudgetExceeded when |types|^n exceeds the budget.
class ProfileStream {
public:
    ProfileStream(int n_voters, std::vector<WeakOrdering> types, AlternativeSet alts,
                  uint64_t budget = kDefaultBudget);

    uint64_t total() const { return total_; }
    std::optional<Profile> next();

private:
    int n_voters_;
    std::vector<WeakOrdering> types_;
    AlternativeSet alts_;
    std::vector<int> odometer_;
    uint64_t total_ = 0;
    uint64_t produced_ = 0;
};

struct CensusReport {
    int n_voters = 0;
    uint64_t total_profiles = 0;   // ordered assignments
    uint64_t transitive_count = 0; // ordered assignments with transitive aggregate
    struct ConditionCounts {
        uint64_t holds = 0; // condition holds and is applicable
        uint64_t holds_and_transitive = 0;
    };
    std::array<ConditionCounts, 8> per_condition;
};

// Exhaustive census over all |types|^n ordered assignments. Internally
// enumerates type multisets and weights by multinomial coefficients; every
// verdict involved is anonymous, so the two views agree (cross-checked by
// the ordered-mode tests). Caps n at 20 to keep the weights in uint64.
CensusReport transitivity_census(int n_voters, const std::vector<TripleType>& types,
                                 uint64_t budget = kDefaultBudget,
                                 bool multiset_mode = true);

struct SufficiencyResult {
    std::string condition;
    int n_max = 0;
    uint64_t multisets_checked = 0;
    uint64_t holding = 0; // condition held (and applicable)
    std::optional<Profile> counterexample;

    bool pass() const { return !counterexample.has_value(); }
};

// For every profile of at most n_max voters over the 13 types where the
// condition holds (and, for the parity-restricted conditions, applies),
// the majority aggregate must be transitive. Counterexamples are
// re-validated before being reported.
SufficiencyResult verify_sufficiency(Condition condition, int n_max,
                                     uint64_t budget = kDefaultBudget);

// Same sweep for an arbitrary predicate; used to exercise the
// counterexample path with deliberately wrong conditions.
SufficiencyResult verify_sufficiency_predicate(
    const std::function<bool(const Profile&, const Triple&)>& condition_holds,
    const std::string& name, int n_max, uint64_t budget = kDefaultBudget);

struct NecessityResult {
    bool er_holds = false; // extremal restriction of the type set as a pattern
    // Multiplicity per type (parallel to the input set) of the first
    // intransitive assignment, searched by total count then
    // lexicographically. Present only when ER is violated and a witness
    // exists within the bound.
    std::optional<std::vector<int>> witness_counts;
    uint64_t assignments_checked = 0;
    bool pass = false; // ER holds: all assignments transitive;
                       // ER violated: an intransitive witness was found
};

// Necessity-and-sufficiency probe for a set of triple orderings: if the
// set violates extremal restriction, some count assignment within the
// bound must break transitivity; if it satisfies it, none may.
NecessityResult verify_theorem_xi_necessity(const std::vector<TripleType>& type_set,
                                            int count_bound,
                                            uint64_t budget = kDefaultBudget);

} // namespace majority
