#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "majority/conditions.hpp"
#include "majority/profile.hpp"

namespace majority {

// Three voters whose restrictions to a triple form a complete strict
// cycle. `labeling` is the oriented triple (x,y,z) under which the members
// hold exactly {xPyPz, yPzPx, zPxPy}; for a U2 cycle that is the reference
// triple reversed.
struct CycleFinding {
    std::array<int, 3> members; // voter ids, ascending
    CycleTag orientation = CycleTag::U1;
    Triple labeling;
};

// Every 3-subset of voters forming a complete U1 or U2 cycle, in ascending
// member-id order, deduplicated up to member set.
std::vector<CycleFinding> find_strict_cycles(const Profile& p, const Triple& t);

// Greedy disjoint extraction, lowest member ids first. "A single cycle"
// means this returns exactly one finding.
std::vector<CycleFinding> extract_disjoint_cycles(const Profile& p, const Triple& t);

struct TheoremVerdict {
    bool premises_hold = false;
    bool condition_holds = false;
    std::optional<Triple> labeling_used;
    std::vector<int> cycle_members; // Y, or Y1 followed by Y2
    bool predicted_transitive = false;
    bool actual_transitive = false;
    std::string detail;
};

// Single-cycle sufficient condition: with n >= 5 concerned voters, no
// unconcerned voter, and exactly one cycle Y, every voter outside Y must
// satisfy x R y, y R z, x P z under some rotational labeling of the cycle.
TheoremVerdict check_theorem1(const Profile& p, const Triple& t);

// Two antagonistic cycles, n >= 9: the remainder S \ (Y1 u Y2) must
// satisfy extremal restriction.
TheoremVerdict check_corollary1(const Profile& p, const Triple& t);

// Two antagonistic cycles, n >= 9: the remainder must satisfy some
// applicable condition from the Inada list (dichotomous .. taboo).
TheoremVerdict check_corollary2(const Profile& p, const Triple& t);

// The triple types satisfying x R y, y R z, x P z relative to an oriented
// triple: exactly {xPyPz, xPyIz, xIyPz}.
std::vector<TripleType> admissible_remainder_types();
// The same set as orderings over the triple (position 0 = x, 1 = y, 2 = z).
std::vector<WeakOrdering> admissible_remainder_orderings();

struct MinAdditionsResult {
    int additions = 0;
    std::vector<TripleType> witness;
};

// Smallest k <= k_max such that appending some multiset of k orderings to
// the bare clockwise cycle makes the triple relation transitive; exhaustive
// over multisets of the 13 types. Throws SearchBoundExceeded when no k
// within the bound works.
MinAdditionsResult min_additions_to_destroy_cycle(int k_max);

} // namespace majority
