#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majority/margins.hpp"
#include "majority/profile.hpp"

namespace majority {

// A profile is an indifferent set when its majority aggregate is complete
// indifference (all margins zero), and an ordinal set when the aggregate is
// a transitive ordering. Complete indifference is itself transitive, so
// indifferent implies ordinal; both flags are reported.
struct SetClassification {
    bool is_indifferent = false;
    bool is_ordinal = false;
};

SetClassification classify_set(const Profile& p);

// All multisets of at most `max_size` orderings from `universe` whose
// margins cancel those of `d1` exactly, materialized with fresh voter ids.
// Ordered by size, then lexicographically by universe index.
std::vector<Profile> opposite_sets(const Profile& d1, int max_size,
                                   const std::vector<WeakOrdering>& universe);

struct Decomposition {
    std::vector<int> balanced_part; // T: zero-margin voter ids, ascending
    std::vector<int> remainder;     // ascending
    bool remainder_ordinal = false;
};

// Maximal zero-margin voter subset whose remainder aggregates to a
// transitive relation on the triple; ties broken by lexicographically
// smallest id set. Subset enumeration, so the profile size is capped by
// `enumeration_bound` (BoundExceeded beyond it).
std::optional<Decomposition> balanced_decomposition(const Profile& p, const Triple& t,
                                                    int enumeration_bound = 14);

struct AxiomCheck {
    bool pass = true;
    uint64_t cases_checked = 0;
    std::string counterexample;
};

// Exhaustive desk-scale verification over one triple, all multisets of at
// most n_bound orderings from the 13 types:
//   axiom 1: the empty profile aggregates to complete indifference;
//   axiom 2: adding an indifferent set to an ordinal set leaves the
//            aggregate pairwise unchanged;
//   axiom 3: removing an indifferent sub-multiset from an ordinal set
//            leaves the aggregate pairwise unchanged;
//   axiom 4: any two opposite sets of the same set aggregate identically.
// axiom2_universal records the same identity as axiom 2 with the ordinal
// requirement dropped; the margin argument makes it hold for every base
// set, and that wider scope is checked and reported separately.
struct AxiomReport {
    AxiomCheck axiom1;
    AxiomCheck axiom2;
    AxiomCheck axiom3;
    AxiomCheck axiom4;
    AxiomCheck axiom2_universal;

    bool all_pass() const {
        return axiom1.pass && axiom2.pass && axiom3.pass && axiom4.pass &&
               axiom2_universal.pass;
    }
};

// `n_bound` is the maximum number of voters per enumerated set; at most 4
// is practical (BoundExceeded beyond 6).
AxiomReport verify_axioms(int n_bound);

} // namespace majority
