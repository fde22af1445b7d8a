#pragma once

#include <string>
#include <utility>
#include <vector>

#include "majority/margins.hpp"
#include "majority/profile.hpp"

namespace testutil {

inline majority::AlternativeSet xyz() {
    return majority::AlternativeSet({"x", "y", "z"});
}

inline majority::Triple xyz_triple() { return majority::Triple(0, 1, 2, 3); }

inline majority::Profile make_profile(const majority::AlternativeSet& alts,
                                      const std::vector<std::pair<int, std::string>>& rows) {
    majority::Profile p(alts);
    for (const auto& [id, text] : rows) {
        p.add(id, majority::WeakOrdering::parse(text, alts));
    }
    return p;
}

// The five-voter reference profile: two one-tie voters and a complete
// clockwise cycle.
inline majority::Profile example1() {
    return make_profile(xyz(), {
                                   {1, "x=y>z"},
                                   {2, "x>y=z"},
                                   {3, "x>y>z"},
                                   {4, "y>z>x"},
                                   {5, "z>x>y"},
                               });
}

inline majority::Profile u1_cycle(int first_id = 1) {
    return make_profile(xyz(), {
                                   {first_id, "x>y>z"},
                                   {first_id + 1, "y>z>x"},
                                   {first_id + 2, "z>x>y"},
                               });
}

inline majority::Profile u2_cycle(int first_id = 1) {
    return make_profile(xyz(), {
                                   {first_id, "z>y>x"},
                                   {first_id + 1, "x>z>y"},
                                   {first_id + 2, "y>x>z"},
                               });
}

// Two antagonistic cycles over voters 1..6.
inline majority::Profile double_cycle() {
    majority::Profile p = u1_cycle(1);
    majority::Profile q = u2_cycle(4);
    return majority::concat(p, q);
}

inline bool triple_transitive(const majority::Profile& p, const majority::Triple& t) {
    auto m = majority::triple_margins(p, t);
    return majority::triple_relation_transitive(m[0], m[1], m[2]);
}

} // namespace testutil
