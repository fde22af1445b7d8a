#include "doctest.h"

#include <random>
#include <set>

#include "majority/margins.hpp"
#include "majority/reduction.hpp"

#include "helpers.hpp"

using namespace majority;
using testutil::double_cycle;
using testutil::example1;
using testutil::make_profile;
using testutil::u1_cycle;
using testutil::xyz;
using testutil::xyz_triple;

TEST_SUITE_BEGIN("reduction");

namespace {

const Triple t = xyz_triple();

std::array<int, 3> residual_margins(const ReducedStructure& rs) {
    return triple_margins(rs.residual, Triple(0, 1, 2, 3));
}

} // namespace

TEST_CASE("strict antagonistic pair cancels") {
    Profile p = make_profile(xyz(), {{1, "x>y>z"}, {2, "z>y>x"}});
    std::vector<Rewrite> redexes = find_redexes(p, t);
    REQUIRE(redexes.size() == 1);
    CHECK(redexes[0].rule == RewriteRule::StrictAntagonisticPair);
    CHECK(redexes[0].consumed == std::vector<int>{1, 2});
    CHECK(redexes[0].produced.empty());

    Profile after = apply_rewrite(p, redexes[0]);
    CHECK(after.empty());
}

TEST_CASE("same-V merge produces the third type of the other cycle") {
    Profile p = make_profile(xyz(), {{1, "x>y=z"}, {2, "y>z=x"}});
    std::vector<Rewrite> redexes = find_redexes(p, t);
    REQUIRE(redexes.size() == 1);
    CHECK(redexes[0].rule == RewriteRule::SameVMerge);
    REQUIRE(redexes[0].produced.size() == 1);
    CHECK(redexes[0].produced[0].format(xyz(), t) == "x=y>z");

    Profile after = apply_rewrite(p, redexes[0]);
    REQUIRE(after.size() == 1);
    CHECK(after.entries()[0].voter_id < 0); // synthetic id
    CHECK(after.entries()[0].ordering.format(xyz()) == "x=y>z");
    CHECK(triple_margins(after, t) == triple_margins(p, t));
}

TEST_CASE("cross-U merge produces the half-margin one-tie twice") {
    Profile p = make_profile(xyz(), {{1, "x>y>z"}, {2, "x>z>y"}});
    std::vector<Rewrite> redexes = find_redexes(p, t);
    REQUIRE(redexes.size() == 1);
    CHECK(redexes[0].rule == RewriteRule::CrossUMerge);
    REQUIRE(redexes[0].produced.size() == 2);
    CHECK(redexes[0].produced[0].format(xyz(), t) == "x>y=z");
    CHECK(redexes[0].produced[1].format(xyz(), t) == "x>y=z");

    Profile after = apply_rewrite(p, redexes[0]);
    CHECK(after.size() == 2);
    CHECK(triple_margins(after, t) == triple_margins(p, t));
}

TEST_CASE("complete V-cycle cancels in one step") {
    Profile p = make_profile(xyz(), {{1, "x>y=z"}, {2, "y>z=x"}, {3, "z>x=y"}});
    std::vector<Rewrite> redexes = find_redexes(p, t);
    bool has_v_cycle = false;
    for (const Rewrite& r : redexes) {
        if (r.rule == RewriteRule::CompleteVCycle) {
            has_v_cycle = true;
            CHECK(r.consumed == std::vector<int>{1, 2, 3});
            CHECK(r.produced.empty());
            CHECK(apply_rewrite(p, r).empty());
        }
    }
    CHECK(has_v_cycle);
    // R2b outranks the three R3 pair merges when reducing.
    ReducedStructure rs = reduce(p, t);
    REQUIRE(rs.trace.size() == 1);
    CHECK(rs.trace[0].rule == RewriteRule::CompleteVCycle);
    CHECK(rs.residual.empty());
}

TEST_CASE("stale rewrites are rejected") {
    Profile p = make_profile(xyz(), {{1, "x>y>z"}, {2, "z>y>x"}});
    std::vector<Rewrite> redexes = find_redexes(p, t);
    REQUIRE(!redexes.empty());
    Profile after = apply_rewrite(p, redexes[0]);
    CHECK_THROWS_AS(apply_rewrite(after, redexes[0]), Error);

    // Same ids, different ordering.
    Profile q = make_profile(xyz(), {{1, "x>y>z"}, {2, "x=y>z"}});
    CHECK_THROWS_AS(apply_rewrite(q, redexes[0]), Error);
}

TEST_CASE("the reference profile is already steady and classifies as B_{3,2}") {
    ReducedStructure rs = reduce(example1(), t);
    CHECK(rs.trace.empty());
    CHECK(rs.residual.size() == 5);
    CHECK(rs.k == 3);
    CHECK(rs.l == 2);
    CHECK(rs.form_label() == "B_{3,2}");
}

TEST_CASE("reference standard forms") {
    ReducedStructure both = reduce(double_cycle(), t);
    CHECK(both.residual.empty());
    CHECK(both.form_label() == "B_{0,0}");

    ReducedStructure single = reduce(u1_cycle(), t);
    CHECK(single.trace.empty());
    CHECK(single.form_label() == "B_{3,0}");

    ReducedStructure hand = reduce(
        make_profile(xyz(), {{1, "x>y>z"}, {2, "x>z>y"}, {3, "y=z>x"}, {4, "y=z>x"}}), t);
    CHECK(hand.residual.empty());
    CHECK(hand.form_label() == "B_{0,0}");
    // R4 first, then the produced pair cancels against the two y=z>x voters.
    REQUIRE(hand.trace.size() == 3);
    CHECK(hand.trace[0].rule == RewriteRule::CrossUMerge);
    CHECK(hand.trace[1].rule == RewriteRule::WeakAntagonisticPair);
    CHECK(hand.trace[2].rule == RewriteRule::WeakAntagonisticPair);
}

TEST_CASE("unconcerned voters drop out of the residual") {
    Profile p = make_profile(xyz(), {{1, "x=y=z"}, {2, "x>y>z"}, {3, "x=y=z"}});
    ReducedStructure rs = reduce(p, t);
    CHECK(rs.residual.size() == 1);
    CHECK(rs.residual.entries()[0].voter_id == 2);
    CHECK(rs.form_label() == "B_{1,0}");
}

TEST_CASE("classify rejects non-steady structures") {
    ReducedStructure fake;
    fake.residual = make_profile(xyz(), {{1, "x>y>z"}, {2, "z>y>x"}});
    CHECK_THROWS_AS(classify_standard_form(fake), Error);
}

TEST_CASE("reduction over all three-voter triple profiles") {
    const auto& types = TripleType::all();
    std::mt19937_64 seeds(99);
    for (int a = 0; a < 13; ++a) {
        for (int b = 0; b < 13; ++b) {
            for (int c = 0; c < 13; ++c) {
                Profile p(xyz());
                p.add(1, types[size_t(a)].to_ordering());
                p.add(2, types[size_t(b)].to_ordering());
                p.add(3, types[size_t(c)].to_ordering());
                ReducedStructure rs = reduce(p, t);
                // Margin preservation and the steady-state shape.
                CHECK(residual_margins(rs) == triple_margins(p, t));
                CHECK(rs.trace.size() <= 6); // 2*strict + one-tie <= 6
                CHECK(find_redexes(rs.residual, t).empty());
                CHECK(rs.k >= 0);
                CHECK(rs.k <= 3);
                CHECK(rs.l >= 0);
                CHECK(rs.l <= 2);

                // A couple of random rewrite orders agree on class+margins.
                for (int round = 0; round < 2; ++round) {
                    ReducedStructure rnd = reduce_randomized(p, t, seeds());
                    CHECK(rnd.k == rs.k);
                    CHECK(rnd.l == rs.l);
                    CHECK(residual_margins(rnd) == residual_margins(rs));
                }
            }
        }
    }
}

TEST_CASE("rule priority is part of the system") {
    // Applying R4 before R1 exhaustion reaches a different steady class
    // with the same margins; the iterative procedure order prevents it.
    Profile p = make_profile(xyz(), {{1, "x>y>z"}, {2, "y>z>x"}, {3, "z>y>x"}});
    ReducedStructure rs = reduce(p, t);
    CHECK(rs.form_label() == "B_{1,0}");
    REQUIRE(!rs.trace.empty());
    CHECK(rs.trace[0].rule == RewriteRule::StrictAntagonisticPair);

    std::vector<Rewrite> redexes = find_redexes(p, t);
    const Rewrite* r4 = nullptr;
    for (const Rewrite& r : redexes) {
        if (r.rule == RewriteRule::CrossUMerge) r4 = &r;
    }
    REQUIRE(r4 != nullptr);
    Profile after = apply_rewrite(p, *r4);
    // Out-of-order application: margins still agree, but the strict
    // antagonistic pair can no longer cancel and a weak pair survives.
    CHECK(triple_margins(after, t) == triple_margins(p, t));
    ReducedStructure other = reduce(after, t);
    CHECK(residual_margins(other) == triple_margins(p, t));
    CHECK(other.form_label() == "B_{1,1}");
}

TEST_CASE("steady residuals have the B_{k,l} shape") {
    // No antagonistic pair, no complete V-cycle, at most one type per
    // V-cycle, strict types from one U-cycle.
    const auto& types = TripleType::all();
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> type_dist(0, 12);
    std::uniform_int_distribution<int> n_dist(0, 6);
    for (int round = 0; round < 300; ++round) {
        Profile p(xyz());
        int n = n_dist(rng);
        for (int v = 1; v <= n; ++v) p.add(v, types[size_t(type_dist(rng))].to_ordering());
        ReducedStructure rs = reduce(p, t);
        std::set<int> strict_cycles, weak_cycles;
        std::set<int> strict_seen, weak_seen;
        for (const auto& e : rs.residual.entries()) {
            TripleType type = TripleType::of(e.ordering, t);
            CHECK(!type.unconcerned());
            OrderingClass cls = classify_type(type);
            if (type.strict()) {
                strict_cycles.insert(static_cast<int>(cls.cycle));
                strict_seen.insert(type.canonical_index());
            } else {
                weak_cycles.insert(static_cast<int>(cls.cycle));
                weak_seen.insert(type.canonical_index());
            }
            // No reversed partner anywhere in the residual.
            for (const auto& other : rs.residual.entries()) {
                CHECK(!(TripleType::of(other.ordering, t) == type.reversed()));
            }
        }
        CHECK(strict_cycles.size() <= 1);
        CHECK(static_cast<int>(strict_seen.size()) == rs.k);
        CHECK(static_cast<int>(weak_seen.size()) == rs.l);
        CHECK(weak_seen.size() == weak_cycles.size()); // one type per V-cycle
    }
}

TEST_SUITE_END();
