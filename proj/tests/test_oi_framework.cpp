#include "doctest.h"

#include <random>

#include "majority/oi_framework.hpp"
#include "majority/oracle.hpp"

#include "helpers.hpp"

using namespace majority;
using testutil::double_cycle;
using testutil::example1;
using testutil::make_profile;
using testutil::u1_cycle;
using testutil::xyz;
using testutil::xyz_triple;

TEST_SUITE_BEGIN("oi_framework");

namespace {

const Triple t = xyz_triple();

} // namespace

TEST_CASE("set classification") {
    SetClassification antagonistic =
        classify_set(make_profile(xyz(), {{1, "x>y=z"}, {2, "y=z>x"}}));
    CHECK(antagonistic.is_indifferent);
    CHECK(antagonistic.is_ordinal);

    SetClassification ref = classify_set(example1());
    CHECK(!ref.is_indifferent);
    CHECK(ref.is_ordinal);

    SetClassification cyc = classify_set(u1_cycle());
    CHECK(!cyc.is_indifferent);
    CHECK(!cyc.is_ordinal);

    SetClassification empty = classify_set(Profile(xyz()));
    CHECK(empty.is_indifferent);
    CHECK(empty.is_ordinal);
}

TEST_CASE("opposite sets of a single one-tie ordering") {
    Profile d1 = make_profile(xyz(), {{1, "x>y=z"}});
    std::vector<Profile> opposites = opposite_sets(d1, 2, canonical_triple_orderings());

    bool has_reverse = false;
    bool has_split_pair = false;
    for (const Profile& d2 : opposites) {
        // Defining property: the union aggregates to complete indifference.
        CHECK(margins(concat(d1, d2)).all_zero());
        // Fresh ids: disjoint from d1's.
        for (const auto& e : d2.entries()) CHECK(e.voter_id > 1);
        if (d2.size() == 1 && d2.entries()[0].ordering.format(xyz()) == "y=z>x") {
            has_reverse = true;
        }
        if (d2.size() == 2) {
            std::string a = d2.entries()[0].ordering.format(xyz());
            std::string b = d2.entries()[1].ordering.format(xyz());
            if ((a == "y>x=z" && b == "z>x=y") || (a == "z>x=y" && b == "y>x=z")) {
                has_split_pair = true;
            }
        }
    }
    CHECK(has_reverse);
    CHECK(has_split_pair);
}

TEST_CASE("opposite sets of the empty set are the indifferent sets") {
    Profile none(xyz());
    std::vector<Profile> opposites = opposite_sets(none, 2, canonical_triple_orderings());
    REQUIRE(!opposites.empty());
    CHECK(opposites.front().empty());
    for (const Profile& d2 : opposites) {
        CHECK(margins(d2).all_zero());
    }
    // 1 empty + 1 unconcerned single + 6 antagonistic pairs + unconcerned pair.
    CHECK(opposites.size() == 9);
}

TEST_CASE("balanced decomposition of the balanced-cycle profile") {
    auto d = balanced_decomposition(double_cycle(), t);
    REQUIRE(d.has_value());
    CHECK(d->balanced_part == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(d->remainder.empty());
    CHECK(d->remainder_ordinal);
}

TEST_CASE("balanced decomposition of a corollary-style profile") {
    Profile p = double_cycle();
    for (int v = 7; v <= 9; ++v) p.add(v, WeakOrdering::parse("x>y>z", xyz()));
    auto d = balanced_decomposition(p, t);
    REQUIRE(d.has_value());
    CHECK(d->balanced_part == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(d->remainder == std::vector<int>{7, 8, 9});
    CHECK(d->remainder_ordinal);
}

TEST_CASE("the bare cycle admits no balanced decomposition") {
    CHECK(!balanced_decomposition(u1_cycle(), t).has_value());
}

TEST_CASE("decomposition bound") {
    Profile big(xyz());
    for (int v = 1; v <= 15; ++v) big.add(v, WeakOrdering::parse("x>y>z", xyz()));
    CHECK_THROWS_AS(balanced_decomposition(big, t, 14), Error);
    CHECK(balanced_decomposition(big, t, 15).has_value());
}

TEST_CASE("margin additivity over concatenation") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> type_dist(0, 12);
    std::uniform_int_distribution<int> n_dist(0, 6);
    const auto& types = TripleType::all();
    for (int round = 0; round < 100; ++round) {
        Profile p(xyz()), q(xyz());
        int np = n_dist(rng), nq = n_dist(rng);
        for (int v = 1; v <= np; ++v) p.add(v, types[size_t(type_dist(rng))].to_ordering());
        for (int v = 1; v <= nq; ++v) q.add(v, types[size_t(type_dist(rng))].to_ordering());
        MarginMatrix sum = margins(p);
        sum += margins(q);
        CHECK(margins(concat(p, q)) == sum);
    }
}

TEST_CASE("axioms hold exhaustively at the desk scale") {
    AxiomReport r = verify_axioms(3);
    CHECK(r.axiom1.pass);
    CHECK(r.axiom2.pass);
    CHECK(r.axiom3.pass);
    CHECK(r.axiom4.pass);
    CHECK(r.axiom2_universal.pass);
    CHECK(r.axiom2.cases_checked > 0);
    CHECK(r.axiom3.cases_checked > 0);
    CHECK(r.axiom4.cases_checked > 0);
    CHECK(r.all_pass());

    CHECK_THROWS_AS(verify_axioms(7), Error);
}

TEST_CASE("the substitutability example sets are majority-equivalent") {
    // Opposites of {xPyIz}: {yPzIx, zPxIy} in one indifferent set and
    // {zIyPx} in another; they must aggregate identically.
    Profile two = make_profile(xyz(), {{2, "y>z=x"}, {3, "z>x=y"}});
    Profile one = make_profile(xyz(), {{4, "y=z>x"}});
    CHECK(margins(two) == margins(one));
    MajorityRelation rel_two = aggregate(two);
    MajorityRelation rel_one = aggregate(one);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            CHECK(rel_two.prefers(a, b) == rel_one.prefers(a, b));
            CHECK(rel_two.indifferent(a, b) == rel_one.indifferent(a, b));
        }
    }
    // And both are opposite sets of {(1, xPyIz)}.
    Profile d1 = make_profile(xyz(), {{1, "x>y=z"}});
    CHECK(margins(concat(d1, two)).all_zero());
    CHECK(margins(concat(d1, one)).all_zero());
}

TEST_CASE("decomposition soundness: remainder verdict matches the whole") {
    // When a balanced part exists, the remainder's transitivity verdict
    // must equal the full profile's on that triple.
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> type_dist(0, 12);
    std::uniform_int_distribution<int> n_dist(0, 8);
    const auto& types = TripleType::all();
    for (int round = 0; round < 80; ++round) {
        Profile p(xyz());
        int n = n_dist(rng);
        for (int v = 1; v <= n; ++v) p.add(v, types[size_t(type_dist(rng))].to_ordering());
        auto d = balanced_decomposition(p, t);
        bool whole = testutil::triple_transitive(p, t);
        if (d.has_value()) {
            CHECK(d->remainder_ordinal);
            CHECK(whole);
            Profile rest = p.subset(d->remainder);
            CHECK(testutil::triple_transitive(rest, t));
            Profile part = p.subset(d->balanced_part);
            CHECK(margins(part).all_zero());
        } else {
            CHECK(!whole);
        }
    }
}

TEST_SUITE_END();
