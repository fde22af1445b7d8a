#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "majority/alternatives.hpp"

namespace majority {

// A complete transitive weak ordering over an alternative set, stored as a
// level (rank) per alternative: rank 0 is the most preferred level, levels
// are contiguous, alternatives sharing a level are indifferent.
class WeakOrdering {
public:
    WeakOrdering() = default;

    // levels[0] is the top group; groups must be nonempty, disjoint and
    // cover 0..n_alternatives-1. Throws DuplicateAlternative /
    // MissingAlternative / NotInAlternativeSet.
    static WeakOrdering from_levels(const std::vector<std::vector<int>>& levels,
                                    int n_alternatives);
    static WeakOrdering from_ranks(std::vector<int> ranks);

    // Grammar: group (">" group)*, group = alt ("=" alt)*, whitespace
    // insensitive. Every alternative of `alts` must appear exactly once.
    static WeakOrdering parse(std::string_view text, const AlternativeSet& alts);

    std::string format(const AlternativeSet& alts) const; // "x>y=z"

    int size() const { return static_cast<int>(rank_.size()); }
    int num_levels() const { return num_levels_; }
    int rank_of(int alternative) const { return rank_.at(static_cast<size_t>(alternative)); }
    std::vector<std::vector<int>> levels() const;

    // A concerned voter is not indifferent between all alternatives.
    bool concerned() const { return num_levels_ > 1; }

    bool prefers(int a, int b) const { return rank_of(a) < rank_of(b); }
    bool indifferent(int a, int b) const { return rank_of(a) == rank_of(b); }
    bool weakly_prefers(int a, int b) const { return rank_of(a) <= rank_of(b); }

    WeakOrdering reversed() const;

    // The induced ordering on exactly {t.a, t.b, t.c}; in the result,
    // alternative 0 is t.a, 1 is t.b, 2 is t.c.
    WeakOrdering restricted(const Triple& t) const;

    bool operator==(const WeakOrdering& other) const { return rank_ == other.rank_; }

private:
    std::vector<int> rank_;
    int num_levels_ = 0;
};

// The rank pattern of one voter over an oriented triple, normalized to
// contiguous levels. Exactly 13 values exist: 6 strict, 6 one-tie, 1
// unconcerned.
class TripleType {
public:
    TripleType() : rank_{0, 0, 0} {}
    TripleType(int ra, int rb, int rc);

    static TripleType of(const WeakOrdering& ordering, const Triple& t);

    // Canonical enumeration: U1[0..2], U2[0..2], V1[0..2], V2[0..2],
    // unconcerned last.
    static const std::array<TripleType, 13>& all();
    int canonical_index() const;

    int rank(int position) const { return rank_[static_cast<size_t>(position)]; }
    int num_levels() const;
    bool strict() const { return num_levels() == 3; }
    bool one_tie() const { return num_levels() == 2; }
    bool unconcerned() const { return num_levels() == 1; }

    bool prefers(int i, int j) const { return rank(i) < rank(j); }
    bool indifferent(int i, int j) const { return rank(i) == rank(j); }
    bool weakly_prefers(int i, int j) const { return rank(i) <= rank(j); }

    TripleType reversed() const;

    // Net pairwise support of a single voter of this type:
    // (m(a,b), m(a,c), m(b,c)), each in {-1,0,+1}.
    std::array<int, 3> margins() const;

    WeakOrdering to_ordering() const; // over a 3-alternative set
    std::string format(const AlternativeSet& alts, const Triple& t) const;

    bool operator==(const TripleType&) const = default;

private:
    std::array<int8_t, 3> rank_;
};

enum class OrderingKind { Strict, OneTie, Unconcerned };
enum class CycleTag { U1, U2, V1, V2 };

const char* cycle_tag_name(CycleTag tag);

// Slot of a triple ordering in the U/V taxonomy. Positions index the
// listed order of each cycle: U1 = {xPyPz, yPzPx, zPxPy}, U2 its
// reversals, V1 = {xPyIz, yPzIx, zPxIy}, V2 their reversals.
struct OrderingClass {
    OrderingKind kind = OrderingKind::Unconcerned;
    bool has_cycle = false;
    CycleTag cycle = CycleTag::U1;
    int position = 0; // 0..2, meaningful only when has_cycle

    bool operator==(const OrderingClass&) const = default;
};

OrderingClass classify_type(TripleType type);

// `ordering` must be over exactly three alternatives (NotATripleOrdering
// otherwise); `oriented` orients the taxonomy.
OrderingClass classify_ordering(const WeakOrdering& ordering, const Triple& oriented);

WeakOrdering reverse(const WeakOrdering& ordering);
WeakOrdering restrict(const WeakOrdering& ordering, const Triple& t);
WeakOrdering parse_ordering(std::string_view text, const AlternativeSet& alts);

} // namespace majority
