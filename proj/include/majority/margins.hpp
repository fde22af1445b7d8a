#pragma once

#include <array>
#include <optional>
#include <vector>

#include "majority/profile.hpp"

namespace majority {

// Antisymmetric net-support counts m(a,b) = N(aPb) - N(bPa).
class MarginMatrix {
public:
    MarginMatrix() = default;
    explicit MarginMatrix(int n_alternatives)
        : n_(n_alternatives), m_(static_cast<size_t>(n_alternatives) * n_alternatives, 0) {}

    int size() const { return n_; }
    int at(int a, int b) const { return m_[index(a, b)]; }
    void set(int a, int b, int value) { m_[index(a, b)] = value; }
    void accumulate(int a, int b, int delta) { m_[index(a, b)] += delta; }

    bool all_zero() const;
    MarginMatrix negated() const;
    MarginMatrix& operator+=(const MarginMatrix& other);

    bool operator==(const MarginMatrix&) const = default;

private:
    size_t index(int a, int b) const {
        return static_cast<size_t>(a) * n_ + static_cast<size_t>(b);
    }

    int n_ = 0;
    std::vector<int> m_;
};

MarginMatrix margins(const Profile& profile);

// Pairwise strict-preference counts N(aPb). N(aIb) and N(aRb) derive from
// these: N(aIb) = n - N(aPb) - N(bPa), N(aRb) = N(aPb) + N(aIb).
struct PairCounts {
    int n_voters = 0;
    std::vector<int> prefer; // prefer[a*n+b] = N(aPb)
    int n_alternatives = 0;

    int prefers(int a, int b) const {
        return prefer[static_cast<size_t>(a) * n_alternatives + b];
    }
    int indifferent(int a, int b) const { return n_voters - prefers(a, b) - prefers(b, a); }
    int weakly_prefers(int a, int b) const { return prefers(a, b) + indifferent(a, b); }
};

PairCounts pair_counts(const Profile& profile);

// (m(a,b), m(a,c), m(b,c)) for one triple, without building the full matrix.
std::array<int, 3> triple_margins(const Profile& profile, const Triple& t);

// The complete social relation under the simple majority rule: aPb iff
// m(a,b) > 0, aIb iff m(a,b) = 0. Ties are social indifference; there is no
// quorum or threshold variant.
class MajorityRelation {
public:
    MajorityRelation() = default;
    explicit MajorityRelation(MarginMatrix margins);

    int size() const { return margins_.size(); }
    const MarginMatrix& margin_matrix() const { return margins_; }

    bool prefers(int a, int b) const { return margins_.at(a, b) > 0; }
    bool indifferent(int a, int b) const { return margins_.at(a, b) == 0; }
    bool weakly_prefers(int a, int b) const { return margins_.at(a, b) >= 0; }

    // True iff every alternative triple satisfies all four transitivity
    // cases (PP->P, PI->P, IP->P, II->I).
    bool transitive() const { return transitive_; }

    // First ordered triple (a,b,c) violating a transitivity case, in
    // lexicographic index order; present iff not transitive.
    const std::optional<Triple>& witness() const { return witness_; }

    // Renders a transitive relation as a chain like "x P y I z".
    std::string format_ordering(const AlternativeSet& alts) const;

    bool operator==(const MajorityRelation& other) const {
        return margins_ == other.margins_;
    }

private:
    MarginMatrix margins_;
    bool transitive_ = true;
    std::optional<Triple> witness_;
};

MajorityRelation aggregate(const Profile& profile);

// Transitivity of a 3-alternative relation given its margin signs; used by
// the fast enumeration paths.
bool triple_relation_transitive(int m_ab, int m_ac, int m_bc);

} // namespace majority
