#include "majority/margins.hpp"

#include <algorithm>
#include <numeric>

#include "majority/error.hpp"

namespace majority {

bool MarginMatrix::all_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](int v) { return v == 0; });
}

MarginMatrix MarginMatrix::negated() const {
    MarginMatrix out = *this;
    for (int& v : out.m_) v = -v;
    return out;
}

MarginMatrix& MarginMatrix::operator+=(const MarginMatrix& other) {
    if (n_ != other.n_) raise(ErrorCode::NotInAlternativeSet, "margin matrix size mismatch");
    for (size_t i = 0; i < m_.size(); ++i) m_[i] += other.m_[i];
    return *this;
}

MarginMatrix margins(const Profile& profile) {
    int n = profile.alternatives().size();
    MarginMatrix m(n);
    for (const auto& entry : profile.entries()) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                if (entry.ordering.prefers(a, b)) m.accumulate(a, b, 1);
                else if (entry.ordering.prefers(b, a)) m.accumulate(a, b, -1);
            }
        }
    }
    return m;
}

PairCounts pair_counts(const Profile& profile) {
    int n = profile.alternatives().size();
    PairCounts counts;
    counts.n_voters = profile.size();
    counts.n_alternatives = n;
    counts.prefer.assign(static_cast<size_t>(n) * n, 0);
    for (const auto& entry : profile.entries()) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a != b && entry.ordering.prefers(a, b)) {
                    ++counts.prefer[static_cast<size_t>(a) * n + b];
                }
            }
        }
    }
    return counts;
}

std::array<int, 3> triple_margins(const Profile& profile, const Triple& t) {
    std::array<int, 3> m = {0, 0, 0};
    for (const auto& entry : profile.entries()) {
        auto tm = TripleType::of(entry.ordering, t).margins();
        m[0] += tm[0];
        m[1] += tm[1];
        m[2] += tm[2];
    }
    return m;
}

namespace {

// One transitivity case over an ordered triple: relation signs s_ab, s_bc
// in {-1,0,1} force the required sign of s_ac.
bool triple_case_ok(int s_ab, int s_bc, int s_ac) {
    if (s_ab > 0 && s_bc > 0) return s_ac > 0;  // PP -> P
    if (s_ab > 0 && s_bc == 0) return s_ac > 0; // PI -> P
    if (s_ab == 0 && s_bc > 0) return s_ac > 0; // IP -> P
    if (s_ab == 0 && s_bc == 0) return s_ac == 0; // II -> I
    return true; // premise absent
}

int sign(int v) { return (v > 0) - (v < 0); }

} // namespace

bool triple_relation_transitive(int m_ab, int m_ac, int m_bc) {
    int s[3][3] = {};
    s[0][1] = sign(m_ab);
    s[0][2] = sign(m_ac);
    s[1][2] = sign(m_bc);
    s[1][0] = -s[0][1];
    s[2][0] = -s[0][2];
    s[2][1] = -s[1][2];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                if (a == b || b == c || a == c) continue;
                if (!triple_case_ok(s[a][b], s[b][c], s[a][c])) return false;
            }
    return true;
}

MajorityRelation::MajorityRelation(MarginMatrix m) : margins_(std::move(m)) {
    int n = margins_.size();
    for (int a = 0; a < n && transitive_; ++a) {
        for (int b = 0; b < n && transitive_; ++b) {
            for (int c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                int s_ab = sign(margins_.at(a, b));
                int s_bc = sign(margins_.at(b, c));
                int s_ac = sign(margins_.at(a, c));
                if (!triple_case_ok(s_ab, s_bc, s_ac)) {
                    transitive_ = false;
                    witness_ = Triple(a, b, c, n);
                    break;
                }
            }
        }
    }
}

std::string MajorityRelation::format_ordering(const AlternativeSet& alts) const {
    int n = size();
    // For a transitive complete relation, "number of alternatives strictly
    // above" is a valid level assignment.
    std::vector<int> above(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && prefers(b, a)) ++above[static_cast<size_t>(a)];

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return above[static_cast<size_t>(a)] < above[static_cast<size_t>(b)];
    });

    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i > 0) {
            out += above[static_cast<size_t>(order[i])] == above[static_cast<size_t>(order[i - 1])]
                       ? " I "
                       : " P ";
        }
        out += alts.name(order[i]);
    }
    return out;
}

MajorityRelation aggregate(const Profile& profile) {
    return MajorityRelation(margins(profile));
}

} // namespace majority
