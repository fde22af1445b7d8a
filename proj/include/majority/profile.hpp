#pragma once

#include <vector>

#include "majority/alternatives.hpp"
#include "majority/ordering.hpp"

namespace majority {

// A finite indexed multiset of (voter id, ordering) pairs over one shared
// alternative set. Voter ids are distinct and preserved through every
// operation so that cycle-member sets can be reported as id sets.
// Synthetic voters produced by the reduction rules carry negative ids.
class Profile {
public:
    struct Entry {
        int voter_id;
        WeakOrdering ordering;
    };

    Profile() = default;
    explicit Profile(AlternativeSet alts) : alts_(std::move(alts)) {}

    const AlternativeSet& alternatives() const { return alts_; }
    const std::vector<Entry>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // Throws DuplicateVoter / InvalidOrdering (size mismatch).
    void add(int voter_id, WeakOrdering ordering);

    bool has_voter(int voter_id) const;
    const WeakOrdering& ordering_of(int voter_id) const;
    void remove_voter(int voter_id);

    std::vector<int> voter_ids() const;
    int concerned_count() const;
    int concerned_on_triple(const Triple& t) const;

    // Entries restricted to {t.a, t.b, t.c}; voter ids preserved, the
    // result's alternative set is the triple's names in order.
    Profile restricted(const Triple& t) const;

    // Sub-profile keeping only the given voters (ids must exist).
    Profile subset(const std::vector<int>& voter_ids) const;
    // Sub-profile dropping the given voters.
    Profile without(const std::vector<int>& voter_ids) const;

    bool operator==(const Profile&) const = default;

private:
    AlternativeSet alts_;
    std::vector<Entry> entries_;
};

// Profile union. Alternative sets must match; entries of `right` whose ids
// collide with `left` are reassigned fresh ids above the current maximum.
Profile concat(const Profile& left, const Profile& right);

} // namespace majority
