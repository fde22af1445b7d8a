#include "majority/profile.hpp"

#include <algorithm>

#include "majority/error.hpp"

namespace majority {

void Profile::add(int voter_id, WeakOrdering ordering) {
    if (has_voter(voter_id)) {
        raise(ErrorCode::DuplicateVoter, "duplicate voter id " + std::to_string(voter_id));
    }
    if (ordering.size() != alts_.size()) {
        raise(ErrorCode::InvalidOrdering, "ordering does not cover the alternative set");
    }
    entries_.push_back(Entry{voter_id, std::move(ordering)});
}

bool Profile::has_voter(int voter_id) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.voter_id == voter_id; });
}

const WeakOrdering& Profile::ordering_of(int voter_id) const {
    for (const Entry& e : entries_) {
        if (e.voter_id == voter_id) return e.ordering;
    }
    raise(ErrorCode::NotInAlternativeSet, "no voter with id " + std::to_string(voter_id));
}

void Profile::remove_voter(int voter_id) {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const Entry& e) { return e.voter_id == voter_id; });
    if (it == entries_.end()) {
        raise(ErrorCode::StaleRewrite, "voter " + std::to_string(voter_id) + " absent");
    }
    entries_.erase(it);
}

std::vector<int> Profile::voter_ids() const {
    std::vector<int> ids;
    ids.reserve(entries_.size());
    for (const Entry& e : entries_) ids.push_back(e.voter_id);
    return ids;
}

int Profile::concerned_count() const {
    int n = 0;
    for (const Entry& e : entries_) n += e.ordering.concerned();
    return n;
}

int Profile::concerned_on_triple(const Triple& t) const {
    int n = 0;
    for (const Entry& e : entries_) n += !TripleType::of(e.ordering, t).unconcerned();
    return n;
}

Profile Profile::restricted(const Triple& t) const {
    AlternativeSet triple_alts({alts_.name(t.a), alts_.name(t.b), alts_.name(t.c)});
    Profile out(triple_alts);
    for (const Entry& e : entries_) out.add(e.voter_id, e.ordering.restricted(t));
    return out;
}

Profile Profile::subset(const std::vector<int>& voter_ids) const {
    Profile out(alts_);
    for (int id : voter_ids) out.add(id, ordering_of(id));
    return out;
}

Profile Profile::without(const std::vector<int>& voter_ids) const {
    Profile out(alts_);
    for (const Entry& e : entries_) {
        if (std::find(voter_ids.begin(), voter_ids.end(), e.voter_id) == voter_ids.end()) {
            out.add(e.voter_id, e.ordering);
        }
    }
    return out;
}

Profile concat(const Profile& left, const Profile& right) {
    if (!(left.alternatives() == right.alternatives())) {
        raise(ErrorCode::NotInAlternativeSet, "profiles are over different alternative sets");
    }
    Profile out = left;
    int next_id = 0;
    for (const auto& e : left.entries()) next_id = std::max(next_id, e.voter_id);
    for (const auto& e : right.entries()) next_id = std::max(next_id, e.voter_id);
    for (const auto& e : right.entries()) {
        out.add(out.has_voter(e.voter_id) ? ++next_id : e.voter_id, e.ordering);
    }
    return out;
}

} // namespace majority
