#include "majority/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "majority/error.hpp"
#include "majority/margins.hpp"

namespace majority {

namespace {

void enumerate_partitions(std::vector<int>& remaining, std::vector<std::vector<int>>& levels,
                          int n, std::vector<WeakOrdering>& out) {
    if (remaining.empty()) {
        out.push_back(WeakOrdering::from_levels(levels, n));
        return;
    }
    const int r = static_cast<int>(remaining.size());
    for (uint32_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<int> level;
        std::vector<int> rest;
        for (int i = 0; i < r; ++i) {
            if (mask & (1u << i)) level.push_back(remaining[static_cast<size_t>(i)]);
            else rest.push_back(remaining[static_cast<size_t>(i)]);
        }
        levels.push_back(std::move(level));
        enumerate_partitions(rest, levels, n, out);
        levels.pop_back();
    }
}

} // namespace

std::vector<WeakOrdering> enumerate_orderings(int n_alternatives) {
    std::vector<int> all(static_cast<size_t>(n_alternatives));
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> levels;
    std::vector<WeakOrdering> out;
    enumerate_partitions(all, levels, n_alternatives, out);
    return out;
}

std::vector<WeakOrdering> canonical_triple_orderings() {
    std::vector<WeakOrdering> out;
    for (const TripleType& type : TripleType::all()) out.push_back(type.to_ordering());
    return out;
}

ProfileStream::ProfileStream(int n_voters, std::vector<WeakOrdering> types, AlternativeSet alts,
                             uint64_t budget)
    : n_voters_(n_voters), types_(std::move(types)), alts_(std::move(alts)) {
    if (n_voters < 0 || types_.empty()) {
        raise(ErrorCode::UsageError, "profile stream needs a type universe and n >= 0");
    }
    total_ = 1;
    for (int i = 0; i < n_voters; ++i) {
        if (total_ > budget / types_.size()) {
            raise(ErrorCode::BudgetExceeded,
                  "|types|^n exceeds the enumeration budget of " + std::to_string(budget));
        }
        total_ *= types_.size();
    }
    odometer_.assign(static_cast<size_t>(n_voters), 0);
}

std::optional<Profile> ProfileStream::next() {
    if (produced_ == total_) return std::nullopt;
    Profile p(alts_);
    for (int v = 0; v < n_voters_; ++v) {
        p.add(v + 1, types_[static_cast<size_t>(odometer_[static_cast<size_t>(v)])]);
    }
    ++produced_;
    // Increment with the last voter fastest.
    for (int v = n_voters_ - 1; v >= 0; --v) {
        if (++odometer_[static_cast<size_t>(v)] < static_cast<int>(types_.size())) break;
        odometer_[static_cast<size_t>(v)] = 0;
    }
    return p;
}

namespace {

const AlternativeSet& triple_alts() {
    static const AlternativeSet alts({"x", "y", "z"});
    return alts;
}

Profile profile_from_counts(const std::vector<TripleType>& types, const std::vector<int>& counts) {
    Profile p(triple_alts());
    int voter = 1;
    for (size_t i = 0; i < types.size(); ++i) {
        for (int c = 0; c < counts[i]; ++c) p.add(voter++, types[i].to_ordering());
    }
    return p;
}

uint64_t multinomial(int n, const std::vector<int>& counts) {
    // n <= 20 keeps every partial product within uint64.
    uint64_t result = 1;
    int placed = 0;
    for (int c : counts) {
        for (int k = 1; k <= c; ++k) {
            result = result * static_cast<uint64_t>(placed + k) / static_cast<uint64_t>(k);
        }
        placed += c;
    }
    (void)n;
    return result;
}

// All count vectors over `k` slots summing to exactly n, lexicographically.
void for_each_count_vector(int n, int k, uint64_t budget, uint64_t& used,
                           const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> counts(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == k - 1) {
            counts[static_cast<size_t>(slot)] = left;
            if (++used > budget) {
                raise(ErrorCode::BudgetExceeded, "enumeration budget exhausted");
            }
            fn(counts);
            return;
        }
        for (int c = left; c >= 0; --c) {
            counts[static_cast<size_t>(slot)] = c;
            rec(slot + 1, left - c);
        }
    };
    if (k == 0) return;
    rec(0, n);
}

} // namespace

CensusReport transitivity_census(int n_voters, const std::vector<TripleType>& types,
                                 uint64_t budget, bool multiset_mode) {
    if (n_voters < 0 || n_voters > 20) {
        raise(ErrorCode::BudgetExceeded, "census voter count must be between 0 and 20");
    }
    CensusReport report;
    report.n_voters = n_voters;
    const Triple t(0, 1, 2, 3);

    auto tally = [&](const Profile& p, uint64_t weight) {
        report.total_profiles += weight;
        auto m = triple_margins(p, t);
        bool transitive = triple_relation_transitive(m[0], m[1], m[2]);
        if (transitive) report.transitive_count += weight;
        for (size_t k = 0; k < kAllConditions.size(); ++k) {
            ConditionVerdict v = check_condition(kAllConditions[k], p, t);
            if (v.holds && v.applicable) {
                report.per_condition[k].holds += weight;
                if (transitive) report.per_condition[k].holds_and_transitive += weight;
            }
        }
    };

    if (multiset_mode) {
        uint64_t used = 0;
        for_each_count_vector(n_voters, static_cast<int>(types.size()), budget, used,
                              [&](const std::vector<int>& counts) {
                                  tally(profile_from_counts(types, counts),
                                        multinomial(n_voters, counts));
                              });
    } else {
        std::vector<WeakOrdering> orderings;
        for (const TripleType& type : types) orderings.push_back(type.to_ordering());
        ProfileStream stream(n_voters, orderings, triple_alts(), budget);
        while (auto p = stream.next()) tally(*p, 1);
    }
    return report;
}

SufficiencyResult verify_sufficiency_predicate(
    const std::function<bool(const Profile&, const Triple&)>& condition_holds,
    const std::string& name, int n_max, uint64_t budget) {
    SufficiencyResult result;
    result.condition = name;
    result.n_max = n_max;
    const Triple t(0, 1, 2, 3);
    const auto& types = TripleType::all();
    std::vector<TripleType> type_vec(types.begin(), types.end());

    uint64_t used = 0;
    for (int n = 0; n <= n_max && !result.counterexample; ++n) {
        for_each_count_vector(n, 13, budget, used, [&](const std::vector<int>& counts) {
            if (result.counterexample) return;
            ++result.multisets_checked;
            Profile p = profile_from_counts(type_vec, counts);
            if (!condition_holds(p, t)) return;
            ++result.holding;
            auto m = triple_margins(p, t);
            if (!triple_relation_transitive(m[0], m[1], m[2])) {
                // Re-validate before reporting.
                if (condition_holds(p, t)) result.counterexample = p;
            }
        });
    }
    return result;
}

SufficiencyResult verify_sufficiency(Condition condition, int n_max, uint64_t budget) {
    SufficiencyResult result = verify_sufficiency_predicate(
        [condition](const Profile& p, const Triple& t) {
            ConditionVerdict v = check_condition(condition, p, t);
            return v.holds && v.applicable;
        },
        condition_name(condition), n_max, budget);
    return result;
}

NecessityResult verify_theorem_xi_necessity(const std::vector<TripleType>& type_set,
                                            int count_bound, uint64_t budget) {
    if (type_set.empty() || count_bound < 0) {
        raise(ErrorCode::UsageError, "necessity probe needs a nonempty type set");
    }
    NecessityResult result;
    const Triple t(0, 1, 2, 3);

    // Pattern-level extremal restriction: one voter per type.
    std::vector<int> ones(type_set.size(), 1);
    result.er_holds = check_extremal_restriction(profile_from_counts(type_set, ones), t).holds;

    const int k = static_cast<int>(type_set.size());
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= static_cast<uint64_t>(count_bound) + 1;
        if (total > budget) {
            raise(ErrorCode::BudgetExceeded, "count grid exceeds the enumeration budget");
        }
    }

    bool found_intransitive = false;
    std::vector<int> first_witness;
    // By total multiplicity, then lexicographically, so the reported
    // witness is minimal.
    for (int total_count = 1; total_count <= count_bound * k && !found_intransitive;
         ++total_count) {
        std::vector<int> counts(static_cast<size_t>(k), 0);
        std::function<bool(int, int)> rec = [&](int slot, int left) {
            if (slot == k - 1) {
                if (left > count_bound) return false;
                counts[static_cast<size_t>(slot)] = left;
                ++result.assignments_checked;
                auto p = profile_from_counts(type_set, counts);
                auto m = triple_margins(p, t);
                if (!triple_relation_transitive(m[0], m[1], m[2])) {
                    first_witness = counts;
                    return true;
                }
                return false;
            }
            for (int c = 0; c <= std::min(count_bound, left); ++c) {
                counts[static_cast<size_t>(slot)] = c;
                if (rec(slot + 1, left - c)) return true;
            }
            return false;
        };
        if (rec(0, total_count)) found_intransitive = true;
    }

    if (result.er_holds) {
        result.pass = !found_intransitive;
        if (found_intransitive) result.witness_counts = first_witness; // would falsify ER sufficiency
    } else {
        result.pass = found_intransitive;
        if (found_intransitive) result.witness_counts = first_witness;
    }
    return result;
}

} // namespace majority
