#include "majority/oi_framework.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "majority/error.hpp"
#include "majority/ordering.hpp"

namespace majority {

SetClassification classify_set(const Profile& p) {
    MajorityRelation rel = aggregate(p);
    SetClassification out;
    out.is_indifferent = rel.margin_matrix().all_zero();
    out.is_ordinal = rel.transitive();
    return out;
}

std::vector<Profile> opposite_sets(const Profile& d1, int max_size,
                                   const std::vector<WeakOrdering>& universe) {
    for (const WeakOrdering& o : universe) {
        if (o.size() != d1.alternatives().size()) {
            raise(ErrorCode::InvalidOrdering, "universe ordering over a different set");
        }
    }
    MarginMatrix target = margins(d1).negated();

    int first_fresh_id = 1;
    for (const auto& e : d1.entries()) first_fresh_id = std::max(first_fresh_id, e.voter_id + 1);

    std::vector<Profile> out;
    std::vector<int> pick;
    std::function<void(int, const MarginMatrix&)> search = [&](int start, const MarginMatrix& sum) {
        if (sum == target) {
            Profile d2(d1.alternatives());
            for (size_t i = 0; i < pick.size(); ++i) {
                d2.add(first_fresh_id + static_cast<int>(i),
                       universe[static_cast<size_t>(pick[i])]);
            }
            out.push_back(std::move(d2));
        }
        if (static_cast<int>(pick.size()) == max_size) return;
        for (int idx = start; idx < static_cast<int>(universe.size()); ++idx) {
            Profile single(d1.alternatives());
            single.add(1, universe[static_cast<size_t>(idx)]);
            MarginMatrix next = sum;
            next += margins(single);
            pick.push_back(idx);
            search(idx, next);
            pick.pop_back();
        }
    };
    search(0, MarginMatrix(d1.alternatives().size()));

    std::stable_sort(out.begin(), out.end(), [](const Profile& a, const Profile& b) {
        return a.size() < b.size();
    });
    return out;
}

std::optional<Decomposition> balanced_decomposition(const Profile& p, const Triple& t,
                                                    int enumeration_bound) {
    const int n = p.size();
    if (n > enumeration_bound) {
        raise(ErrorCode::BoundExceeded, "profile too large for subset enumeration (" +
                                            std::to_string(n) + " > " +
                                            std::to_string(enumeration_bound) + " voters)");
    }
    std::vector<int> ids = p.voter_ids();
    std::sort(ids.begin(), ids.end());
    std::vector<std::array<int, 3>> voter_margins;
    for (int id : ids) {
        voter_margins.push_back(TripleType::of(p.ordering_of(id), t).margins());
    }

    std::array<int, 3> total = triple_margins(p, t);
    std::optional<Decomposition> best;
    std::vector<int> best_ids;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::array<int, 3> part = {0, 0, 0};
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                part[0] += voter_margins[static_cast<size_t>(i)][0];
                part[1] += voter_margins[static_cast<size_t>(i)][1];
                part[2] += voter_margins[static_cast<size_t>(i)][2];
            }
        }
        if (part != std::array<int, 3>{0, 0, 0}) continue;
        std::array<int, 3> rest = {total[0] - part[0], total[1] - part[1], total[2] - part[2]};
        if (!triple_relation_transitive(rest[0], rest[1], rest[2])) continue;

        std::vector<int> t_ids;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) t_ids.push_back(ids[static_cast<size_t>(i)]);
        }
        bool better = !best || static_cast<int>(t_ids.size()) > static_cast<int>(best_ids.size()) ||
                      (t_ids.size() == best_ids.size() && t_ids < best_ids);
        if (better) {
            Decomposition d;
            d.balanced_part = t_ids;
            for (int i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) d.remainder.push_back(ids[static_cast<size_t>(i)]);
            }
            d.remainder_ordinal = true;
            best = std::move(d);
            best_ids = std::move(t_ids);
        }
    }
    return best;
}

namespace {

// Multisets of the 13 triple types as count vectors, sizes 0..n_bound.
struct TypeMultiset {
    std::array<int, 13> counts{};
    std::array<int, 3> margin{};
    int size = 0;
    bool indifferent = false;
    bool ordinal = false;
};

std::vector<TypeMultiset> enumerate_multisets(int n_bound) {
    std::vector<TypeMultiset> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        TypeMultiset ms;
        for (int idx : pick) {
            ++ms.counts[static_cast<size_t>(idx)];
            auto m = TripleType::all()[static_cast<size_t>(idx)].margins();
            ms.margin[0] += m[0];
            ms.margin[1] += m[1];
            ms.margin[2] += m[2];
        }
        ms.size = static_cast<int>(pick.size());
        ms.indifferent = ms.margin == std::array<int, 3>{0, 0, 0};
        ms.ordinal = triple_relation_transitive(ms.margin[0], ms.margin[1], ms.margin[2]);
        out.push_back(ms);
        if (static_cast<int>(pick.size()) == n_bound) return;
        for (int idx = start; idx < 13; ++idx) {
            pick.push_back(idx);
            rec(idx);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string describe_multiset(const TypeMultiset& ms) {
    AlternativeSet alts({"x", "y", "z"});
    Triple t(0, 1, 2, 3);
    std::string out = "{";
    bool first = true;
    for (int idx = 0; idx < 13; ++idx) {
        for (int c = 0; c < ms.counts[static_cast<size_t>(idx)]; ++c) {
            if (!first) out += ", ";
            out += TripleType::all()[static_cast<size_t>(idx)].format(alts, t);
            first = false;
        }
    }
    return out + "}";
}

std::array<int, 3> sign3(const std::array<int, 3>& m) {
    auto sgn = [](int v) { return (v > 0) - (v < 0); };
    return {sgn(m[0]), sgn(m[1]), sgn(m[2])};
}

} // namespace

AxiomReport verify_axioms(int n_bound) {
    if (n_bound < 0 || n_bound > 6) {
        raise(ErrorCode::BoundExceeded, "axiom verification bound must be between 0 and 6");
    }
    AxiomReport report;

    // Axiom 1 through the real aggregation path.
    {
        Profile empty(AlternativeSet({"x", "y", "z"}));
        MajorityRelation rel = aggregate(empty);
        report.axiom1.cases_checked = 1;
        if (!rel.margin_matrix().all_zero() || !rel.transitive()) {
            report.axiom1.pass = false;
            report.axiom1.counterexample = "empty profile does not aggregate to indifference";
        }
    }

    std::vector<TypeMultiset> sets = enumerate_multisets(n_bound);

    // Axioms 2 (ordinal base) and its universal variant (any base).
    for (const TypeMultiset& base : sets) {
        for (const TypeMultiset& indiff : sets) {
            if (!indiff.indifferent) continue;
            std::array<int, 3> sum = {base.margin[0] + indiff.margin[0],
                                      base.margin[1] + indiff.margin[1],
                                      base.margin[2] + indiff.margin[2]};
            bool same = sign3(sum) == sign3(base.margin);
            if (base.ordinal) {
                ++report.axiom2.cases_checked;
                if (!same && report.axiom2.pass) {
                    report.axiom2.pass = false;
                    report.axiom2.counterexample =
                        describe_multiset(base) + " + " + describe_multiset(indiff);
                }
            }
            ++report.axiom2_universal.cases_checked;
            if (!same && report.axiom2_universal.pass) {
                report.axiom2_universal.pass = false;
                report.axiom2_universal.counterexample =
                    describe_multiset(base) + " + " + describe_multiset(indiff);
            }
        }
    }

    // Axiom 3: indifferent sub-multisets of ordinal sets.
    for (const TypeMultiset& base : sets) {
        if (!base.ordinal) continue;
        // Enumerate sub-multisets by odometer over per-type counts.
        std::array<int, 13> sub{};
        while (true) {
            std::array<int, 3> sub_margin = {0, 0, 0};
            int sub_size = 0;
            for (int idx = 0; idx < 13; ++idx) {
                auto m = TripleType::all()[static_cast<size_t>(idx)].margins();
                sub_margin[0] += m[0] * sub[static_cast<size_t>(idx)];
                sub_margin[1] += m[1] * sub[static_cast<size_t>(idx)];
                sub_margin[2] += m[2] * sub[static_cast<size_t>(idx)];
                sub_size += sub[static_cast<size_t>(idx)];
            }
            if (sub_size > 0 && sub_margin == std::array<int, 3>{0, 0, 0}) {
                std::array<int, 3> rest = {base.margin[0] - sub_margin[0],
                                           base.margin[1] - sub_margin[1],
                                           base.margin[2] - sub_margin[2]};
                ++report.axiom3.cases_checked;
                if (sign3(rest) != sign3(base.margin) && report.axiom3.pass) {
                    report.axiom3.pass = false;
                    report.axiom3.counterexample = describe_multiset(base);
                }
            }
            // advance odometer
            int idx = 0;
            while (idx < 13) {
                if (sub[static_cast<size_t>(idx)] < base.counts[static_cast<size_t>(idx)]) {
                    ++sub[static_cast<size_t>(idx)];
                    break;
                }
                sub[static_cast<size_t>(idx)] = 0;
                ++idx;
            }
            if (idx == 13) break;
        }
    }

    // Axiom 4: all opposite sets of a set aggregate identically.
    for (const TypeMultiset& d1 : sets) {
        std::array<int, 3> want = {-d1.margin[0], -d1.margin[1], -d1.margin[2]};
        const TypeMultiset* first_opposite = nullptr;
        for (const TypeMultiset& d2 : sets) {
            if (d2.margin != want) continue;
            if (!first_opposite) {
                first_opposite = &d2;
                continue;
            }
            ++report.axiom4.cases_checked;
            if (sign3(d2.margin) != sign3(first_opposite->margin) && report.axiom4.pass) {
                report.axiom4.pass = false;
                report.axiom4.counterexample =
                    describe_multiset(*first_opposite) + " vs " + describe_multiset(d2);
            }
        }
    }

    return report;
}

} // namespace majority
