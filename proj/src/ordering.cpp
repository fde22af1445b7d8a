#include "majority/ordering.hpp"

#include <algorithm>
#include <map>

#include "majority/error.hpp"

namespace majority {

WeakOrdering WeakOrdering::from_ranks(std::vector<int> ranks) {
    WeakOrdering o;
    int max_rank = -1;
    for (int r : ranks) {
        if (r < 0) raise(ErrorCode::InvalidOrdering, "negative rank");
        max_rank = std::max(max_rank, r);
    }
    // Levels must be contiguous starting at 0.
    std::vector<char> seen(static_cast<size_t>(max_rank + 1), 0);
    for (int r : ranks) seen[static_cast<size_t>(r)] = 1;
    for (char s : seen) {
        if (!s) raise(ErrorCode::InvalidOrdering, "non-contiguous levels");
    }
    o.rank_ = std::move(ranks);
    o.num_levels_ = max_rank + 1;
    return o;
}

WeakOrdering WeakOrdering::from_levels(const std::vector<std::vector<int>>& levels,
                                       int n_alternatives) {
    std::vector<int> ranks(static_cast<size_t>(n_alternatives), -1);
    int level = 0;
    for (const auto& group : levels) {
        if (group.empty()) raise(ErrorCode::InvalidOrdering, "empty level");
        for (int alt : group) {
            if (alt < 0 || alt >= n_alternatives) {
                raise(ErrorCode::NotInAlternativeSet, "alternative index out of range");
            }
            if (ranks[static_cast<size_t>(alt)] != -1) {
                raise(ErrorCode::DuplicateAlternative,
                      "alternative appears in more than one level");
            }
            ranks[static_cast<size_t>(alt)] = level;
        }
        ++level;
    }
    for (int r : ranks) {
        if (r == -1) raise(ErrorCode::MissingAlternative, "level groups do not cover the set");
    }
    WeakOrdering o;
    o.rank_ = std::move(ranks);
    o.num_levels_ = level;
    return o;
}

namespace {

std::string_view trim(std::string_view s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

} // namespace

WeakOrdering WeakOrdering::parse(std::string_view text, const AlternativeSet& alts) {
    std::string_view body = trim(text);
    if (body.empty()) raise(ErrorCode::EmptyInput, "empty ordering");

    std::vector<std::vector<int>> levels;
    std::vector<char> used(static_cast<size_t>(alts.size()), 0);
    for (std::string_view group_text : split(body, '>')) {
        std::vector<int> group;
        for (std::string_view token_raw : split(group_text, '=')) {
            std::string_view token = trim(token_raw);
            if (token.empty()) {
                raise(ErrorCode::MalformedOrdering,
                      "malformed ordering '" + std::string(body) + "': empty token");
            }
            if (!AlternativeSet::valid_token(token)) {
                raise(ErrorCode::MalformedOrdering,
                      "malformed ordering token '" + std::string(token) + "'");
            }
            int idx = alts.index_of(token);
            if (used[static_cast<size_t>(idx)]) {
                raise(ErrorCode::DuplicateAlternative,
                      "alternative '" + std::string(token) + "' listed twice");
            }
            used[static_cast<size_t>(idx)] = 1;
            group.push_back(idx);
        }
        levels.push_back(std::move(group));
    }
    for (int i = 0; i < alts.size(); ++i) {
        if (!used[static_cast<size_t>(i)]) {
            raise(ErrorCode::MissingAlternative,
                  "ordering does not mention alternative '" + alts.name(i) + "'");
        }
    }
    return from_levels(levels, alts.size());
}

std::string WeakOrdering::format(const AlternativeSet& alts) const {
    std::string out;
    for (const auto& group : levels()) {
        if (!out.empty()) out += '>';
        for (size_t i = 0; i < group.size(); ++i) {
            if (i > 0) out += '=';
            out += alts.name(group[i]);
        }
    }
    return out;
}

std::vector<std::vector<int>> WeakOrdering::levels() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(num_levels_));
    for (int alt = 0; alt < size(); ++alt) {
        out[static_cast<size_t>(rank_[static_cast<size_t>(alt)])].push_back(alt);
    }
    return out;
}

WeakOrdering WeakOrdering::reversed() const {
    std::vector<int> ranks(rank_.size());
    for (size_t i = 0; i < rank_.size(); ++i) ranks[i] = num_levels_ - 1 - rank_[i];
    return from_ranks(std::move(ranks));
}

WeakOrdering WeakOrdering::restricted(const Triple& t) const {
    if (t.a >= size() || t.b >= size() || t.c >= size()) {
        raise(ErrorCode::NotInAlternativeSet, "triple member outside the alternative set");
    }
    std::array<int, 3> raw = {rank_of(t.a), rank_of(t.b), rank_of(t.c)};
    // Compress ranks to contiguous levels.
    std::array<int, 3> uniq = raw;
    std::sort(uniq.begin(), uniq.end());
    auto last = std::unique(uniq.begin(), uniq.end());
    std::vector<int> ranks(3);
    for (size_t i = 0; i < 3; ++i) {
        ranks[i] = static_cast<int>(std::find(uniq.begin(), last, raw[i]) - uniq.begin());
    }
    return from_ranks(std::move(ranks));
}

TripleType::TripleType(int ra, int rb, int rc) {
    std::array<int, 3> raw = {ra, rb, rc};
    std::array<int, 3> uniq = raw;
    std::sort(uniq.begin(), uniq.end());
    auto last = std::unique(uniq.begin(), uniq.end());
    for (int i = 0; i < 3; ++i) {
        auto pos = std::find(uniq.begin(), last, raw[static_cast<size_t>(i)]);
        rank_[static_cast<size_t>(i)] = static_cast<int8_t>(pos - uniq.begin());
    }
}

TripleType TripleType::of(const WeakOrdering& ordering, const Triple& t) {
    return TripleType(ordering.rank_of(t.a), ordering.rank_of(t.b), ordering.rank_of(t.c));
}

const std::array<TripleType, 13>& TripleType::all() {
    // Taxonomy order. Reversal maps U1<->U2 and V1<->V2 position-wise.
    static const std::array<TripleType, 13> table = {
        TripleType(0, 1, 2), // U1[0] aPbPc
        TripleType(2, 0, 1), // U1[1] bPcPa
        TripleType(1, 2, 0), // U1[2] cPaPb
        TripleType(2, 1, 0), // U2[0] cPbPa
        TripleType(0, 2, 1), // U2[1] aPcPb
        TripleType(1, 0, 2), // U2[2] bPaPc
        TripleType(0, 1, 1), // V1[0] aPbIc
        TripleType(1, 0, 1), // V1[1] bPcIa
        TripleType(1, 1, 0), // V1[2] cPaIb
        TripleType(1, 0, 0), // V2[0] cIbPa
        TripleType(0, 1, 0), // V2[1] aIcPb
        TripleType(0, 0, 1), // V2[2] bIaPc
        TripleType(0, 0, 0), // unconcerned
    };
    return table;
}

int TripleType::canonical_index() const {
    const auto& table = all();
    for (int i = 0; i < 13; ++i) {
        if (table[static_cast<size_t>(i)] == *this) return i;
    }
    return -1; // unreachable for normalized ranks
}

int TripleType::num_levels() const {
    return 1 + static_cast<int>(*std::max_element(rank_.begin(), rank_.end()));
}

TripleType TripleType::reversed() const {
    int top = num_levels() - 1;
    return TripleType(top - rank_[0], top - rank_[1], top - rank_[2]);
}

std::array<int, 3> TripleType::margins() const {
    auto net = [&](int i, int j) { return (rank(i) < rank(j)) - (rank(j) < rank(i)); };
    return {net(0, 1), net(0, 2), net(1, 2)};
}

WeakOrdering TripleType::to_ordering() const {
    return WeakOrdering::from_ranks({rank_[0], rank_[1], rank_[2]});
}

std::string TripleType::format(const AlternativeSet& alts, const Triple& t) const {
    std::string out;
    auto level_sets = to_ordering().levels();
    for (const auto& group : level_sets) {
        if (!out.empty()) out += '>';
        for (size_t i = 0; i < group.size(); ++i) {
            if (i > 0) out += '=';
            out += alts.name(t[group[i]]);
        }
    }
    return out;
}

const char* cycle_tag_name(CycleTag tag) {
    switch (tag) {
    case CycleTag::U1: return "U1";
    case CycleTag::U2: return "U2";
    case CycleTag::V1: return "V1";
    case CycleTag::V2: return "V2";
    }
    return "?";
}

OrderingClass classify_type(TripleType type) {
    int idx = type.canonical_index();
    OrderingClass out;
    if (idx == 12) {
        out.kind = OrderingKind::Unconcerned;
        return out;
    }
    out.has_cycle = true;
    out.position = idx % 3;
    if (idx < 3) {
        out.kind = OrderingKind::Strict;
        out.cycle = CycleTag::U1;
    } else if (idx < 6) {
        out.kind = OrderingKind::Strict;
        out.cycle = CycleTag::U2;
    } else if (idx < 9) {
        out.kind = OrderingKind::OneTie;
        out.cycle = CycleTag::V1;
    } else {
        out.kind = OrderingKind::OneTie;
        out.cycle = CycleTag::V2;
    }
    return out;
}

OrderingClass classify_ordering(const WeakOrdering& ordering, const Triple& oriented) {
    if (ordering.size() != 3) {
        raise(ErrorCode::NotATripleOrdering, "ordering is not over exactly three alternatives");
    }
    return classify_type(TripleType::of(ordering, oriented));
}

WeakOrdering reverse(const WeakOrdering& ordering) { return ordering.reversed(); }

WeakOrdering restrict(const WeakOrdering& ordering, const Triple& t) {
    return ordering.restricted(t);
}

WeakOrdering parse_ordering(std::string_view text, const AlternativeSet& alts) {
    return WeakOrdering::parse(text, alts);
}

} // namespace majority
