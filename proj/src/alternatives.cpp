#include "majority/alternatives.hpp"

#include <algorithm>

namespace majority {

bool AlternativeSet::valid_token(std::string_view token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](unsigned char ch) {
        return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
               (ch >= '0' && ch <= '9') || ch == '_';
    });
}

AlternativeSet::AlternativeSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        const std::string& name = names_[static_cast<size_t>(i)];
        if (!valid_token(name)) {
            raise(ErrorCode::MalformedOrdering,
                  "invalid alternative id '" + name + "' (expected [A-Za-z0-9_]+)");
        }
        if (!index_.emplace(name, i).second) {
            raise(ErrorCode::DuplicateAlternative, "duplicate alternative id '" + name + "'");
        }
    }
}

std::optional<int> AlternativeSet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int AlternativeSet::index_of(std::string_view name) const {
    if (auto idx = find(name)) return *idx;
    raise(ErrorCode::UnknownAlternative, "unknown alternative '" + std::string(name) + "'");
}

Triple::Triple(int a_, int b_, int c_, int n_alternatives) : a(a_), b(b_), c(c_) {
    if (a < 0 || b < 0 || c < 0 || a >= n_alternatives || b >= n_alternatives ||
        c >= n_alternatives) {
        raise(ErrorCode::NotInAlternativeSet, "triple index out of range");
    }
    if (a == b || b == c || a == c) {
        raise(ErrorCode::DegenerateTriple, "triple members must be pairwise distinct");
    }
}

int Triple::operator[](int position) const {
    switch (position) {
    case 0: return a;
    case 1: return b;
    default: return c;
    }
}

std::vector<Triple> all_triples(int n_alternatives) {
    std::vector<Triple> out;
    for (int a = 0; a < n_alternatives; ++a)
        for (int b = a + 1; b < n_alternatives; ++b)
            for (int c = b + 1; c < n_alternatives; ++c)
                out.push_back(Triple(a, b, c, n_alternatives));
    return out;
}

Triple triple_from_names(const AlternativeSet& alts, std::string_view a, std::string_view b,
                         std::string_view c) {
    return Triple(alts.index_of(a), alts.index_of(b), alts.index_of(c), alts.size());
}

} // namespace majority
