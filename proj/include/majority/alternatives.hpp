#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "majority/error.hpp"

namespace majority {

// An ordered set of alternative ids. Ids are short tokens over [A-Za-z0-9_],
// unique within the set. Alternatives are referred to by index everywhere
// else; names only matter for parsing and display.
class AlternativeSet {
public:
    AlternativeSet() = default;
    explicit AlternativeSet(std::vector<std::string> names);

    static bool valid_token(std::string_view token);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int index) const { return names_.at(static_cast<size_t>(index)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(std::string_view name) const;
    // Throws UnknownAlternative.
    int index_of(std::string_view name) const;

    bool operator==(const AlternativeSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

// An ordered triple of distinct alternative indices. The order carries
// meaning: conditions and cycle labels are stated relative to it.
struct Triple {
    int a = 0;
    int b = 1;
    int c = 2;

    Triple() = default;
    Triple(int a_, int b_, int c_, int n_alternatives);

    int operator[](int position) const;
    bool operator==(const Triple&) const = default;
};

// All C(n,3) triples of an n-element alternative set, indices ascending.
std::vector<Triple> all_triples(int n_alternatives);

Triple triple_from_names(const AlternativeSet& alts, std::string_view a,
                         std::string_view b, std::string_view c);

} // namespace majority
