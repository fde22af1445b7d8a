#include "majority/profile_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "majority/error.hpp"

namespace majority {

namespace {

std::string strip(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& reason) {
    raise(ErrorCode::ParseError, name + ":" + std::to_string(line) + ": " + reason);
}

// Alternative ids in order of first appearance within an ordering text.
std::vector<std::string> tokens_in_order(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    for (char ch : text + ">") {
        if (ch == '>' || ch == '=') {
            std::string t = strip(token);
            if (!t.empty()) out.push_back(t);
            token.clear();
        } else {
            token += ch;
        }
    }
    return out;
}

} // namespace

ProfileFileResult read_profile(std::istream& in, const std::string& name, bool keep_going) {
    ProfileFileResult result;
    bool have_alts = false;
    AlternativeSet alts;
    std::vector<std::pair<std::pair<int, int>, std::string>> body; // ((line, voter), text)

    std::string raw;
    int line_no = 0;
    bool saw_content = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (!saw_content && line.rfind("alternatives:", 0) == 0) {
            saw_content = true;
            std::istringstream fields(line.substr(13));
            std::vector<std::string> names;
            std::string field;
            while (fields >> field) names.push_back(field);
            if (names.empty()) fail(name, line_no, "empty alternatives header");
            try {
                alts = AlternativeSet(std::move(names));
            } catch (const Error& e) {
                fail(name, line_no, e.what());
            }
            have_alts = true;
            continue;
        }
        saw_content = true;

        size_t colon = line.find(':');
        if (colon == std::string::npos) {
            if (keep_going) {
                result.diagnostics.push_back({line_no, "missing ':' separator"});
                continue;
            }
            fail(name, line_no, "expected '<voter-id>: <ordering>'");
        }
        std::string id_text = strip(line.substr(0, colon));
        std::string body_text = strip(line.substr(colon + 1));
        int voter_id = 0;
        try {
            size_t used = 0;
            voter_id = std::stoi(id_text, &used);
            if (used != id_text.size() || voter_id < 1) throw std::invalid_argument(id_text);
        } catch (const std::exception&) {
            if (keep_going) {
                result.diagnostics.push_back({line_no, "invalid voter id '" + id_text + "'"});
                continue;
            }
            fail(name, line_no, "invalid voter id '" + id_text + "' (positive integer expected)");
        }
        body.emplace_back(std::make_pair(line_no, voter_id), body_text);
    }

    if (!have_alts) {
        // Infer the alternative set from the first parsable ordering.
        for (const auto& [where, text] : body) {
            auto names = tokens_in_order(text);
            if (names.empty()) continue;
            try {
                alts = AlternativeSet(names);
                have_alts = true;
                break;
            } catch (const Error& e) {
                if (!keep_going) fail(name, where.first, e.what());
                result.diagnostics.push_back({where.first, e.what()});
            }
        }
        if (!have_alts && !body.empty()) {
            fail(name, body.front().first.first, "cannot infer an alternative set");
        }
    }

    result.profile = Profile(alts);
    for (const auto& [where, text] : body) {
        auto [line, voter_id] = where;
        try {
            result.profile.add(voter_id, WeakOrdering::parse(text, alts));
        } catch (const Error& e) {
            if (keep_going) {
                result.diagnostics.push_back({line, e.what()});
                continue;
            }
            fail(name, line, e.what());
        }
    }
    return result;
}

ProfileFileResult load_profile_file(const std::string& path, bool keep_going) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, path + ": cannot open file");
    return read_profile(in, path, keep_going);
}

} // namespace majority
