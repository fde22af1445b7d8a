#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "majority/profile.hpp"

namespace majority {

// Profile file format, UTF-8 with LF or CRLF line ends:
//   # comment to end of line
//   alternatives: x y z          (optional header; inferred from the first
//                                 ordering when absent)
//   <voter-id>: <ordering>       (voter ids positive and unique;
//                                 ordering grammar "a>b=c")
struct ParseDiagnostic {
    int line = 0;
    std::string message;
};

struct ProfileFileResult {
    Profile profile;
    std::vector<ParseDiagnostic> diagnostics; // populated only in keep-going mode
};

// Throws Error(ParseError) with "<name>:<line>: <reason>" on the first bad
// line; with keep_going, bad lines become diagnostics and parsing continues.
ProfileFileResult read_profile(std::istream& in, const std::string& name,
                               bool keep_going = false);

ProfileFileResult load_profile_file(const std::string& path, bool keep_going = false);

} // namespace majority
