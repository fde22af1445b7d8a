#pragma once

#include <stdexcept>
#include <string>

namespace majority {

enum class ErrorCode {
    EmptyInput,
    MalformedOrdering,
    UnknownAlternative,
    DuplicateAlternative,
    MissingAlternative,
    DuplicateVoter,
    InvalidOrdering,
    NotInAlternativeSet,
    DegenerateTriple,
    NotATripleOrdering,
    StaleRewrite,
    NotSteady,
    BudgetExceeded,
    SearchBoundExceeded,
    BoundExceeded,
    ParseError,
    UsageError,
};

const char* error_code_name(ErrorCode code);

// Single exception type for all domain and parse failures; `code` lets
// callers (and tests) dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace majority
