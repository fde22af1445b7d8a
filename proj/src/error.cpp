#include "majority/error.hpp"

namespace majority {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MalformedOrdering: return "MalformedOrdering";
    case ErrorCode::UnknownAlternative: return "UnknownAlternative";
    case ErrorCode::DuplicateAlternative: return "DuplicateAlternative";
    case ErrorCode::MissingAlternative: return "MissingAlternative";
    case ErrorCode::DuplicateVoter: return "DuplicateVoter";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::NotInAlternativeSet: return "NotInAlternativeSet";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::NotATripleOrdering: return "NotATripleOrdering";
    case ErrorCode::StaleRewrite: return "StaleRewrite";
    case ErrorCode::NotSteady: return "NotSteady";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

} // namespace majority
