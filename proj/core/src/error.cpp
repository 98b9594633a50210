#include "focku/error.hpp"

namespace focku {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::ContextMismatch: return "context-mismatch";
    case ErrorCode::TruncationUnsound: return "truncation-unsound";
    case ErrorCode::TruncationInsufficient: return "truncation-insufficient";
    case ErrorCode::NotInSpace: return "not-in-space";
    case ErrorCode::OutsideExtremalFamily: return "outside-extremal-family";
    case ErrorCode::DegenerateSpan: return "degenerate-span";
    case ErrorCode::UndefinedAngle: return "undefined-angle";
    case ErrorCode::NumericalInconsistency: return "numerical-inconsistency";
    case ErrorCode::BoundaryContamination: return "boundary-contamination";
    }
    return "unknown";
}

bool is_precondition_failure(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ContextMismatch:
        return false;
    default:
        return true;
    }
}

} // namespace focku
