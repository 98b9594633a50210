#ifndef FOCKU_ERROR_HPP
#define FOCKU_ERROR_HPP

#include <stdexcept>
#include <string>

namespace focku {

enum class ErrorCode {
    InvalidArgument,
    ContextMismatch,
    TruncationUnsound,      // tail guard failed before an operator application
    TruncationInsufficient, // Gaussian expansion did not converge at this truncation
    NotInSpace,
    OutsideExtremalFamily,
    DegenerateSpan,
    UndefinedAngle,
    NumericalInconsistency,
    BoundaryContamination,
};

const char* to_string(ErrorCode code) noexcept;

// True for failures of a mathematical precondition (as opposed to malformed input).
bool is_precondition_failure(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace focku

#endif
