#ifndef FAIRHOUSE_ERRORS_HPP
#define FAIRHOUSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fairhouse {

// Every failure the library can signal. Codes group into four categories
// (parse, invalid input, size guard, verification) which the C API and the
// CLI exit codes are derived from.
enum class ErrorCode {
    ParseError,
    InvalidArgument,
    NonRectangularMatrix,
    FewerHousesThanAgents,
    NegativeUtility,
    Overflow,
    IndexOutOfRange,
    NotAnInjection,
    PartialNotWithinSet,
    InvalidBiclique,
    InfeasibleSelection,
    NotAReducedInstance,
    InvalidOverride,
    NotAnExactCover,
    MalformedQ,
    PreconditionViolated,
    InstanceTooLargeForExactSolve,
    TooLarge,
    VerificationFailed,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace fairhouse

#endif
