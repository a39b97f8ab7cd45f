#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rigidity {

enum class ErrorCode {
    NonConvergence,
    BadIndex,
    NotTraceFree,
    BadDimension,
    DimensionMismatch,
    BadParams,
    ODEStepFailure,
    BadProfile,
    DegenerateChart,
    StepTooLarge,
    ParseError,
    SchemaError,
    InvariantViolation,
    InvalidField,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type;
/// callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace rigidity
