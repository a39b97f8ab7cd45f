#include "rigidity/error.hpp"

namespace rigidity {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::NotTraceFree: return "NotTraceFree";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::ODEStepFailure: return "ODEStepFailure";
        case ErrorCode::BadProfile: return "BadProfile";
        case ErrorCode::DegenerateChart: return "DegenerateChart";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::InvalidField: return "InvalidField";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace rigidity
