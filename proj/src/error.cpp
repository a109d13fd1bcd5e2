#include "pbwkit/error.hpp"

namespace pbwkit {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ComplementNotSubspace: return "COMPLEMENT_NOT_SUBSPACE";
    case ErrorCode::HomogenizeZero: return "HOMOGENIZE_ZERO";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::DomainMismatch: return "DOMAIN_MISMATCH";
    case ErrorCode::InvalidPresentation: return "INVALID_PRESENTATION";
    case ErrorCode::LiftNotMinimal: return "LIFT_NOT_MINIMAL";
    case ErrorCode::NotMinimalRelations: return "NOT_MINIMAL_RELATIONS";
    case ErrorCode::NotPure: return "NOT_PURE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
    case ErrorCode::ResourceLimit: return "RESOURCE_LIMIT";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    }
    return "UNKNOWN";
}

int error_exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return 11;
    case ErrorCode::ValidationError: return 12;
    case ErrorCode::InvalidPresentation: return 13;
    case ErrorCode::ResourceLimit: return 14;
    case ErrorCode::NotMinimalRelations: return 15;
    case ErrorCode::NotPure: return 16;
    case ErrorCode::LiftNotMinimal: return 17;
    default: return 19;
    }
}

ParseError::ParseError(int line, int col, const std::string& msg)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
      line_(line), col_(col), detail_(msg) {}

} // namespace pbwkit
