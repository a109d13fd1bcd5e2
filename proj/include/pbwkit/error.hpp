#pragma once

#include <stdexcept>
#include <string>

namespace pbwkit {

enum class ErrorCode {
    ComplementNotSubspace,
    HomogenizeZero,
    NotHomogeneous,
    DomainMismatch,
    InvalidPresentation,
    LiftNotMinimal,
    NotMinimalRelations,
    NotPure,
    ParseError,
    ValidationError,
    ResourceLimit,
    FieldMismatch,
};

const char* error_name(ErrorCode code);

// Process exit status used by the command line tool for each error kind.
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg);
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& detail() const { return detail_; }

private:
    int line_;
    int col_;
    std::string detail_;
};

} // namespace pbwkit
