#pragma once

#include <stdexcept>
#include <string>

namespace autoform {

// Machine-readable error codes. The CLI maps each category to an exit
// status: parse errors 2, domain errors 3, precondition errors 4.
enum class ErrorCode {
    SyntaxError,
    UndeclaredSymbol,
    NonIntegerExponent,
    InvalidFieldSpec,
    DivisionByZero,
    ZeroForm,
    FieldMismatch,
    ConstantMap,
    DegreeTooSmall,
    NotGeneralType,
    PoleAtInitialValue,
    Precondition,
};

const char* error_code_name(ErrorCode code);
int error_exit_code(ErrorCode code);

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

}  // namespace autoform
