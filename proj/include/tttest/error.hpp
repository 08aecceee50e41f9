#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttt {

enum class ErrorCode {
    EmptyInput,
    TooFewObservations,
    NegativeValue,
    NonFiniteValue,
    IndexOutOfRange,
    ZeroMean,
    KindMismatch,
    InvalidR,
    LengthMismatch,
    SchemeMismatch,
    InvalidParameter,
    ParameterOutOfDomain,
    DomainError,
    NonConvergence,
    ParseError,
    IoError,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can tell data problems from usage problems.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ttt
