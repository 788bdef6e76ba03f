#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

/// Machine-readable failure categories shared by every module.
enum class ErrorKind {
    DivisionByZero,
    InvalidFormat,
    NotInvertible,
    ValuationMismatch,
    CompositionRequiresDelta,
    NotDeltaSeries,
    InsufficientPrecision,
    IndexOutOfTriangle,
    IndexOutOfRange,
    IndexUnderflow,
    ZeroScale,
    SingularParams,
    OutOfDomain,
};

std::string_view to_string(ErrorKind kind) noexcept;

class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace umbral
