#include "umbral/errors.hpp"

namespace umbral {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidFormat: return "InvalidFormat";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ValuationMismatch: return "ValuationMismatch";
    case ErrorKind::CompositionRequiresDelta: return "CompositionRequiresDelta";
    case ErrorKind::NotDeltaSeries: return "NotDeltaSeries";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::IndexOutOfTriangle: return "IndexOutOfTriangle";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IndexUnderflow: return "IndexUnderflow";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::SingularParams: return "SingularParams";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    }
    return "Unknown";
}

MathError::MathError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

}  // namespace umbral
