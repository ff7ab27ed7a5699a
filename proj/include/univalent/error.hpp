#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace univalent {

enum class ErrorKind {
    // input errors
    InvalidArgument,
    InsufficientOrder,
    MismatchedBalls,
    // domain errors
    DivisorVanishesAtOrigin,
    InnerSeriesNotRooted,
    PointOutsideDisk,
    PointOnBoundary,
    UnboundedTail,
    CriticalPointAtOrigin,
    PoleInDisk,
    TailTooLarge,
    ProbeTooCloseToCurve,
    GateFailed,
    NonFiniteCoefficient,
    // internal
    InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Which bucket an error falls into; drives CLI exit codes.
enum class ErrorCategory { Input, Domain, Internal };

ErrorCategory category_of(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    ErrorCategory category() const noexcept { return category_of(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace univalent
