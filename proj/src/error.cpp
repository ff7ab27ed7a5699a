#include "univalent/error.hpp"

namespace univalent {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InsufficientOrder: return "InsufficientOrder";
        case ErrorKind::MismatchedBalls: return "MismatchedBalls";
        case ErrorKind::DivisorVanishesAtOrigin: return "DivisorVanishesAtOrigin";
        case ErrorKind::InnerSeriesNotRooted: return "InnerSeriesNotRooted";
        case ErrorKind::PointOutsideDisk: return "PointOutsideDisk";
        case ErrorKind::PointOnBoundary: return "PointOnBoundary";
        case ErrorKind::UnboundedTail: return "UnboundedTail";
        case ErrorKind::CriticalPointAtOrigin: return "CriticalPointAtOrigin";
        case ErrorKind::PoleInDisk: return "PoleInDisk";
        case ErrorKind::TailTooLarge: return "TailTooLarge";
        case ErrorKind::ProbeTooCloseToCurve: return "ProbeTooCloseToCurve";
        case ErrorKind::GateFailed: return "GateFailed";
        case ErrorKind::NonFiniteCoefficient: return "NonFiniteCoefficient";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::InsufficientOrder:
        case ErrorKind::MismatchedBalls:
            return ErrorCategory::Input;
        case ErrorKind::InvariantViolation:
            return ErrorCategory::Internal;
        default:
            return ErrorCategory::Domain;
    }
}

}  // namespace univalent
