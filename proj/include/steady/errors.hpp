#pragma once

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace steady {

enum class ErrorKind {
    NonFiniteInput,
    NoConvergence,
    NonPositiveInflow,
    NotMonotone,
    IncompatibleTraces,
    MassImbalance,
    TangencyDetected,
    MultiValuedPressure,
    PathDependence,
    CompatibilityViolated,
    InvalidConfig,
    UnsupportedCase,
    Io,
};

const char* to_string(ErrorKind kind);

/// Shortest round-trippable decimal for diagnostics.
inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Error raised by every solver stage. `value()` carries a diagnostic number
/// when one is meaningful (the compatibility value for CompatibilityViolated,
/// the last contraction ratio for NoConvergence).
class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& message,
                std::optional<double> value = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind), value_(value) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<double> value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    std::optional<double> value_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonPositiveInflow: return "NonPositiveInflow";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::IncompatibleTraces: return "IncompatibleTraces";
    case ErrorKind::MassImbalance: return "MassImbalance";
    case ErrorKind::TangencyDetected: return "TangencyDetected";
    case ErrorKind::MultiValuedPressure: return "MultiValuedPressure";
    case ErrorKind::PathDependence: return "PathDependence";
    case ErrorKind::CompatibilityViolated: return "CompatibilityViolated";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace steady
