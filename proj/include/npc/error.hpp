#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace npc {

enum class ErrorKind {
    KindMismatch,
    NotFlag,
    UnknownVertex,
    ParseError,
    SchemaVersionError,
    Disconnected,
    CapExceeded,
    NotMetricTriangle,
    FillFailed,
    BoundViolated,
    NotC16,
    NotSimplicial,
    InvalidSpec,
    NotTriangulated,
    Unclassifiable,
    NotFillable,
    DoesNotGoThrough,
    EndsInside,
    NoPath,
    NonExhaustiveProbe,
    ConfigError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All recoverable failures in the toolkit are reported through this type.
// Verdict-style failures (a check that does not hold) are CheckReports, not errors.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    // Message without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace npc
