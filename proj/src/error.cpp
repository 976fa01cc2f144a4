#include "npc/error.hpp"

namespace npc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::KindMismatch: return "KindMismatch";
        case ErrorKind::NotFlag: return "NotFlag";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaVersionError: return "SchemaVersionError";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotMetricTriangle: return "NotMetricTriangle";
        case ErrorKind::FillFailed: return "FillFailed";
        case ErrorKind::BoundViolated: return "BoundViolated";
        case ErrorKind::NotC16: return "NotC16";
        case ErrorKind::NotSimplicial: return "NotSimplicial";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::NotTriangulated: return "NotTriangulated";
        case ErrorKind::Unclassifiable: return "Unclassifiable";
        case ErrorKind::NotFillable: return "NotFillable";
        case ErrorKind::DoesNotGoThrough: return "DoesNotGoThrough";
        case ErrorKind::EndsInside: return "EndsInside";
        case ErrorKind::NoPath: return "NoPath";
        case ErrorKind::NonExhaustiveProbe: return "NonExhaustiveProbe";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

}  // namespace npc
