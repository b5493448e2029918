#include "elnet/error.hpp"

namespace elnet {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EmptyNetwork: return "EmptyNetwork";
    case ErrorKind::NonPositiveConductance: return "NonPositiveConductance";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InvalidKernel: return "InvalidKernel";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::HasSelfLoopMass: return "HasSelfLoopMass";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) {
        out += " at line " + std::to_string(*line);
    }
    out += ": ";
    out += message;
    return out;
}

} // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line) {}

} // namespace elnet
