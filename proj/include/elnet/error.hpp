#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace elnet {

enum class ErrorKind {
    EmptyNetwork,
    NonPositiveConductance,
    SelfLoop,
    Disconnected,
    UnknownVertex,
    SameVertex,
    SingularSystem,
    InvalidKernel,
    NotReversible,
    NotIrreducible,
    HasSelfLoopMass,
    CapExceeded,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `line()` is set for errors that can be
/// traced back to a line of an edge-list file.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> line = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
};

} // namespace elnet
