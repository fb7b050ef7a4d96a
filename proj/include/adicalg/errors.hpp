#pragma once

#include <stdexcept>
#include <string>

namespace adicalg {

// Every failure mode surfaced by the library carries one of these tags so the
// CLI can report it by name and tests can match on it.
enum class ErrorKind {
    RingMismatch,
    MissingUniformizer,
    IllDefined,
    NotAGenerator,
    NotAdmissible,
    EmptyOverlap,
    NotOpenLocally,
    ExtensionBoundExceeded,
    NotIntegral,
    TorsionInput,
    NotContainingIdealOfDefinition,
    NoFiniteOrder,
    RelationViolated,
    NotContinuous,
    IncompleteNormalization,
    SyntaxError,
    UnboundName,
    Domain,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace adicalg
