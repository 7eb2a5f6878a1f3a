#pragma once

#include <stdexcept>
#include <string>

namespace cfc {

// Error categories surfaced by the library. The CLI maps all of these to
// exit code 2 (bad input), distinct from exit code 1 (property violation).
enum class Errc {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    RingTooShort,
    MultiVertexIntersection,
    Disconnected,
    NotATreeOfRings,
    ZeroLength,
    EmptyComponent,
    DisconnectedComponent,
    NotATree,
    AllRemoved,
    TooLarge,
    BudgetExceeded,
    ParseError,
    SchemaError,
    ValidationError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace cfc
