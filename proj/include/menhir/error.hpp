#pragma once

#include <stdexcept>
#include <string>

namespace menhir {

enum class ErrorCode {
    TagMismatch,
    SingularElement,
    UnsupportedDimension,
    Superluminal,
    Domain,
    Parse,
    ConstructionFailure,
    ConstructionDegenerate,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported as a menhir::Error carrying a code,
/// so callers (the CLI in particular) can map failures without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace menhir
