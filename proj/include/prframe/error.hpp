#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prframe {

enum class ErrorKind {
    NotAFrame,
    CapExceeded,
    OutOfRange,
    RetriesExhausted,
    PatternViolation,
    RearrangeFailure,
    NotABasis,
    NotPRSubspace,
    SupportTooLarge,
    ParseError,
};

constexpr std::string_view error_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::RearrangeFailure: return "RearrangeFailure";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::NotPRSubspace: return "NotPRSubspace";
    case ErrorKind::SupportTooLarge: return "SupportTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Domain error raised by the toolkit. `kind()` is stable and is what the CLI
/// reports on standard error.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace prframe
