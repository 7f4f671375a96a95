#pragma once

#include "prframe/error.hpp"

#include <ostream>

namespace prframe::cli {

/// Exit codes: 0 success, 1 a requested check failed, 2 usage, parse or
/// range errors.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

int exit_code_for(ErrorKind kind);

/// Entry point of the `prframe` tool. Reports go to `out` as JSON; errors go
/// to `err` as "error: <ErrorName>: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prframe::cli
