#pragma once

#include <stdexcept>
#include <string>

namespace talkturn {

// Exit codes used by the CLI: 0 success, 1 validation, 2 engine/transport, 3 scoring.
enum class ExitCode : int { ok = 0, validation = 1, engine = 2, scoring = 3 };

// Bad input data, bad configuration, violated preconditions.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Engine transport failures, protocol violations, timeouts.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric contracts that cannot be evaluated (nothing to score, degenerate input).
struct ScoringError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace talkturn
