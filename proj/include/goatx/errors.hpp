#pragma once

#include <stdexcept>
#include <string>

namespace goatx {

enum class ErrorCode {
    LexError,
    SchemaError,
    InvalidPattern,
    UnknownFunction,
    UnknownSeed,
    SideMismatch,
    MissingSignature,
    DimMismatch,
    DuplicatePatternId,
    EmptyInput,
    AllProducersFailed,
    EvaluatorFailed,
    DuplicatePointId,
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for all domain errors; `code()` identifies the
/// contract violation so tests can assert on it without string matching.
class GoatError : public std::runtime_error {
public:
    GoatError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace goatx
