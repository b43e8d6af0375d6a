#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace oracle_forge {

/// Base of every error raised by the pipeline. `code()` is a stable
/// machine-readable name used in CLI diagnostics and aggregated reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct SourcePosition {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
};

class MalformedDoc : public Error {
public:
    MalformedDoc(const std::string& message, std::optional<SourcePosition> pos = std::nullopt)
        : Error("MalformedDoc", pos ? message + " at " + std::to_string(pos->line) + ":" +
                                          std::to_string(pos->column)
                                    : message),
          position_(pos) {}

    [[nodiscard]] const std::optional<SourcePosition>& position() const noexcept { return position_; }

private:
    std::optional<SourcePosition> position_;
};

#define ORACLE_FORGE_ERROR(Name)                                             \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

ORACLE_FORGE_ERROR(DuplicateSignature);
ORACLE_FORGE_ERROR(UnresolvableFormat);
ORACLE_FORGE_ERROR(AmbiguousReference);
ORACLE_FORGE_ERROR(InvalidConfig);
ORACLE_FORGE_ERROR(MissingFewShot);
ORACLE_FORGE_ERROR(InvalidRequest);
ORACLE_FORGE_ERROR(CassetteMiss);
ORACLE_FORGE_ERROR(AuthError);
ORACLE_FORGE_ERROR(NoOraclesFound);
ORACLE_FORGE_ERROR(PreconditionViolation);
ORACLE_FORGE_ERROR(ToolchainUnavailable);
ORACLE_FORGE_ERROR(ToolchainCrashed);
ORACLE_FORGE_ERROR(DanglingAnnotation);
ORACLE_FORGE_ERROR(InvalidArtifact);
ORACLE_FORGE_ERROR(CompileFailure);
ORACLE_FORGE_ERROR(HarnessCrash);
ORACLE_FORGE_ERROR(ProtocolError);

#undef ORACLE_FORGE_ERROR

class TransportError : public Error {
public:
    TransportError(const std::string& message, int attempts)
        : Error("TransportError", message + " (after " + std::to_string(attempts) + " attempt" +
                                      (attempts == 1 ? "" : "s") + ")"),
          attempts_(attempts) {}

    [[nodiscard]] int attempts() const noexcept { return attempts_; }

private:
    int attempts_;
};

}  // namespace oracle_forge
