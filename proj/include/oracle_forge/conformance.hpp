#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

// Client side of the conformance runner: fixture files, the runner command
// line and its line-delimited JSON result protocol.
namespace oracle_forge {

enum class ConformanceOutcome { Pass, Fail, Error };

std::string_view toString(ConformanceOutcome o);

struct Invocation {
    std::string oracleName;
    std::vector<std::string> argExpressions;
    ConformanceOutcome expected = ConformanceOutcome::Pass;  // pass or fail only

    friend bool operator==(const Invocation&, const Invocation&) = default;
};

struct FixtureSpec {
    std::vector<std::string> subjectClasses;  // relative to the fixture file's directory
    std::vector<Invocation> invocations;

    friend bool operator==(const FixtureSpec&, const FixtureSpec&) = default;
};

struct ConformanceResult {
    std::string oracleName;
    ConformanceOutcome outcome = ConformanceOutcome::Pass;
    std::string message;

    friend bool operator==(const ConformanceResult&, const ConformanceResult&) = default;
};

/// Throws InvalidArtifact.
FixtureSpec parseFixture(std::string_view json);
std::string serializeFixture(const FixtureSpec& fixture);

/// Every invoked oracle must be declared in the holder with matching arity.
/// Throws PreconditionViolation.
void validateFixture(const FixtureSpec& fixture, std::string_view holderSource);

/// Parses runner standard output: exactly one JSON object per invocation,
/// in fixture order. Throws ProtocolError.
std::vector<ConformanceResult> parseRunnerOutput(std::string_view output, const FixtureSpec& fixture);

struct RunnerSettings {
    std::string executable;
    std::chrono::milliseconds timeout = std::chrono::seconds(60);
};

struct ConformanceReport {
    std::vector<ConformanceResult> results;
    std::vector<bool> matchesExpected;
    int runnerExitCode = 0;

    [[nodiscard]] bool allMatch() const;
};

/// Runs `runner <holder.java> <fixture.json> <subject sources...>` and
/// checks its exit status against the observed matches (0 when all match,
/// 1 otherwise). Throws CompileFailure, HarnessCrash, ProtocolError,
/// PreconditionViolation, ToolchainUnavailable.
ConformanceReport runConformance(const std::filesystem::path& holder, const std::filesystem::path& fixtureFile,
                                 const RunnerSettings& settings);

/// One `ok|MISMATCH oracle(args) expected x, got y: message` line per result.
std::string renderConformanceReport(const ConformanceReport& report, const FixtureSpec& fixture);

}  // namespace oracle_forge
