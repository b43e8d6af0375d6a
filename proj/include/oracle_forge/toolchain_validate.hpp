#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oracle_forge/oracle_extract.hpp"

namespace oracle_forge {

enum class ErrorClass { None, TypeError, SyntaxError, MissingHelper, NameCollision, Other };

std::string_view toString(ErrorClass c);

struct Diagnostic {
    std::size_t line = 0;    // 1-based line in the holder passed to compileCheck
    std::size_t column = 0;  // 1-based; 0 when the compiler printed no caret
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct CompileOutcome {
    std::string oracleId;
    CompileStatus status = CompileStatus::Compilable;
    std::vector<Diagnostic> diagnostics;
    ErrorClass errorClass = ErrorClass::None;
    std::string toolchainVersion;

    friend bool operator==(const CompileOutcome&, const CompileOutcome&) = default;
};

/// Outcome id used for diagnostics that fall outside every oracle span.
inline constexpr std::string_view kPreambleId = "<preamble>";

/// `java.util.List` -> `OracleHolder_java_util_List`.
std::string holderClassName(std::string_view fqcn);

/// One holder source with every record as a method, each preceded by a
/// `// @oracle-id <id>` marker line. Throws PreconditionViolation when two
/// records share a name and parameter types.
std::string wrapForCompile(const std::vector<OracleRecord>& records, std::string_view fqcn);

/// A compiler error as printed in the `file:line: error: message` format,
/// with its caret column and any indented detail lines (`symbol: ...`).
struct RawDiagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
    std::vector<std::string> details;
};

/// Parses compiler output; warnings and notes are skipped.
std::vector<RawDiagnostic> parseDiagnostics(std::string_view output);

ErrorClass classifyDiagnostic(const RawDiagnostic& diagnostic);

struct CompileRun {
    int exitCode = 0;
    std::string output;  // combined diagnostic output
};

class Toolchain {
public:
    virtual ~Toolchain() = default;
    virtual std::string version() = 0;
    /// Compiles one source file named `fileName`. Throws ToolchainCrashed.
    virtual CompileRun compile(const std::string& fileName, std::string_view source) = 0;
};

/// Runs an external `javac` executable in a scratch directory.
class JavacToolchain final : public Toolchain {
public:
    explicit JavacToolchain(std::string executable);

    /// Resolves the executable from the flag value, then ORACLE_FORGE_JAVAC,
    /// then PATH. Throws ToolchainUnavailable.
    static std::unique_ptr<JavacToolchain> locate(const std::string& flagValue = {});

    std::string version() override;
    CompileRun compile(const std::string& fileName, std::string_view source) override;

private:
    std::string executable_;
    std::string version_;
};

/// Offline stand-in that emits canned diagnostics for every source line
/// containing a trigger substring, in the javac output format.
class StubToolchain final : public Toolchain {
public:
    struct Rule {
        std::string trigger;
        std::string message;
        std::vector<std::string> details;
        std::string caretAt;  // caret under this substring; line start when empty or absent
    };

    explicit StubToolchain(std::vector<Rule> rules, std::string versionString = "stub-javac 1.0");

    std::string version() override { return version_; }
    CompileRun compile(const std::string& fileName, std::string_view source) override;

    [[nodiscard]] int invocations() const { return invocations_; }

private:
    std::vector<Rule> rules_;
    std::string version_;
    int invocations_ = 0;
};

/// Compiles the holder and attributes each error to the oracle whose span
/// contains it. Failed oracles are removed and the rest recompiled until a
/// clean pass, so errors hidden behind earlier ones are still reported.
/// One outcome per oracle in holder order, plus a preamble outcome when
/// needed. Throws ToolchainCrashed.
std::vector<CompileOutcome> compileCheck(std::string_view holderSource, Toolchain& toolchain);

/// Copies compile statuses onto records by oracle id; ids without an
/// outcome stay unchecked.
void applyOutcomes(std::vector<OracleRecord>& records, const std::vector<CompileOutcome>& outcomes);

std::string serializeOutcomes(std::string_view fqcn, const std::vector<CompileOutcome>& outcomes);
/// Throws InvalidArtifact.
std::vector<CompileOutcome> parseOutcomes(std::string_view json);

}  // namespace oracle_forge
