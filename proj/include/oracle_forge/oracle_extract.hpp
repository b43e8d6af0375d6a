#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle_forge/llm_gateway.hpp"
#include "oracle_forge/partitioner.hpp"

namespace oracle_forge {

enum class OracleKind { Assertion, Exception, Hybrid };
enum class CompileStatus { Unchecked, Compilable, NonCompilable };
enum class Correctness { Unjudged, Correct, Incorrect };

std::string_view toString(OracleKind k);
std::string_view toString(CompileStatus s);
std::string_view toString(Correctness c);

struct ParamDecl {
    std::string typeName;
    std::string paramName;

    friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

/// One boolean-returning oracle method. `bodySource` is the declaration as
/// generated (header and body, without the doc comment); `name` is
/// authoritative and may differ from the declared name after dedupe.
struct OracleRecord {
    std::string id;
    std::string name;
    std::vector<ParamDecl> paramDecls;
    std::string returnType = "boolean";
    std::string bodySource;
    std::string docComment;
    OracleKind kind = OracleKind::Assertion;
    std::string targetClass;
    std::vector<std::string> targetMethods;
    std::string propertyLabel = "unlabeled";
    CompileStatus compileStatus = CompileStatus::Unchecked;
    Correctness correctnessStatus = Correctness::Unjudged;
    std::vector<std::string> notes;

    friend bool operator==(const OracleRecord&, const OracleRecord&) = default;

    /// Erased parameter types joined by commas; the overload identity.
    [[nodiscard]] std::string paramSignature() const;
};

struct CodeBlock {
    std::string text;
    std::size_t firstLine = 0;  // 0-based line of the block's first code line in the response
    std::optional<std::string> heading;  // nearest prose heading before the block
    bool fenced = true;
};

/// Triple-backtick fenced blocks; when none exist, runs of lines indented
/// by at least four spaces or a tab.
std::vector<CodeBlock> findCodeBlocks(std::string_view response);

/// Throws NoOraclesFound.
std::vector<OracleRecord> extractOracles(const LlmExchange& exchange, const PartitionUnit& unit);

OracleKind classifyKind(const OracleRecord& record, const PartitionUnit& unit);

/// Renames later (name, parameter types) collisions to name_2, name_3, ...
/// in encounter order. Bodies, parameters and ids are untouched.
std::vector<OracleRecord> dedupeNames(std::vector<OracleRecord> records);

/// The declaration text with the declared method name replaced by `name`.
std::string renderMethod(const OracleRecord& record);

/// Type names referenced by the body that are neither JDK types nor type
/// variables in scope.
std::vector<std::string> unknownTypeReferences(const OracleRecord& record);

std::string serializeCorpus(const std::vector<OracleRecord>& records);
/// Throws InvalidArtifact.
std::vector<OracleRecord> parseCorpus(std::string_view json);

}  // namespace oracle_forge
