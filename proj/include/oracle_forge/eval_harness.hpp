#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle_forge/oracle_extract.hpp"
#include "oracle_forge/toolchain_validate.hpp"

namespace oracle_forge {

enum class PropertyKind { Assertion, Exception };

std::string_view toString(PropertyKind k);

struct PropertyCatalogEntry {
    std::string id;
    std::string targetClass;
    std::string targetMethod;
    PropertyKind kind = PropertyKind::Assertion;
    std::string description;
    std::optional<std::string> exceptionType;

    friend bool operator==(const PropertyCatalogEntry&, const PropertyCatalogEntry&) = default;
};

struct AnnotationEntry {
    std::string oracleId;
    std::vector<std::string> matchedPropertyIds;
    bool correct = false;
    std::string note;

    friend bool operator==(const AnnotationEntry&, const AnnotationEntry&) = default;
};

/// An exact count ratio. Percentages are derived, never stored.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 0;

    /// Percentage to one decimal, rounded half up, e.g. "97.7"; `zeroDenominator`
    /// when den == 0.
    [[nodiscard]] std::string percent(std::string_view zeroDenominator = "n/a") const;
    /// Tenths of a percent, rounded half up; nullopt when den == 0.
    [[nodiscard]] std::optional<std::uint64_t> permille() const;
};

struct CompilabilityRow {
    std::string className;
    std::uint64_t nMethods = 0;
    std::uint64_t nOracles = 0;
    std::uint64_t nCompilable = 0;
    std::uint64_t nCorrect = 0;

    friend bool operator==(const CompilabilityRow&, const CompilabilityRow&) = default;

    [[nodiscard]] Ratio compilable() const { return {nCompilable, nOracles}; }
    [[nodiscard]] Ratio correct() const { return {nCorrect, nOracles}; }
};

struct CoverageRow {
    std::string className;
    std::uint64_t nDocumented = 0;
    std::uint64_t nGenerated = 0;
    std::uint64_t nChecked = 0;

    friend bool operator==(const CoverageRow&, const CoverageRow&) = default;

    [[nodiscard]] Ratio precision() const { return {nChecked, nGenerated}; }
    [[nodiscard]] Ratio recall() const { return {nGenerated, nDocumented}; }
};

/// Throws PreconditionViolation when a count exceeds its parent count.
CompilabilityRow makeCompilabilityRow(std::string className, std::uint64_t nMethods, std::uint64_t nOracles,
                                      std::uint64_t nCompilable, std::uint64_t nCorrect);
CoverageRow makeCoverageRow(std::string className, std::uint64_t nDocumented, std::uint64_t nGenerated,
                            std::uint64_t nChecked);

CompilabilityRow totalOf(const std::vector<CompilabilityRow>& rows);
CoverageRow totalOf(const std::vector<CoverageRow>& rows);

struct EvalReport {
    std::vector<CompilabilityRow> compilabilityRows;
    std::vector<CoverageRow> assertionRows;
    std::vector<CoverageRow> exceptionRows;

    friend bool operator==(const EvalReport&, const EvalReport&) = default;

    [[nodiscard]] CompilabilityRow compilabilityTotal() const { return totalOf(compilabilityRows); }
    [[nodiscard]] CoverageRow assertionTotal() const { return totalOf(assertionRows); }
    [[nodiscard]] CoverageRow exceptionTotal() const { return totalOf(exceptionRows); }
};

/// One row per class in order of first appearance (methodCounts first, then
/// the corpus). A record's status comes from its outcome when present.
/// Throws DanglingAnnotation.
std::vector<CompilabilityRow> computeCompilability(const std::vector<OracleRecord>& corpus,
                                                   const std::vector<CompileOutcome>& outcomes,
                                                   const std::vector<AnnotationEntry>& annotations,
                                                   const std::map<std::string, std::uint64_t>& methodCounts = {},
                                                   const std::vector<std::string>& classOrder = {});

/// One row per catalog class (catalog order) for entries of `kind`.
/// Throws DanglingAnnotation.
std::vector<CoverageRow> computeCoverage(const std::vector<PropertyCatalogEntry>& catalog,
                                         const std::vector<OracleRecord>& corpus,
                                         const std::vector<AnnotationEntry>& annotations, PropertyKind kind);

enum class ReportFormat { Table, Json, Markdown };

/// Throws InvalidConfig.
ReportFormat parseReportFormat(std::string_view s);

std::string renderReport(const EvalReport& report, ReportFormat format);

/// Inverse of the json rendering. Throws InvalidArtifact.
EvalReport parseReportJson(std::string_view json);

/// Throws InvalidArtifact.
std::vector<PropertyCatalogEntry> parseCatalog(std::string_view json);
std::string serializeCatalog(const std::vector<PropertyCatalogEntry>& catalog);

/// Throws InvalidArtifact.
std::vector<AnnotationEntry> parseAnnotations(std::string_view json);
std::string serializeAnnotations(const std::vector<AnnotationEntry>& annotations);

}  // namespace oracle_forge
