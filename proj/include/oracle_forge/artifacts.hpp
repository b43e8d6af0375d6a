#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oracle_forge/doc_model.hpp"
#include "oracle_forge/llm_gateway.hpp"
#include "oracle_forge/partitioner.hpp"

// Stage files passed between independently invoked subcommands. Each is a
// JSON object carrying `schemaVersion`.
namespace oracle_forge {

inline constexpr int kSchemaVersion = 1;

struct UnitSet {
    ClassDoc doc;
    bool wholeClass = false;
    std::vector<PartitionUnit> units;
};

/// Units are stored by signature and rebuilt from the embedded class document.
std::string serializeUnits(const UnitSet& set);
/// Throws InvalidArtifact.
UnitSet parseUnits(std::string_view json);

struct UnitExchange {
    std::string unitId;
    LlmExchange exchange;
};

std::string serializeExchanges(std::string_view fqcn, const std::vector<UnitExchange>& exchanges);
/// Throws InvalidArtifact.
std::vector<UnitExchange> parseExchanges(std::string_view json);

/// Throws InvalidArtifact when `version` is missing or unsupported.
void requireSchemaVersion(int version, std::string_view what);

}  // namespace oracle_forge
