#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oracle_forge/partitioner.hpp"

namespace oracle_forge {

enum class SectionTag { Context, Examples, Instruction };

std::string_view toString(SectionTag tag);

struct Ablation {
    bool noAssistant = false;
    bool noFewShot = false;
    bool noChainOfThought = false;

    friend bool operator==(const Ablation&, const Ablation&) = default;

    /// Comma-separated flag names, e.g. "noAssistant,noFewShot". Throws InvalidConfig.
    static Ablation parse(std::string_view flags);
    [[nodiscard]] std::string str() const;
};

struct FewShotExample {
    std::string description;
    std::string oracle;

    friend bool operator==(const FewShotExample&, const FewShotExample&) = default;
};

struct PromptConfig {
    std::string classTypeName;
    Ablation ablation;
    std::vector<FewShotExample> fewShotBank;
    /// Template text with {{class_type}}, {{examples}} and
    /// {{method_description}} placeholders; the shipped asset when unset.
    std::optional<std::string> templateText;
};

struct PromptDocument {
    std::vector<std::pair<SectionTag, std::string>> sections;
    std::string renderedText;
};

/// Throws MissingFewShot, InvalidConfig.
PromptDocument renderPrompt(const PartitionUnit& unit, const PromptConfig& cfg);

std::vector<FewShotExample> defaultFewShotBank();

/// Parses a few-shot bank file: a JSON array of {description, oracle}.
std::vector<FewShotExample> parseFewShotBank(std::string_view json);

std::string_view defaultPromptTemplate();

/// Defaults for a class: its fqcn as the class type and the shipped bank.
PromptConfig defaultPromptConfig(const std::string& classFqcn);

}  // namespace oracle_forge
