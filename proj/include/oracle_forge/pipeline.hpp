#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle_forge/eval_harness.hpp"
#include "oracle_forge/llm_gateway.hpp"
#include "oracle_forge/prompt_engine.hpp"

namespace oracle_forge {

struct PipelineConfig {
    std::vector<std::filesystem::path> inputDocs;  // files, or directories of .java/.json files
    std::filesystem::path cassetteDir = "cassettes";
    std::filesystem::path corpusDir = "out";  // root of every stage artifact
    GatewayMode mode = GatewayMode::Replay;
    std::string modelId = "gpt-4";
    double temperature = kDefaultTemperature;
    Ablation ablation;
    bool wholeClass = false;  // prompt with one pseudo-unit per class instead of partitioning
    bool validate = true;     // skipped silently when false
    std::optional<std::string> toolchain;
    std::optional<std::filesystem::path> fewShotBank;
    std::optional<std::filesystem::path> promptTemplate;
    std::optional<std::filesystem::path> catalogDir;
    std::optional<std::filesystem::path> annotationsDir;
    std::optional<std::string> runner;
    std::optional<std::filesystem::path> fixture;
    std::optional<std::filesystem::path> holder;  // oracle holder the fixture invokes
    int runnerTimeoutSeconds = 60;
    int jobs = 1;
};

/// Parses an `oracle-forge.toml` style document of `key = value` lines whose
/// keys mirror PipelineConfig field names. Relative paths resolve against
/// `baseDir`. Throws InvalidConfig.
PipelineConfig parseConfig(std::string_view text, const std::filesystem::path& baseDir = {});
PipelineConfig loadConfig(const std::filesystem::path& file);

/// Throws InvalidConfig.
void validate(const PipelineConfig& cfg);

/// Input files in argument order, directories expanded to their sorted
/// .java and .json entries.
std::vector<std::filesystem::path> expandInputs(const std::vector<std::filesystem::path>& inputs);

struct StageError {
    std::string stage;
    std::string classFqcn;  // or the input path when the class is unknown
    std::string code;
    std::string message;
};

struct ClassRun {
    std::filesystem::path source;
    std::string fqcn;
    std::size_t methods = 0;
    std::size_t units = 0;
    std::size_t oracles = 0;
    std::vector<StageError> errors;
    std::vector<std::string> warnings;
};

struct PipelineResult {
    std::vector<ClassRun> classes;
    std::vector<StageError> errors;  // every class error plus run-level ones
    std::optional<EvalReport> report;
    int exitCode = 0;
};

struct PipelineDeps {
    std::shared_ptr<Transport> transport;  // built from the environment when null and needed
    Clock clock = defaultClock();
    LlmGateway::Sleeper sleeper;
};

/// ingest, partition, prompt, generate, extract, validate and eval, each
/// writing its artifact under corpusDir before the next begins. A failing
/// class does not stop the others; exitCode is 1 when any error occurred.
PipelineResult runPipeline(const PipelineConfig& cfg, PipelineDeps deps = {});

/// File stem used for a class's artifacts.
std::string artifactStem(std::string_view fqcn);

}  // namespace oracle_forge
