#include <gtest/gtest.h>

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/pipeline.hpp"
#include "support.hpp"

using namespace oracle_forge;
namespace fs = std::filesystem;

namespace {

class CountingTransport : public Transport {
public:
    std::string send(const LlmRequest&) override {
        ++calls;
        throw TransportError("network is off limits", 1);
    }
    int calls = 0;
};

PipelineConfig replayConfig(const fs::path& out) {
    PipelineConfig cfg;
    cfg.inputDocs = {testsupport::dataDir() / "docs"};
    cfg.cassetteDir = testsupport::dataDir() / "cassettes";
    cfg.corpusDir = out;
    cfg.catalogDir = testsupport::dataDir() / "catalog";
    cfg.annotationsDir = testsupport::dataDir() / "annotations";
    cfg.validate = false;
    return cfg;
}

PipelineDeps offlineDeps(std::shared_ptr<Transport> transport = std::make_shared<CountingTransport>()) {
    PipelineDeps deps;
    deps.transport = std::move(transport);
    deps.clock = fixedClock(parseTimestamp("2024-06-01T00:00:00Z"));
    deps.sleeper = [](std::chrono::milliseconds) {};
    return deps;
}

}  // namespace

TEST(Pipeline, ReplayIsByteIdenticalAcrossRuns) {
    testsupport::TempDir a, b;
    auto transport = std::make_shared<CountingTransport>();
    const auto ra = runPipeline(replayConfig(a.path()), offlineDeps(transport));
    const auto rb = runPipeline(replayConfig(b.path()), offlineDeps(transport));
    EXPECT_EQ(ra.exitCode, 0);
    EXPECT_EQ(rb.exitCode, 0);
    EXPECT_EQ(transport->calls, 0);
    const auto ta = testsupport::snapshotTree(a.path());
    const auto tb = testsupport::snapshotTree(b.path());
    EXPECT_EQ(ta, tb);
    for (const char* f : {"report.md", "report.json", "run.json", "corpus/java.lang.Object.json",
                          "exchanges/java.util.Set.json", "units/java.util.List.json"}) {
        EXPECT_TRUE(ta.count(f)) << f;
    }
    ASSERT_TRUE(ra.report.has_value());
    EXPECT_EQ(ra.report->compilabilityRows.size(), 5u);
    EXPECT_EQ(ra.report->compilabilityTotal().nOracles, 52u);
}

TEST(Pipeline, ArtifactsCarrySchemaVersion) {
    testsupport::TempDir out;
    ASSERT_EQ(runPipeline(replayConfig(out.path()), offlineDeps()).exitCode, 0);
    for (const auto& [rel, content] : testsupport::snapshotTree(out.path())) {
        if (fs::path(rel).extension() != ".json") continue;
        const auto j = nlohmann::json::parse(content);
        // Corpus files are bare record arrays and docs use the fixed
        // interchange keys, so neither carries a version.
        if (rel.rfind("corpus/", 0) == 0) {
            EXPECT_TRUE(j.is_array()) << rel;
            continue;
        }
        if (rel.rfind("docs/", 0) == 0) {
            EXPECT_FALSE(j.contains("schemaVersion")) << rel;
            continue;
        }
        ASSERT_TRUE(j.is_object()) << rel;
        EXPECT_EQ(j.value("schemaVersion", 0), 1) << rel;
    }
    const auto manifest = nlohmann::json::parse(testsupport::slurp(out.path() / "run.json"));
    EXPECT_EQ(manifest["generatedAt"], "2024-06-01T00:00:00Z");
    EXPECT_EQ(manifest["mode"], "replay");
}

TEST(Pipeline, FailingClassDoesNotStopTheOthers) {
    testsupport::TempDir in, out;
    fs::copy_file(testsupport::dataDir() / "docs" / "java.util.Set.json", in / "java.util.Set.json");
    testsupport::spit(in / "broken.json", "{\"fqcn\": \"x.Broken\", \"methods\": [");
    auto cfg = replayConfig(out.path());
    cfg.inputDocs = {in.path()};
    const auto result = runPipeline(cfg, offlineDeps());
    EXPECT_EQ(result.exitCode, 1);
    ASSERT_EQ(result.classes.size(), 2u);
    EXPECT_FALSE(result.classes[0].errors.empty());
    EXPECT_EQ(result.classes[0].errors[0].code, "MalformedDoc");
    EXPECT_TRUE(result.classes[1].errors.empty());
    EXPECT_TRUE(fs::exists(out / "corpus" / "java.util.Set.json"));
    ASSERT_TRUE(result.report.has_value());
    EXPECT_EQ(result.report->compilabilityRows.size(), 1u);
}

TEST(Pipeline, MissingCassetteIsAClassError) {
    testsupport::TempDir cassettes, out;
    auto cfg = replayConfig(out.path());
    cfg.cassetteDir = cassettes.path();
    cfg.inputDocs = {testsupport::dataDir() / "docs" / "java.util.Set.json"};
    cfg.catalogDir.reset();
    cfg.annotationsDir.reset();
    auto transport = std::make_shared<CountingTransport>();
    const auto result = runPipeline(cfg, offlineDeps(transport));
    EXPECT_EQ(result.exitCode, 1);
    ASSERT_FALSE(result.errors.empty());
    EXPECT_EQ(result.errors[0].code, "CassetteMiss");
    EXPECT_EQ(transport->calls, 0);
}

TEST(Pipeline, LiveWithoutKeyFailsWithAuthError) {
    testsupport::TempDir out;
    unsetenv("ORACLE_FORGE_LLM_KEY");
    auto cfg = replayConfig(out.path());
    cfg.mode = GatewayMode::Live;
    PipelineDeps deps = offlineDeps();
    deps.transport.reset();
    const auto result = runPipeline(cfg, deps);
    EXPECT_EQ(result.exitCode, 1);
    ASSERT_FALSE(result.errors.empty());
    EXPECT_EQ(result.errors[0].code, "AuthError");
}

TEST(Pipeline, ConfigParsing) {
    const auto cfg = parseConfig(testsupport::slurp(testsupport::dataDir() / "oracle-forge.toml"), testsupport::dataDir());
    EXPECT_EQ(cfg.mode, GatewayMode::Replay);
    EXPECT_EQ(cfg.modelId, "gpt-4");
    EXPECT_DOUBLE_EQ(cfg.temperature, 0.7);
    ASSERT_EQ(cfg.inputDocs.size(), 1u);
    EXPECT_EQ(cfg.inputDocs[0], testsupport::dataDir() / "docs");
    EXPECT_NO_THROW(validate(cfg));

    EXPECT_THROW(parseConfig("bogusKey = 1\n"), InvalidConfig);
    EXPECT_THROW(parseConfig("mode = \"sometimes\"\n"), InvalidConfig);
    EXPECT_THROW(parseConfig("temperature = \"hot\"\n"), InvalidConfig);
    EXPECT_THROW(parseConfig("jobs = \"many\"\n"), InvalidConfig);
    EXPECT_THROW(validate(PipelineConfig{}), InvalidConfig);

    const auto partial = parseConfig("inputDocs = [\"a.java\", \"b\"]\nablation = \"noFewShot\"\nwholeClass = true\n", "/base");
    EXPECT_EQ(partial.inputDocs, (std::vector<fs::path>{"/base/a.java", "/base/b"}));
    EXPECT_TRUE(partial.ablation.noFewShot);
    EXPECT_TRUE(partial.wholeClass);

    auto bad = replayConfig("/tmp/unused");
    bad.temperature = 3.5;
    EXPECT_THROW(validate(bad), InvalidConfig);
    bad = replayConfig("/tmp/unused");
    bad.runner = "runner";
    EXPECT_THROW(validate(bad), InvalidConfig);
}

TEST(Pipeline, InputExpansionIsSorted) {
    const auto files = expandInputs({testsupport::dataDir() / "docs"});
    ASSERT_EQ(files.size(), 5u);
    EXPECT_TRUE(std::is_sorted(files.begin(), files.end()));
    EXPECT_EQ(artifactStem("java.util.Map"), "java.util.Map");
}
