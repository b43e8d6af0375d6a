#include "oracle_forge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oracle_forge/artifacts.hpp"
#include "oracle_forge/conformance.hpp"
#include "oracle_forge/errors.hpp"
#include "oracle_forge/log.hpp"
#include "oracle_forge/oracle_extract.hpp"
#include "oracle_forge/text.hpp"
#include "oracle_forge/toolchain_validate.hpp"

namespace oracle_forge {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

bool parseBool(const std::string& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw InvalidConfig("config key " + key + " expects true or false, got \"" + v + "\"");
}

int parseInt(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const int n = std::stoi(v, &used);
        if (used == v.size()) return n;
    } catch (const std::exception&) {
    }
    throw InvalidConfig("config key " + key + " expects an integer, got \"" + v + "\"");
}

// Paths in a config file are relative to the file, not to the caller.
fs::path resolve(const fs::path& base, const std::string& v) {
    const fs::path p(v);
    return p.is_absolute() || base.empty() ? p : (base / p).lexically_normal();
}

void writeArtifact(const fs::path& path, std::string_view content) {
    fs::create_directories(path.parent_path());
    text::writeFileAtomic(path.string(), content);
}

struct SharedContext {
    const PipelineConfig& cfg;
    std::shared_ptr<LlmGateway> gateway;
    PromptConfig promptBase;
    Toolchain* toolchain = nullptr;
    std::mutex toolchainMutex;
};

class Stage {
public:
    Stage(ClassRun& run, std::string name) : run_(run), name_(std::move(name)) {}
    template <typename Fn>
    bool operator()(Fn&& fn) {
        try {
            fn();
            return true;
        } catch (const Error& e) {
            fail(e.code(), e.what());
        } catch (const std::exception& e) {
            fail("InternalError", e.what());
        }
        return false;
    }

private:
    void fail(const std::string& code, const std::string& message) {
        const std::string who = run_.fqcn.empty() ? run_.source.string() : run_.fqcn;
        log::error(name_ + " failed for " + who + ": " + code + ": " + message);
        run_.errors.push_back({name_, who, code, message});
    }
    ClassRun& run_;
    std::string name_;
};

struct ClassArtifacts {
    ClassDoc doc;
    std::vector<OracleRecord> corpus;
    std::vector<CompileOutcome> outcomes;
    std::vector<AnnotationEntry> annotations;
    std::vector<PropertyCatalogEntry> catalog;
};

void runClass(SharedContext& ctx, const fs::path& source, ClassRun& run, ClassArtifacts& art) {
    const auto& cfg = ctx.cfg;
    const fs::path out = cfg.corpusDir;
    run.source = source;

    if (!Stage(run, "ingest")([&] {
            const std::string content = text::readFile(source.string());
            art.doc = parseClassDoc(content, detectFormat(source.string(), content), source.string());
            run.fqcn = art.doc.fqcn;
            run.methods = art.doc.methods.size();
            writeArtifact(out / "docs" / (artifactStem(run.fqcn) + ".json"), serializeCanonicalJson(art.doc));
        })) {
        return;
    }
    const std::string stem = artifactStem(run.fqcn);

    UnitSet units{art.doc, cfg.wholeClass, {}};
    if (!Stage(run, "partition")([&] {
            if (cfg.wholeClass) {
                units.units.push_back(wholeClassUnit(art.doc));
            } else {
                units.units = partition(art.doc);
            }
            run.units = units.units.size();
            writeArtifact(out / "units" / (stem + ".json"), serializeUnits(units));
        })) {
        return;
    }

    std::vector<std::string> prompts;
    if (!Stage(run, "prompt")([&] {
            PromptConfig pc = ctx.promptBase;
            pc.classTypeName = run.fqcn;
            ojson doc;
            doc["schemaVersion"] = kSchemaVersion;
            doc["targetClass"] = run.fqcn;
            doc["ablation"] = cfg.ablation.str();
            doc["prompts"] = ojson::array();
            for (const auto& u : units.units) {
                prompts.push_back(renderPrompt(u, pc).renderedText);
                doc["prompts"].push_back({{"unitId", u.id()}, {"text", prompts.back()}});
            }
            writeArtifact(out / "prompts" / (stem + ".json"), doc.dump(2) + "\n");
        })) {
        return;
    }

    std::vector<UnitExchange> exchanges;
    if (!Stage(run, "generate")([&] {
            for (std::size_t i = 0; i < units.units.size(); ++i) {
                LlmRequest req{cfg.modelId, cfg.temperature, prompts[i]};
                exchanges.push_back({units.units[i].id(), ctx.gateway->complete(req, cfg.mode)});
            }
            writeArtifact(out / "exchanges" / (stem + ".json"), serializeExchanges(run.fqcn, exchanges));
        })) {
        return;
    }

    if (!Stage(run, "extract")([&] {
            std::vector<OracleRecord> all;
            for (std::size_t i = 0; i < exchanges.size(); ++i) {
                try {
                    auto records = extractOracles(exchanges[i].exchange, units.units[i]);
                    all.insert(all.end(), records.begin(), records.end());
                } catch (const NoOraclesFound& e) {
                    // One silent unit does not invalidate the class.
                    log::warn(e.what());
                    run.warnings.push_back(e.what());
                }
            }
            art.corpus = dedupeNames(std::move(all));
            run.oracles = art.corpus.size();
            writeArtifact(out / "corpus" / (stem + ".json"), serializeCorpus(art.corpus));
        })) {
        return;
    }

    if (cfg.validate && ctx.toolchain) {
        Stage(run, "validate")([&] {
            const std::string holder = wrapForCompile(art.corpus, run.fqcn);
            writeArtifact(out / "holders" / (holderClassName(run.fqcn) + ".java"), holder);
            {
                // Tool invocations are serialized; the stub is not thread-safe.
                std::lock_guard lock(ctx.toolchainMutex);
                art.outcomes = compileCheck(holder, *ctx.toolchain);
            }
            applyOutcomes(art.corpus, art.outcomes);
            writeArtifact(out / "outcomes" / (stem + ".json"), serializeOutcomes(run.fqcn, art.outcomes));
        });
    }

    Stage(run, "eval")([&] {
        if (cfg.annotationsDir) {
            const fs::path file = *cfg.annotationsDir / (stem + ".json");
            if (fs::exists(file)) art.annotations = parseAnnotations(text::readFile(file.string()));
        }
        if (cfg.catalogDir) {
            const fs::path file = *cfg.catalogDir / (stem + ".json");
            if (fs::exists(file)) art.catalog = parseCatalog(text::readFile(file.string()));
        }
        std::map<std::string, OracleRecord*> byId;
        for (auto& r : art.corpus) byId[r.id] = &r;
        for (const auto& a : art.annotations) {
            auto it = byId.find(a.oracleId);
            if (it == byId.end()) throw DanglingAnnotation("annotation references unknown oracle " + a.oracleId);
            it->second->correctnessStatus = a.correct ? Correctness::Correct : Correctness::Incorrect;
        }
        // Statuses changed since extraction; refresh the corpus file.
        if (!art.annotations.empty() || !art.outcomes.empty()) {
            writeArtifact(out / "corpus" / (stem + ".json"), serializeCorpus(art.corpus));
        }
    });
}

}  // namespace

std::string artifactStem(std::string_view fqcn) {
    std::string out;
    for (char c : fqcn) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-') ? c : '_';
    return out;
}

PipelineConfig parseConfig(std::string_view text, const fs::path& baseDir) {
    std::istringstream in{std::string(text)};
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_config(in);
    } catch (const CLI::Error& e) {
        throw InvalidConfig(std::string("cannot parse config: ") + e.what());
    }
    PipelineConfig cfg;
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--") continue;
        std::string key = item.name;
        for (auto it = item.parents.rbegin(); it != item.parents.rend(); ++it) key = *it + "." + key;
        const auto& in = item.inputs;
        const std::string v = in.empty() ? std::string() : in.front();
        auto single = [&] {
            if (in.size() != 1) throw InvalidConfig("config key " + key + " expects a single value");
        };
        if (key == "inputDocs") {
            cfg.inputDocs.clear();
            for (const auto& p : in) cfg.inputDocs.push_back(resolve(baseDir, p));
            continue;
        }
        single();
        if (key == "cassetteDir") cfg.cassetteDir = resolve(baseDir, v);
        else if (key == "corpusDir") cfg.corpusDir = resolve(baseDir, v);
        else if (key == "mode") cfg.mode = parseGatewayMode(v);
        else if (key == "modelId") cfg.modelId = v;
        else if (key == "temperature") {
            try {
                cfg.temperature = std::stod(v);
            } catch (const std::exception&) {
                throw InvalidConfig("config key temperature expects a number, got \"" + v + "\"");
            }
        } else if (key == "ablation") cfg.ablation = Ablation::parse(v);
        else if (key == "wholeClass") cfg.wholeClass = parseBool(key, v);
        else if (key == "validate") cfg.validate = parseBool(key, v);
        else if (key == "toolchain") cfg.toolchain = v.find('/') == std::string::npos ? v : resolve(baseDir, v).string();
        else if (key == "fewShotBank") cfg.fewShotBank = resolve(baseDir, v);
        else if (key == "promptTemplate") cfg.promptTemplate = resolve(baseDir, v);
        else if (key == "catalogDir") cfg.catalogDir = resolve(baseDir, v);
        else if (key == "annotationsDir") cfg.annotationsDir = resolve(baseDir, v);
        else if (key == "runner") cfg.runner = v.find('/') == std::string::npos ? v : resolve(baseDir, v).string();
        else if (key == "fixture") cfg.fixture = resolve(baseDir, v);
        else if (key == "holder") cfg.holder = resolve(baseDir, v);
        else if (key == "runnerTimeoutSeconds") cfg.runnerTimeoutSeconds = parseInt(key, v);
        else if (key == "jobs") cfg.jobs = parseInt(key, v);
        else throw InvalidConfig("unknown config key \"" + key + "\"");
    }
    return cfg;
}

PipelineConfig loadConfig(const fs::path& file) {
    std::string content;
    try {
        content = text::readFile(file.string());
    } catch (const InvalidArtifact& e) {
        throw InvalidConfig(e.what());
    }
    return parseConfig(content, file.parent_path());
}

void validate(const PipelineConfig& cfg) {
    if (cfg.inputDocs.empty()) throw InvalidConfig("no input documents configured (inputDocs)");
    if (cfg.modelId.empty()) throw InvalidConfig("modelId must not be empty");
    try {
        validate(LlmRequest{cfg.modelId, cfg.temperature, "x"});
    } catch (const InvalidRequest& e) {
        throw InvalidConfig(e.what());
    }
    if (cfg.jobs < 1) throw InvalidConfig("jobs must be at least 1");
    if (cfg.runnerTimeoutSeconds < 1) throw InvalidConfig("runnerTimeoutSeconds must be at least 1");
    if (cfg.fixture.has_value() != cfg.runner.has_value() || cfg.holder.has_value() != cfg.runner.has_value()) {
        throw InvalidConfig("runner, holder and fixture must be configured together");
    }
    for (const auto& p : cfg.inputDocs) {
        if (!fs::exists(p)) throw InvalidConfig("input does not exist: " + p.string());
    }
    if (cfg.mode == GatewayMode::Replay && !fs::is_directory(cfg.cassetteDir)) {
        throw InvalidConfig("replay mode needs an existing cassette directory: " + cfg.cassetteDir.string());
    }
}

std::vector<fs::path> expandInputs(const std::vector<fs::path>& inputs) {
    std::vector<fs::path> out;
    for (const auto& p : inputs) {
        if (!fs::is_directory(p)) {
            out.push_back(p);
            continue;
        }
        std::vector<fs::path> entries;
        for (const auto& e : fs::directory_iterator(p)) {
            const auto ext = e.path().extension();
            if (e.is_regular_file() && (ext == ".java" || ext == ".json")) entries.push_back(e.path());
        }
        std::sort(entries.begin(), entries.end());
        out.insert(out.end(), entries.begin(), entries.end());
    }
    return out;
}

PipelineResult runPipeline(const PipelineConfig& cfg, PipelineDeps deps) {
    validate(cfg);
    PipelineResult result;
    auto runLevelError = [&](const std::string& stage, const Error& e) {
        log::error(stage + ": " + e.code() + ": " + e.what());
        result.errors.push_back({stage, "", e.code(), e.what()});
        result.exitCode = 1;
    };

    SharedContext ctx{cfg, nullptr, {}, nullptr, {}};
    std::unique_ptr<Toolchain> toolchain;
    try {
        auto store = std::make_shared<CassetteStore>(cfg.cassetteDir);
        std::shared_ptr<Transport> transport = deps.transport;
        if (!transport && cfg.mode != GatewayMode::Replay) transport = HttpTransport::fromEnvironment();
        ctx.gateway = std::make_shared<LlmGateway>(store, transport, deps.clock, RetryPolicy{}, deps.sleeper);

        ctx.promptBase.ablation = cfg.ablation;
        ctx.promptBase.fewShotBank = cfg.fewShotBank ? parseFewShotBank(text::readFile(cfg.fewShotBank->string()))
                                                     : defaultFewShotBank();
        if (cfg.promptTemplate) ctx.promptBase.templateText = text::readFile(cfg.promptTemplate->string());
    } catch (const Error& e) {
        runLevelError("setup", e);
        return result;
    }
    if (cfg.validate) {
        try {
            toolchain = JavacToolchain::locate(cfg.toolchain.value_or(""));
            ctx.toolchain = toolchain.get();
        } catch (const ToolchainUnavailable& e) {
            // Without a compiler the corpus stays unchecked rather than failing.
            if (cfg.toolchain) {
                runLevelError("validate", e);
            } else {
                log::warn(std::string(e.what()) + "; compile statuses stay unchecked");
            }
        }
    }

    const auto inputs = expandInputs(cfg.inputDocs);
    result.classes.resize(inputs.size());
    std::vector<ClassArtifacts> artifacts(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) runClass(ctx, inputs[i], result.classes[i], artifacts[i]);
    };
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), std::max<std::size_t>(inputs.size(), 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::set<std::string> seen;
    for (auto& run : result.classes) {
        if (!run.fqcn.empty() && !seen.insert(run.fqcn).second) {
            run.errors.push_back({"ingest", run.fqcn, "DuplicateClass", "class appears in more than one input"});
        }
        result.errors.insert(result.errors.end(), run.errors.begin(), run.errors.end());
    }

    // Eval over every class that produced a corpus, in input order.
    try {
        std::vector<OracleRecord> corpus;
        std::vector<CompileOutcome> outcomes;
        std::vector<AnnotationEntry> annotations;
        std::vector<PropertyCatalogEntry> catalog;
        std::map<std::string, std::uint64_t> methodCounts;
        std::vector<std::string> order;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const auto& run = result.classes[i];
            if (run.fqcn.empty() || !run.errors.empty()) continue;
            auto& art = artifacts[i];
            order.push_back(run.fqcn);
            methodCounts[run.fqcn] = run.methods;
            corpus.insert(corpus.end(), art.corpus.begin(), art.corpus.end());
            outcomes.insert(outcomes.end(), art.outcomes.begin(), art.outcomes.end());
            annotations.insert(annotations.end(), art.annotations.begin(), art.annotations.end());
            catalog.insert(catalog.end(), art.catalog.begin(), art.catalog.end());
        }
        EvalReport report;
        report.compilabilityRows = computeCompilability(corpus, outcomes, annotations, methodCounts, order);
        report.assertionRows = computeCoverage(catalog, corpus, annotations, PropertyKind::Assertion);
        report.exceptionRows = computeCoverage(catalog, corpus, annotations, PropertyKind::Exception);
        writeArtifact(fs::path(cfg.corpusDir) / "report.md", renderReport(report, ReportFormat::Markdown));
        writeArtifact(fs::path(cfg.corpusDir) / "report.json", renderReport(report, ReportFormat::Json));
        result.report = std::move(report);
    } catch (const Error& e) {
        runLevelError("eval", e);
    }

    std::optional<ConformanceReport> conformance;
    if (cfg.runner && cfg.fixture && cfg.holder) {
        try {
            conformance = runConformance(*cfg.holder, *cfg.fixture,
                                         RunnerSettings{*cfg.runner, std::chrono::seconds(cfg.runnerTimeoutSeconds)});
            if (!conformance->allMatch()) {
                result.errors.push_back({"run", "", "ConformanceMismatch", "observed outcomes differ from the fixture"});
            }
        } catch (const Error& e) {
            runLevelError("run", e);
        }
    }

    ojson manifest;
    manifest["schemaVersion"] = kSchemaVersion;
    manifest["generatedAt"] = formatTimestamp(deps.clock());
    manifest["mode"] = std::string(toString(cfg.mode));
    manifest["modelId"] = cfg.modelId;
    manifest["temperature"] = renderTemperature(cfg.temperature);
    manifest["ablation"] = cfg.ablation.str();
    manifest["wholeClass"] = cfg.wholeClass;
    manifest["toolchainVersion"] = nullptr;
    if (ctx.toolchain) {
        try {
            manifest["toolchainVersion"] = ctx.toolchain->version();
        } catch (const Error&) {
        }
    }
    manifest["classes"] = ojson::array();
    for (const auto& run : result.classes) {
        ojson c;
        c["source"] = run.source.generic_string();
        c["fqcn"] = run.fqcn;
        c["methods"] = run.methods;
        c["units"] = run.units;
        c["oracles"] = run.oracles;
        c["status"] = run.errors.empty() ? "ok" : "failed";
        c["warnings"] = run.warnings;
        manifest["classes"].push_back(std::move(c));
    }
    manifest["errors"] = ojson::array();
    for (const auto& e : result.errors) {
        manifest["errors"].push_back({{"stage", e.stage}, {"class", e.classFqcn}, {"code", e.code}, {"message", e.message}});
    }
    if (conformance) {
        manifest["conformance"] = ojson::array();
        for (std::size_t i = 0; i < conformance->results.size(); ++i) {
            const auto& r = conformance->results[i];
            manifest["conformance"].push_back({{"oracle", r.oracleName},
                                               {"outcome", std::string(toString(r.outcome))},
                                               {"matchesExpected", static_cast<bool>(conformance->matchesExpected[i])}});
        }
    }
    try {
        writeArtifact(fs::path(cfg.corpusDir) / "run.json", manifest.dump(2) + "\n");
    } catch (const Error& e) {
        runLevelError("manifest", e);
    }
    if (!result.errors.empty()) result.exitCode = 1;
    return result;
}

}  // namespace oracle_forge
