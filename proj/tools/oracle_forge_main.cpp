// Command-line front end: one subcommand per pipeline stage plus `pipeline`.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "oracle_forge/artifacts.hpp"
#include "oracle_forge/conformance.hpp"
#include "oracle_forge/doc_model.hpp"
#include "oracle_forge/errors.hpp"
#include "oracle_forge/eval_harness.hpp"
#include "oracle_forge/llm_gateway.hpp"
#include "oracle_forge/log.hpp"
#include "oracle_forge/oracle_extract.hpp"
#include "oracle_forge/partitioner.hpp"
#include "oracle_forge/pipeline.hpp"
#include "oracle_forge/prompt_engine.hpp"
#include "oracle_forge/text.hpp"
#include "oracle_forge/toolchain_validate.hpp"

namespace fs = std::filesystem;
using namespace oracle_forge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPipeline = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& outPath, std::string_view content) {
    if (outPath.empty() || outPath == "-") {
        std::cout << content;
        return;
    }
    const fs::path p(outPath);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    text::writeFileAtomic(outPath, content);
}

ClassDoc loadDoc(const std::string& path) {
    const std::string content = text::readFile(path);
    return parseClassDoc(content, detectFormat(path, content), path);
}

// A units file, or a class document partitioned on the fly.
UnitSet loadUnits(const std::string& path, bool wholeClass) {
    const std::string content = text::readFile(path);
    if (content.find("\"schemaVersion\"") != std::string::npos && content.find("\"units\"") != std::string::npos) {
        return parseUnits(content);
    }
    UnitSet set{parseClassDoc(content, detectFormat(path, content), path), wholeClass, {}};
    if (wholeClass) {
        set.units.push_back(wholeClassUnit(set.doc));
    } else {
        set.units = partition(set.doc);
    }
    return set;
}

std::vector<std::string> expandFiles(const std::vector<std::string>& inputs) {
    std::vector<fs::path> paths(inputs.begin(), inputs.end());
    std::vector<std::string> out;
    for (const auto& p : expandInputs(paths)) out.push_back(p.string());
    return out;
}

PromptConfig promptConfigFor(const std::string& fqcn, const std::string& ablate, const std::string& bank,
                             const std::string& templ) {
    PromptConfig pc = defaultPromptConfig(fqcn);
    pc.ablation = Ablation::parse(ablate);
    if (!bank.empty()) pc.fewShotBank = parseFewShotBank(text::readFile(bank));
    if (!templ.empty()) pc.templateText = text::readFile(templ);
    return pc;
}

struct PromptFlags {
    std::string ablate;
    std::string bank;
    std::string templ;

    void attach(CLI::App* app) {
        app->add_option("--ablate", ablate, "Comma-separated: noAssistant,noFewShot,noChainOfThought");
        app->add_option("--few-shot-bank", bank, "Few-shot bank JSON (default: shipped bank)");
        app->add_option("--template", templ, "Prompt template (default: shipped template)");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oracle-forge: generate test oracles from Java API documentation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "oracle-forge 1.0.0");

    // ingest
    std::string ingestIn, ingestOut;
    auto* ingest = app.add_subcommand("ingest", "Parse a documented Java source or canonical JSON into canonical JSON");
    ingest->add_option("--in", ingestIn, "Source (.java) or canonical JSON file")->required()->check(CLI::ExistingFile);
    ingest->add_option("--out", ingestOut, "Output file (default: stdout)");

    // partition
    std::string partIn, partOut;
    bool partWhole = false;
    auto* part = app.add_subcommand("partition", "Split a class document into per-method units");
    part->add_option("--in", partIn, "Class document")->required()->check(CLI::ExistingFile);
    part->add_option("--out", partOut, "Units file (default: stdout)");
    part->add_flag("--whole-class", partWhole, "Emit one pseudo-unit covering the whole class");

    // prompt
    std::string promptUnits, promptUnit;
    PromptFlags promptFlags;
    auto* prompt = app.add_subcommand("prompt", "Render the prompt for one unit to stdout");
    prompt->add_option("--units", promptUnits, "Units file or class document")->required()->check(CLI::ExistingFile);
    prompt->add_option("--unit", promptUnit, "Unit id, e.g. java.lang.Object#equals(Object)")->required();
    promptFlags.attach(prompt);

    // generate
    std::string genUnits, genCassettes, genMode = "replay", genModel = "gpt-4", genOut;
    double genTemperature = kDefaultTemperature;
    PromptFlags genFlags;
    auto* gen = app.add_subcommand("generate", "Obtain a model response for every unit");
    gen->add_option("--units", genUnits, "Units file or class document")->required()->check(CLI::ExistingFile);
    gen->add_option("--cassettes", genCassettes, "Cassette directory")->required();
    gen->add_option("--mode", genMode, "live, replay or record")->check(CLI::IsMember({"live", "replay", "record"}));
    gen->add_option("--model", genModel, "Model id");
    gen->add_option("--temperature", genTemperature, "Sampling temperature, one decimal in [0, 2]");
    gen->add_option("--out", genOut, "Exchanges file (default: stdout)");
    genFlags.attach(gen);

    // extract
    std::string exUnits, exExchanges, exOut;
    auto* ex = app.add_subcommand("extract", "Extract oracle records from model responses");
    ex->add_option("--units", exUnits, "Units file or class document")->required()->check(CLI::ExistingFile);
    ex->add_option("--exchanges", exExchanges, "Exchanges file")->required()->check(CLI::ExistingFile);
    ex->add_option("--out", exOut, "Corpus file (default: stdout)");

    // validate
    std::string valCorpus, valToolchain, valHolder, valOut;
    bool valUpdate = false;
    auto* val = app.add_subcommand("validate", "Compile a class corpus and classify failures");
    val->add_option("--corpus", valCorpus, "Corpus file of one class")->required()->check(CLI::ExistingFile);
    val->add_option("--toolchain", valToolchain, "javac executable (default: $ORACLE_FORGE_JAVAC, then PATH)");
    val->add_option("--holder-out", valHolder, "Also write the generated holder source here");
    val->add_option("--out", valOut, "Outcomes file (default: stdout)");
    val->add_flag("--update-corpus", valUpdate, "Rewrite the corpus with the compile statuses");

    // eval
    std::vector<std::string> evCatalog, evCorpus, evAnnotations, evOutcomes, evDocs;
    std::string evFormat = "markdown", evOut;
    auto* ev = app.add_subcommand("eval", "Compute compilability, precision and recall tables");
    ev->add_option("--catalog", evCatalog, "Property catalog files or directories")->required();
    ev->add_option("--corpus", evCorpus, "Corpus files or directories")->required();
    ev->add_option("--annotations", evAnnotations, "Annotation files or directories")->required();
    ev->add_option("--outcomes", evOutcomes, "Compile outcome files or directories");
    ev->add_option("--docs", evDocs, "Class documents, for the #Methods column");
    ev->add_option("--format", evFormat, "table, json or markdown")->check(CLI::IsMember({"table", "json", "markdown"}));
    ev->add_option("--out", evOut, "Report file (default: stdout)");

    // run-conformance
    std::string rcRunner, rcHolder, rcFixture;
    int rcTimeout = 60;
    auto* rc = app.add_subcommand("run-conformance", "Execute oracles against subject classes through the runner");
    rc->add_option("--runner", rcRunner, "Runner executable")->required();
    rc->add_option("--holder", rcHolder, "Oracle holder source")->required()->check(CLI::ExistingFile);
    rc->add_option("--fixture", rcFixture, "Fixture JSON")->required()->check(CLI::ExistingFile);
    rc->add_option("--timeout", rcTimeout, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);

    // pipeline
    std::string plConfig;
    std::vector<std::string> plIn;
    std::string plCassettes, plOut, plMode, plModel, plAblate, plToolchain, plCatalog, plAnnotations, plRunner,
        plFixture, plHolder;
    double plTemperature = 0;
    int plJobs = 0;
    bool plWhole = false, plNoValidate = false;
    auto* pl = app.add_subcommand("pipeline", "Run every stage end to end");
    pl->add_option("--config", plConfig, "oracle-forge.toml style config")->check(CLI::ExistingFile);
    auto* oIn = pl->add_option("--in", plIn, "Input documents or directories");
    auto* oCas = pl->add_option("--cassettes", plCassettes, "Cassette directory");
    auto* oOut = pl->add_option("--out", plOut, "Artifact root directory");
    auto* oMode = pl->add_option("--mode", plMode, "live, replay or record")->check(CLI::IsMember({"live", "replay", "record"}));
    auto* oModel = pl->add_option("--model", plModel, "Model id");
    auto* oTemp = pl->add_option("--temperature", plTemperature, "Sampling temperature");
    auto* oAbl = pl->add_option("--ablate", plAblate, "Prompt ablation flags");
    auto* oWhole = pl->add_flag("--whole-class", plWhole, "Skip partitioning (ablation)");
    auto* oNoVal = pl->add_flag("--no-validate", plNoValidate, "Skip compilation");
    auto* oTool = pl->add_option("--toolchain", plToolchain, "javac executable");
    auto* oCat = pl->add_option("--catalog", plCatalog, "Catalog directory");
    auto* oAnn = pl->add_option("--annotations", plAnnotations, "Annotations directory");
    auto* oJobs = pl->add_option("--jobs", plJobs, "Classes processed concurrently")->check(CLI::PositiveNumber);
    auto* oRunner = pl->add_option("--runner", plRunner, "Conformance runner executable");
    auto* oFix = pl->add_option("--fixture", plFixture, "Conformance fixture");
    auto* oHold = pl->add_option("--holder", plHolder, "Oracle holder for the conformance fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ingest) {
            emit(ingestOut, serializeCanonicalJson(loadDoc(ingestIn)));
            return kExitOk;
        }
        if (*part) {
            emit(partOut, serializeUnits(loadUnits(partIn, partWhole)));
            return kExitOk;
        }
        if (*prompt) {
            const auto set = loadUnits(promptUnits, false);
            const auto pc = promptConfigFor(set.doc.fqcn, promptFlags.ablate, promptFlags.bank, promptFlags.templ);
            for (const auto& u : set.units) {
                if (u.id() == promptUnit) {
                    std::cout << renderPrompt(u, pc).renderedText;
                    return kExitOk;
                }
            }
            std::cerr << "oracle-forge: no unit " << promptUnit << " in " << promptUnits << "\n";
            return kExitUsage;
        }
        if (*gen) {
            const auto set = loadUnits(genUnits, false);
            const auto pc = promptConfigFor(set.doc.fqcn, genFlags.ablate, genFlags.bank, genFlags.templ);
            const auto mode = parseGatewayMode(genMode);
            std::shared_ptr<Transport> transport;
            if (mode != GatewayMode::Replay) transport = HttpTransport::fromEnvironment();
            LlmGateway gateway(std::make_shared<CassetteStore>(genCassettes), transport);
            std::vector<UnitExchange> exchanges;
            for (const auto& u : set.units) {
                exchanges.push_back({u.id(), gateway.complete({genModel, genTemperature, renderPrompt(u, pc).renderedText}, mode)});
            }
            emit(genOut, serializeExchanges(set.doc.fqcn, exchanges));
            return kExitOk;
        }
        if (*ex) {
            const auto set = loadUnits(exUnits, false);
            const auto exchanges = parseExchanges(text::readFile(exExchanges));
            std::map<std::string, const PartitionUnit*> units;
            for (const auto& u : set.units) units[u.id()] = &u;
            std::vector<OracleRecord> all;
            int status = kExitOk;
            for (const auto& e : exchanges) {
                auto it = units.find(e.unitId);
                if (it == units.end()) throw InvalidArtifact("exchange for unknown unit " + e.unitId);
                try {
                    auto records = extractOracles(e.exchange, *it->second);
                    all.insert(all.end(), records.begin(), records.end());
                } catch (const NoOraclesFound& err) {
                    log::warn(err.what());
                }
            }
            emit(exOut, serializeCorpus(dedupeNames(std::move(all))));
            return status;
        }
        if (*val) {
            auto corpus = parseCorpus(text::readFile(valCorpus));
            if (corpus.empty()) throw InvalidArtifact("corpus is empty");
            const std::string fqcn = corpus.front().targetClass;
            const std::string holder = wrapForCompile(corpus, fqcn);
            if (!valHolder.empty()) emit(valHolder, holder);
            std::vector<CompileOutcome> outcomes;
            int status = kExitOk;
            try {
                auto toolchain = JavacToolchain::locate(valToolchain);
                outcomes = compileCheck(holder, *toolchain);
            } catch (const ToolchainUnavailable& e) {
                std::cerr << "oracle-forge: ToolchainUnavailable: " << e.what() << "\n";
                for (const auto& r : corpus) outcomes.push_back({r.id, CompileStatus::Unchecked, {}, ErrorClass::None, ""});
                status = kExitPipeline;
            }
            emit(valOut, serializeOutcomes(fqcn, outcomes));
            if (valUpdate) {
                applyOutcomes(corpus, outcomes);
                emit(valCorpus, serializeCorpus(corpus));
            }
            return status;
        }
        if (*ev) {
            std::vector<PropertyCatalogEntry> catalog;
            for (const auto& f : expandFiles(evCatalog)) {
                auto part = parseCatalog(text::readFile(f));
                catalog.insert(catalog.end(), part.begin(), part.end());
            }
            std::vector<OracleRecord> corpus;
            for (const auto& f : expandFiles(evCorpus)) {
                auto part = parseCorpus(text::readFile(f));
                corpus.insert(corpus.end(), part.begin(), part.end());
            }
            std::vector<AnnotationEntry> annotations;
            for (const auto& f : expandFiles(evAnnotations)) {
                auto part = parseAnnotations(text::readFile(f));
                annotations.insert(annotations.end(), part.begin(), part.end());
            }
            std::vector<CompileOutcome> outcomes;
            for (const auto& f : expandFiles(evOutcomes)) {
                auto part = parseOutcomes(text::readFile(f));
                outcomes.insert(outcomes.end(), part.begin(), part.end());
            }
            std::map<std::string, std::uint64_t> methodCounts;
            std::vector<std::string> order;
            for (const auto& f : expandFiles(evDocs)) {
                const auto doc = loadDoc(f);
                methodCounts[doc.fqcn] = doc.methods.size();
                order.push_back(doc.fqcn);
            }
            EvalReport report;
            report.compilabilityRows = computeCompilability(corpus, outcomes, annotations, methodCounts, order);
            report.assertionRows = computeCoverage(catalog, corpus, annotations, PropertyKind::Assertion);
            report.exceptionRows = computeCoverage(catalog, corpus, annotations, PropertyKind::Exception);
            emit(evOut, renderReport(report, parseReportFormat(evFormat)));
            return kExitOk;
        }
        if (*rc) {
            const auto fixture = parseFixture(text::readFile(rcFixture));
            const auto report = runConformance(rcHolder, rcFixture, RunnerSettings{rcRunner, std::chrono::seconds(rcTimeout)});
            std::cout << renderConformanceReport(report, fixture);
            return report.allMatch() ? kExitOk : kExitPipeline;
        }
        if (*pl) {
            PipelineConfig cfg = plConfig.empty() ? PipelineConfig{} : loadConfig(plConfig);
            if (oIn->count()) cfg.inputDocs.assign(plIn.begin(), plIn.end());
            if (oCas->count()) cfg.cassetteDir = plCassettes;
            if (oOut->count()) cfg.corpusDir = plOut;
            if (oMode->count()) cfg.mode = parseGatewayMode(plMode);
            if (oModel->count()) cfg.modelId = plModel;
            if (oTemp->count()) cfg.temperature = plTemperature;
            if (oAbl->count()) cfg.ablation = Ablation::parse(plAblate);
            if (oWhole->count()) cfg.wholeClass = plWhole;
            if (oNoVal->count()) cfg.validate = !plNoValidate;
            if (oTool->count()) cfg.toolchain = plToolchain;
            if (oCat->count()) cfg.catalogDir = plCatalog;
            if (oAnn->count()) cfg.annotationsDir = plAnnotations;
            if (oJobs->count()) cfg.jobs = plJobs;
            if (oRunner->count()) cfg.runner = plRunner;
            if (oFix->count()) cfg.fixture = plFixture;
            if (oHold->count()) cfg.holder = plHolder;
            const auto result = runPipeline(cfg);
            for (const auto& c : result.classes) {
                std::cerr << "oracle-forge: " << (c.fqcn.empty() ? c.source.string() : c.fqcn) << ": " << c.units
                          << " unit(s), " << c.oracles << " oracle(s)" << (c.errors.empty() ? "" : ", FAILED") << "\n";
            }
            if (result.report) std::cout << renderReport(*result.report, ReportFormat::Table);
            return result.exitCode == 0 ? kExitOk : kExitPipeline;
        }
    } catch (const InvalidConfig& e) {
        std::cerr << "oracle-forge: " << e.code() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "oracle-forge: " << e.code() << ": " << e.what() << "\n";
        return kExitPipeline;
    } catch (const std::exception& e) {
        std::cerr << "oracle-forge: " << e.what() << "\n";
        return kExitPipeline;
    }
    return kExitUsage;
}
