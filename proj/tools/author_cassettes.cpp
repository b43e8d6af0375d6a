// Builds replay cassettes from hand-authored responses so the shipped
// pipeline can run offline. Responses live in <responses>/<fqcn>.json as an
// object mapping unit ids to response text.

#include <filesystem>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oracle_forge/doc_model.hpp"
#include "oracle_forge/errors.hpp"
#include "oracle_forge/llm_gateway.hpp"
#include "oracle_forge/partitioner.hpp"
#include "oracle_forge/pipeline.hpp"
#include "oracle_forge/prompt_engine.hpp"
#include "oracle_forge/text.hpp"

namespace fs = std::filesystem;
using namespace oracle_forge;

int main(int argc, char** argv) {
    CLI::App app{"author-cassettes: write replay cassettes for hand-authored responses"};
    std::string docs, responses, out, model = "gpt-4", recordedAt = "2024-06-01T00:00:00Z";
    double temperature = kDefaultTemperature;
    bool prune = false;
    app.add_option("--docs", docs, "Directory of class documents")->required()->check(CLI::ExistingDirectory);
    app.add_option("--responses", responses, "Directory of response files")->required()->check(CLI::ExistingDirectory);
    app.add_option("--out", out, "Cassette directory")->required();
    app.add_option("--model", model, "Model id recorded in the cassettes");
    app.add_option("--temperature", temperature, "Temperature recorded in the cassettes");
    app.add_option("--recorded-at", recordedAt, "Fixed recording timestamp");
    app.add_flag("--prune", prune, "Delete cassettes that no current prompt produces");
    CLI11_PARSE(app, argc, argv);

    try {
        fs::create_directories(out);
        CassetteStore store(out);
        const auto when = parseTimestamp(recordedAt);
        std::set<std::string> produced;
        int missing = 0;
        for (const auto& path : expandInputs({fs::path(docs)})) {
            const std::string content = text::readFile(path.string());
            const ClassDoc doc = parseClassDoc(content, detectFormat(path.string(), content), path.string());
            const fs::path responseFile = fs::path(responses) / (artifactStem(doc.fqcn) + ".json");
            const auto answers = fs::exists(responseFile) ? nlohmann::json::parse(text::readFile(responseFile.string()))
                                                          : nlohmann::json::object();
            const PromptConfig pc = defaultPromptConfig(doc.fqcn);
            for (const auto& unit : partition(doc)) {
                if (!answers.contains(unit.id())) {
                    std::cerr << "no response for " << unit.id() << "\n";
                    ++missing;
                    continue;
                }
                LlmExchange ex;
                ex.request = {model, temperature, renderPrompt(unit, pc).renderedText};
                ex.responseText = answers[unit.id()].get<std::string>();
                ex.cassetteKey = cassetteKey(ex.request);
                ex.recordedAt = when;
                produced.insert(ex.cassetteKey);
                if (!store.put(ex)) {
                    const auto existing = store.find(ex.cassetteKey);
                    if (existing && existing->responseText != ex.responseText) {
                        std::cerr << "cassette " << ex.cassetteKey << " for " << unit.id()
                                  << " already holds a different response; delete it to re-record\n";
                    }
                }
            }
        }
        if (prune) {
            for (const auto& e : fs::directory_iterator(out)) {
                if (e.path().extension() == ".json" && !produced.count(e.path().stem().string())) fs::remove(e.path());
            }
        }
        std::cout << produced.size() << " cassette(s), " << missing << " unit(s) without a response\n";
        return missing ? 1 : 0;
    } catch (const Error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 1;
    }
}
