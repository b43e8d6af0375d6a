// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Runs offline: replayed cassettes, stub compiler, no network.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/eval_harness.hpp"
#include "oracle_forge/partitioner.hpp"
#include "oracle_forge/pipeline.hpp"
#include "oracle_forge/prompt_engine.hpp"
#include "oracle_forge/toolchain_validate.hpp"
#include "oracles/algorithm_partition.hpp"
#include "oracles/published_snippets.hpp"
#include "oracles/random_docs.hpp"
#include "support.hpp"

using namespace oracle_forge;

namespace {

struct Failure {
    std::string why;
};

void require(bool ok, const std::string& why) {
    if (!ok) throw Failure{why};
}

void requireEq(const std::string& got, const std::string& want, const std::string& what) {
    require(got == want, what + ": got " + got + ", want " + want);
}

PartitionUnit fixtureUnit(const std::string& fqcn, const std::string& signature) {
    for (auto& u : partition(testsupport::loadFixtureDoc(fqcn))) {
        if (u.anchor.signature() == signature) return u;
    }
    throw Failure{"fixture unit missing: " + fqcn + "#" + signature};
}

void metricArithmetic() {
    const auto c = makeCompilabilityRow("Total", 165, 428, 418, 423);
    requireEq(c.compilable().percent(), "97.7", "compilable");
    requireEq(c.correct().percent(), "98.8", "correct");
    const auto a = makeCoverageRow("Total", 390, 352, 338);
    requireEq(a.precision().percent(), "96.0", "assertion precision");
    requireEq(a.recall().percent(), "90.3", "assertion recall");
    const auto e = makeCoverageRow("Total", 182, 180, 175);
    requireEq(e.precision().percent(), "97.2", "exception precision");
    requireEq(e.recall().percent(), "98.9", "exception recall");
}

void perRow() {
    const auto object = makeCoverageRow("java.lang.Object", 33, 30, 29);
    requireEq(object.precision().percent(), "96.7", "Object assertion precision");
    requireEq(object.recall().percent(), "90.9", "Object assertion recall");
    const auto list = makeCoverageRow("java.util.List", 62, 62, 61);
    requireEq(list.precision().percent(), "98.4", "List exception precision");
    requireEq(list.recall().percent(), "100.0", "List exception recall");
}

void partitionerEquivalence() {
    std::mt19937 rng(424242);
    int ambiguous = 0;
    const int rounds = 250;
    for (int round = 0; round < rounds; ++round) {
        const ClassDoc doc = oracles::randomDoc(rng, round % 10 == 0);
        const std::string where = "doc " + std::to_string(round);
        std::vector<oracles::ExpectedUnit> expected;
        try {
            expected = oracles::partitionByAlgorithm(doc);
        } catch (const oracles::AmbiguousRef&) {
            ++ambiguous;
            bool raised = false;
            try {
                partition(doc);
            } catch (const AmbiguousReference&) {
                raised = true;
            }
            require(raised, where + ": ambiguous reference not raised");
            continue;
        }
        const auto units = partition(doc);
        require(units.size() == expected.size(), where + ": unit count");
        for (std::size_t i = 0; i < units.size(); ++i) {
            require(units[i].anchor == doc.methods[expected[i].anchor], where + ": anchor");
            require(units[i].related.size() == expected[i].related.size(), where + ": related count");
            for (std::size_t k = 0; k < expected[i].related.size(); ++k) {
                require(units[i].related[k] == doc.methods[expected[i].related[k]], where + ": related order");
            }
            require(units[i].renderedDescription == expected[i].description, where + ": description");
        }
    }
    require(ambiguous * 10 >= rounds, "too few ambiguous documents: " + std::to_string(ambiguous));
}

void promptGolden() {
    const auto unit = fixtureUnit("java.lang.Object", "equals(Object)");
    auto cfg = defaultPromptConfig("java.lang.Object");
    const auto full = renderPrompt(unit, cfg).renderedText;
    require(full == testsupport::slurp(testsupport::goldenDir() / "object_equals_prompt.txt"), "golden differs");

    auto without = [&](Ablation a) {
        cfg.ablation = a;
        return renderPrompt(unit, cfg).renderedText;
    };
    auto cut = [&](const std::string& open, const std::string& close) {
        const auto a = full.find(open);
        const auto b = full.find(close, a) + close.size() + 2;  // the blank line after the section
        return full.substr(0, a) + full.substr(b);
    };
    require(without({true, false, false}) == cut("<context>", "</context>"), "noAssistant");
    require(without({false, true, false}) == cut("<examples>", "</examples>"), "noFewShot");
    const auto s1 = full.find("        Step 1 - ");
    const auto s3 = full.find('\n', full.find("        Step 3 - "));
    require(s1 != std::string::npos && s3 != std::string::npos, "steps missing from golden");
    require(without({false, false, true}) == full.substr(0, s1) + full.substr(s3 + 1), "noChainOfThought");
}

void extractorFixtures() {
    for (const auto& c : oracles::publishedSnippets()) {
        LlmExchange ex;
        ex.request = {"gpt-4", 0.7, "p"};
        ex.responseText = c.response;
        const auto records = extractOracles(ex, fixtureUnit(c.fqcn, c.unitSignature));
        require(records.size() == 1, c.name + ": " + std::to_string(records.size()) + " records");
        const auto& r = records[0];
        requireEq(r.name, c.name, "name");
        require(r.paramDecls.size() == c.arity, c.name + ": arity " + std::to_string(r.paramDecls.size()));
        requireEq(std::string(toString(r.kind)), c.kind, c.name + " kind");
    }
}

void replayDeterminism() {
    auto run = [](const testsupport::TempDir& out) {
        PipelineConfig cfg;
        cfg.inputDocs = {testsupport::dataDir() / "docs"};
        cfg.cassetteDir = testsupport::dataDir() / "cassettes";
        cfg.corpusDir = out.path();
        cfg.catalogDir = testsupport::dataDir() / "catalog";
        cfg.annotationsDir = testsupport::dataDir() / "annotations";
        cfg.validate = false;
        PipelineDeps deps;
        deps.clock = fixedClock(parseTimestamp("2024-06-01T00:00:00Z"));
        const auto result = runPipeline(cfg, deps);
        require(result.exitCode == 0, "pipeline exit " + std::to_string(result.exitCode));
        return testsupport::snapshotTree(out.path());
    };
    testsupport::TempDir a, b;
    const auto ta = run(a);
    const auto tb = run(b);
    require(ta.count("report.json") && ta.count("corpus/java.lang.Object.json"), "artifacts missing");
    for (const auto& [path, content] : ta) {
        auto it = tb.find(path);
        require(it != tb.end(), path + " missing from second run");
        require(it->second == content, path + " differs between runs");
    }
    require(ta.size() == tb.size(), "artifact sets differ");
}

void stubToolchain() {
    StubToolchain stub({
        {"stream().count()", "incompatible types: possible lossy conversion from long to int", {}, "stream"},
        {"indexOf(subSeq.toString()) != -1;", "not a statement", {}, "!="},
    });
    auto check = [&](const std::string& fqcn, const std::string& signature, const std::string& code) {
        LlmExchange ex;
        ex.responseText = "```java\n" + code + "```\n";
        const auto records = extractOracles(ex, fixtureUnit(fqcn, signature));
        const auto outcomes = compileCheck(wrapForCompile(records, fqcn), stub);
        require(outcomes.size() == 1, "one outcome expected for " + signature);
        require(outcomes[0].status == CompileStatus::NonCompilable, signature + " compiled");
        return outcomes[0].errorClass;
    };
    const auto type = check("java.util.Set", "size()",
                            "boolean checkSizeMatchesStream(Set<?> set) {\n"
                            "    int actual = set.stream().count();\n"
                            "    return actual == set.size();\n"
                            "}\n");
    requireEq(std::string(toString(type)), "typeError", "count into int");
    const auto syntax = check("java.lang.String", "contains(CharSequence)",
                              "boolean checkContainsMatchesIndexOf(String mainStr, CharSequence subSeq) {\n"
                              "    boolean actualResult = mainStr.contains(subSeq);\n"
                              "    actualResult == mainStr.indexOf(subSeq.toString()) != -1;\n"
                              "    return actualResult;\n"
                              "}\n");
    requireEq(std::string(toString(syntax)), "syntaxError", "missing parentheses");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"metric arithmetic on published totals", metricArithmetic},
        {"per-row precision and recall", perRow},
        {"partitioner equals literal algorithm on random docs", partitionerEquivalence},
        {"prompt golden and single ablations", promptGolden},
        {"extractor on published oracle snippets", extractorFixtures},
        {"replay pipeline is byte-identical", replayDeterminism},
        {"stub toolchain classifies type and syntax exemplars", stubToolchain},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string why;
        try {
            fn();
        } catch (const Failure& f) {
            why = f.why;
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        if (why.empty()) {
            std::cout << "PASS  " << name << " (" << ms << " ms)\n";
        } else {
            ++failed;
            std::cout << "FAIL  " << name << ": " << why << "\n";
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
