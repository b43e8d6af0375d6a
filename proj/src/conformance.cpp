#include "oracle_forge/conformance.hpp"

#include <algorithm>
#include <map>
#include <system_error>

#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/java_scan.hpp"
#include "oracle_forge/subprocess.hpp"
#include "oracle_forge/text.hpp"

namespace oracle_forge {
namespace {

std::optional<ConformanceOutcome> outcomeFrom(std::string_view s) {
    for (auto o : {ConformanceOutcome::Pass, ConformanceOutcome::Fail, ConformanceOutcome::Error}) {
        if (toString(o) == s) return o;
    }
    return std::nullopt;
}

// Declared method names mapped to every arity they are declared with.
std::multimap<std::string, std::size_t> declaredMethods(std::string_view holderSource) {
    const auto lexed = java::tokenize(holderSource);
    const auto& code = lexed.code;
    std::multimap<std::string, std::size_t> out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        auto decl = java::parseTypeDeclAt(code, i, code.size());
        if (!decl) continue;
        std::size_t k = decl->bodyOpen + 1;
        while (k < decl->bodyClose) {
            if (auto h = java::parseMethodAt(code, k, decl->bodyClose)) {
                out.emplace(h->name, h->params.size());
                k = h->end + 1;
            } else {
                k = java::skipMember(code, k, decl->bodyClose);
            }
        }
        break;
    }
    return out;
}

}  // namespace

std::string_view toString(ConformanceOutcome o) {
    switch (o) {
    case ConformanceOutcome::Pass:
        return "pass";
    case ConformanceOutcome::Fail:
        return "fail";
    case ConformanceOutcome::Error:
        return "error";
    }
    return "";
}

FixtureSpec parseFixture(std::string_view json) {
    try {
        const auto root = nlohmann::json::parse(json);
        FixtureSpec f;
        f.subjectClasses = root.at("subjectClasses").get<std::vector<std::string>>();
        for (const auto& j : root.at("invocations")) {
            Invocation inv;
            inv.oracleName = j.at("oracleName").get<std::string>();
            inv.argExpressions = j.at("argExpressions").get<std::vector<std::string>>();
            const auto expected = outcomeFrom(j.at("expected").get<std::string>());
            if (!expected || *expected == ConformanceOutcome::Error) {
                throw InvalidArtifact("expected outcome of " + inv.oracleName + " must be pass or fail");
            }
            inv.expected = *expected;
            f.invocations.push_back(std::move(inv));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed fixture: ") + e.what());
    }
}

std::string serializeFixture(const FixtureSpec& fixture) {
    nlohmann::ordered_json root;
    root["subjectClasses"] = fixture.subjectClasses;
    root["invocations"] = nlohmann::ordered_json::array();
    for (const auto& inv : fixture.invocations) {
        root["invocations"].push_back({{"oracleName", inv.oracleName},
                                       {"argExpressions", inv.argExpressions},
                                       {"expected", std::string(toString(inv.expected))}});
    }
    return root.dump(2) + "\n";
}

void validateFixture(const FixtureSpec& fixture, std::string_view holderSource) {
    const auto methods = declaredMethods(holderSource);
    for (const auto& inv : fixture.invocations) {
        auto [lo, hi] = methods.equal_range(inv.oracleName);
        if (lo == hi) throw PreconditionViolation("fixture invokes " + inv.oracleName + ", which the holder does not declare");
        const bool arityOk = std::any_of(lo, hi, [&](const auto& m) { return m.second == inv.argExpressions.size(); });
        if (!arityOk) {
            throw PreconditionViolation("fixture passes " + std::to_string(inv.argExpressions.size()) + " argument(s) to " +
                                        inv.oracleName + ", which declares a different arity");
        }
    }
}

std::vector<ConformanceResult> parseRunnerOutput(std::string_view output, const FixtureSpec& fixture) {
    std::vector<ConformanceResult> results;
    auto lines = text::split(output, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string where = "runner output line " + std::to_string(i + 1);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(lines[i]);
        } catch (const nlohmann::json::parse_error&) {
            throw ProtocolError(where + " is not a JSON object: " + std::string(lines[i].substr(0, 200)));
        }
        if (!j.is_object() || !j.contains("oracle") || !j.contains("outcome") || !j.contains("message") ||
            !j["oracle"].is_string() || !j["outcome"].is_string() || !j["message"].is_string()) {
            throw ProtocolError(where + " must carry string fields oracle, outcome and message");
        }
        const auto outcome = outcomeFrom(j["outcome"].get<std::string>());
        if (!outcome) throw ProtocolError(where + " has unknown outcome " + j["outcome"].dump());
        ConformanceResult r{j["oracle"].get<std::string>(), *outcome, j["message"].get<std::string>()};
        if (r.outcome == ConformanceOutcome::Error && r.message.empty()) {
            throw ProtocolError(where + " reports an error without a message");
        }
        if (i < fixture.invocations.size() && r.oracleName != fixture.invocations[i].oracleName) {
            throw ProtocolError(where + " reports " + r.oracleName + " but invocation " + std::to_string(i + 1) + " is " +
                                fixture.invocations[i].oracleName);
        }
        results.push_back(std::move(r));
    }
    if (results.size() != fixture.invocations.size()) {
        throw ProtocolError("runner reported " + std::to_string(results.size()) + " result(s) for " +
                            std::to_string(fixture.invocations.size()) + " invocation(s)");
    }
    return results;
}

bool ConformanceReport::allMatch() const {
    return std::all_of(matchesExpected.begin(), matchesExpected.end(), [](bool b) { return b; });
}

ConformanceReport runConformance(const std::filesystem::path& holder, const std::filesystem::path& fixtureFile,
                                 const RunnerSettings& settings) {
    const std::string runner = findExecutable(settings.executable);
    if (runner.empty()) throw ToolchainUnavailable("conformance runner not found: " + settings.executable);

    const std::string holderSource = text::readFile(holder.string());
    const FixtureSpec fixture = parseFixture(text::readFile(fixtureFile.string()));
    validateFixture(fixture, holderSource);

    std::vector<std::string> argv{runner, std::filesystem::absolute(holder).string(),
                                  std::filesystem::absolute(fixtureFile).string()};
    const auto base = std::filesystem::absolute(fixtureFile).parent_path();
    for (const auto& s : fixture.subjectClasses) argv.push_back((base / s).lexically_normal().string());

    ProcessResult run;
    try {
        run = runProcess(argv, settings.timeout);
    } catch (const std::system_error& e) {
        throw HarnessCrash(e.what());
    }
    if (run.timedOut) {
        throw HarnessCrash("runner exceeded " + std::to_string(settings.timeout.count()) + " ms");
    }
    if (run.exitCode != 0 && run.exitCode != 1) {
        const std::string detail = std::string(text::trim(run.stderrText)).substr(0, 2000);
        if (run.stdoutText.empty() && detail.find("error:") != std::string::npos) {
            throw CompileFailure("holder and fixture do not compile:\n" + detail);
        }
        throw HarnessCrash("runner exited with status " + std::to_string(run.exitCode) + ": " + detail);
    }

    ConformanceReport report;
    report.results = parseRunnerOutput(run.stdoutText, fixture);
    report.runnerExitCode = run.exitCode;
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        report.matchesExpected.push_back(report.results[i].outcome == fixture.invocations[i].expected);
    }
    const int expectedExit = report.allMatch() ? 0 : 1;
    if (run.exitCode != expectedExit) {
        throw ProtocolError("runner exited with " + std::to_string(run.exitCode) + " but results imply " +
                            std::to_string(expectedExit));
    }
    return report;
}

std::string renderConformanceReport(const ConformanceReport& report, const FixtureSpec& fixture) {
    std::string out;
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const auto& r = report.results[i];
        std::string args = text::join(fixture.invocations[i].argExpressions, ", ");
        out += std::string(report.matchesExpected[i] ? "ok       " : "MISMATCH ") + r.oracleName + "(" + args +
               ") expected " + std::string(toString(fixture.invocations[i].expected)) + ", got " +
               std::string(toString(r.outcome));
        if (!r.message.empty()) out += ": " + r.message;
        out += "\n";
    }
    return out;
}

}  // namespace oracle_forge
