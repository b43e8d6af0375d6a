#include "oracle_forge/toolchain_validate.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <regex>
#include <set>
#include <system_error>

#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/java_scan.hpp"
#include "oracle_forge/subprocess.hpp"
#include "oracle_forge/text.hpp"

namespace oracle_forge {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kMarker = "// @oracle-id ";

std::string indent(std::string_view block, std::string_view pad) {
    std::string out;
    const auto lines = text::split(block, '\n');
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        if (!text::trim(lines[i]).empty()) out.append(pad).append(lines[i]);
    }
    return out;
}

bool containsAny(std::string_view hay, std::initializer_list<std::string_view> needles) {
    return std::any_of(needles.begin(), needles.end(), [&](auto n) { return hay.find(n) != std::string_view::npos; });
}

struct Span {
    std::string id;
    std::size_t first = 0;  // 0-based line indexes into the current text, inclusive
    std::size_t last = 0;
};

std::vector<Span> findSpans(const std::vector<std::string>& lines) {
    std::vector<Span> spans;
    std::size_t classClose = lines.size();
    for (std::size_t i = lines.size(); i-- > 0;) {
        if (text::trim(lines[i]) == "}") {
            classClose = i;
            break;
        }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view t = text::trim(lines[i]);
        if (!text::startsWith(t, kMarker)) continue;
        if (!spans.empty()) spans.back().last = i - 1;
        spans.push_back({std::string(text::trim(t.substr(kMarker.size()))), i, i});
    }
    if (!spans.empty()) spans.back().last = classClose > spans.back().first ? classClose - 1 : lines.size() - 1;
    return spans;
}

std::string stripCarriageReturn(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return std::string(line);
}

}  // namespace

std::string_view toString(ErrorClass c) {
    switch (c) {
    case ErrorClass::None:
        return "none";
    case ErrorClass::TypeError:
        return "typeError";
    case ErrorClass::SyntaxError:
        return "syntaxError";
    case ErrorClass::MissingHelper:
        return "missingHelper";
    case ErrorClass::NameCollision:
        return "nameCollision";
    case ErrorClass::Other:
        return "other";
    }
    return "";
}

std::string holderClassName(std::string_view fqcn) {
    std::string out = "OracleHolder_";
    for (char c : fqcn) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
    return out;
}

std::string wrapForCompile(const std::vector<OracleRecord>& records, std::string_view fqcn) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& r : records) {
        if (!seen.insert({r.name, r.paramSignature()}).second) {
            throw PreconditionViolation("oracles must be deduplicated before wrapping: " + r.name + "(" +
                                        r.paramSignature() + ") occurs more than once in " + std::string(fqcn));
        }
    }
    std::string out =
        "import java.util.*;\n"
        "import java.util.concurrent.*;\n"
        "import java.util.function.*;\n"
        "import java.util.stream.*;\n"
        "\n"
        "// Generated oracles for " + std::string(fqcn) + ".\n"
        "@SuppressWarnings({\"unchecked\", \"rawtypes\"})\n"
        "class " + holderClassName(fqcn) + "<E, K, V, T> {\n";
    for (const auto& r : records) {
        out += "\n    ";
        out.append(kMarker).append(r.id).append("\n");
        if (!r.docComment.empty()) out += indent(r.docComment, "    ") + "\n";
        out += indent(renderMethod(r), "    ") + "\n";
    }
    out += "}\n";
    return out;
}

std::vector<RawDiagnostic> parseDiagnostics(std::string_view output) {
    static const std::regex header(R"(^(.*?):(\d+): (error|warning): (.*)$)");
    static const std::regex detail(R"(^\s+(symbol|location|required|found|reason)\s*:.*$)");
    std::vector<RawDiagnostic> out;
    bool inError = false;
    bool sawSource = false;
    for (auto raw : text::split(output, '\n')) {
        const std::string line = stripCarriageReturn(raw);
        std::smatch m;
        if (std::regex_match(line, m, header)) {
            inError = m[3] == "error";
            sawSource = false;
            if (inError) out.push_back({std::stoul(m[2]), 0, m[4], {}});
            continue;
        }
        if (!inError) continue;
        const std::string_view t = text::trim(line);
        if (t == "^" && out.back().column == 0) {
            out.back().column = line.find('^') + 1;
        } else if (std::regex_match(line, detail)) {
            out.back().details.push_back(text::collapseSpaces(t));
        } else if (!sawSource) {
            sawSource = true;
        } else if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) {
            inError = false;  // "N errors" trailer
        }
    }
    return out;
}

ErrorClass classifyDiagnostic(const RawDiagnostic& d) {
    const std::string_view msg = d.message;
    if (containsAny(msg, {"already defined"})) return ErrorClass::NameCollision;
    if (containsAny(msg, {"cannot find symbol", "does not exist"})) {
        static const std::regex symbol(R"(^symbol\s*:\s*(class|interface|method|variable)\s+([A-Za-z_$][\w$]*).*$)");
        std::string kind, name;
        bool inHolder = false;
        for (const auto& det : d.details) {
            std::smatch m;
            if (std::regex_match(det, m, symbol)) {
                kind = m[1];
                name = m[2];
            }
            if (text::startsWith(det, "location") && det.find("OracleHolder_") != std::string::npos) inHolder = true;
        }
        if ((kind == "class" || kind == "interface") && !java::isKnownJdkType(name)) return ErrorClass::MissingHelper;
        if (kind == "method" && inHolder) return ErrorClass::MissingHelper;
        if (msg.find("package") != std::string_view::npos) return ErrorClass::MissingHelper;
        return ErrorClass::Other;
    }
    if (containsAny(msg, {"incompatible types", "inconvertible types", "bad operand type", "incomparable types",
                          "lossy conversion", "cannot be applied to", "cannot be converted", "cannot be dereferenced",
                          "unexpected type", "no suitable method", "no suitable constructor"})) {
        return ErrorClass::TypeError;
    }
    if (containsAny(msg, {"not a statement", "expected", "illegal start of", "unclosed", "reached end of file",
                          "orphaned", "without 'if'", "illegal character", "malformed", "unbalanced",
                          "unexpected token"})) {
        return ErrorClass::SyntaxError;
    }
    return ErrorClass::Other;
}

// ---------------------------------------------------------------------------

JavacToolchain::JavacToolchain(std::string executable) : executable_(std::move(executable)) {}

std::unique_ptr<JavacToolchain> JavacToolchain::locate(const std::string& flagValue) {
    std::string requested = flagValue;
    if (requested.empty()) {
        if (const char* env = std::getenv("ORACLE_FORGE_JAVAC"); env && *env) requested = env;
    }
    const std::string resolved = findExecutable(requested.empty() ? "javac" : requested);
    if (resolved.empty()) {
        throw ToolchainUnavailable(requested.empty() ? "no javac on PATH; pass --toolchain or set ORACLE_FORGE_JAVAC"
                                                     : "toolchain not executable: " + requested);
    }
    return std::make_unique<JavacToolchain>(resolved);
}

std::string JavacToolchain::version() {
    if (!version_.empty()) return version_;
    ProcessResult r;
    try {
        r = runProcess({executable_, "-version"}, std::chrono::seconds(60));
    } catch (const std::system_error& e) {
        throw ToolchainUnavailable(e.what());
    }
    // Older compilers print the version on standard error.
    std::string v(text::trim(r.stdoutText.empty() ? r.stderrText : r.stdoutText));
    if (r.exitCode != 0 || v.empty()) throw ToolchainCrashed("`" + executable_ + " -version` failed");
    version_ = v.substr(0, v.find('\n'));
    return version_;
}

CompileRun JavacToolchain::compile(const std::string& fileName, std::string_view source) {
    std::string pattern = (fs::temp_directory_path() / "oracle-forge-XXXXXX").string();
    if (!::mkdtemp(pattern.data())) throw ToolchainCrashed("cannot create scratch directory");
    const fs::path dir = pattern;
    struct Cleanup {
        fs::path p;
        ~Cleanup() {
            std::error_code ec;
            fs::remove_all(p, ec);
        }
    } cleanup{dir};

    const fs::path file = dir / fileName;
    text::writeFileAtomic(file.string(), source);
    fs::create_directories(dir / "classes");
    ProcessResult r;
    try {
        r = runProcess({executable_, "-encoding", "UTF-8", "-proc:none", "-Xmaxerrs", "10000", "-d",
                        (dir / "classes").string(), file.string()},
                       std::chrono::minutes(5));
    } catch (const std::system_error& e) {
        throw ToolchainCrashed(e.what());
    }
    if (r.timedOut) throw ToolchainCrashed("javac timed out");
    if (r.exitCode != 0 && r.exitCode != 1) {
        throw ToolchainCrashed("javac exited with status " + std::to_string(r.exitCode) + ": " + r.stderrText);
    }
    return {r.exitCode, r.stderrText + r.stdoutText};
}

StubToolchain::StubToolchain(std::vector<Rule> rules, std::string versionString)
    : rules_(std::move(rules)), version_(std::move(versionString)) {}

CompileRun StubToolchain::compile(const std::string& fileName, std::string_view source) {
    ++invocations_;
    std::string out;
    int errors = 0;
    const auto lines = text::split(source, '\n');
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (const auto& rule : rules_) {
            if (lines[i].find(rule.trigger) == std::string_view::npos) continue;
            std::size_t col = rule.caretAt.empty() ? std::string_view::npos : lines[i].find(rule.caretAt);
            if (col == std::string_view::npos) col = lines[i].find_first_not_of(" \t");
            out += fileName + ":" + std::to_string(i + 1) + ": error: " + rule.message + "\n";
            out.append(lines[i]).append("\n");
            out += std::string(col, ' ') + "^\n";
            for (const auto& d : rule.details) out += "  " + d + "\n";
            ++errors;
        }
    }
    if (errors) out += std::to_string(errors) + (errors == 1 ? " error\n" : " errors\n");
    return {errors ? 1 : 0, out};
}

// ---------------------------------------------------------------------------

std::vector<CompileOutcome> compileCheck(std::string_view holderSource, Toolchain& toolchain) {
    static const std::regex classDecl(R"(\bclass\s+([A-Za-z_$][\w$]*))");
    std::string fileName = "OracleHolder.java";
    {
        std::match_results<std::string_view::const_iterator> m;
        if (std::regex_search(holderSource.begin(), holderSource.end(), m, classDecl)) fileName = m[1].str() + ".java";
    }
    const std::string version = toolchain.version();

    std::vector<std::string> lines;
    for (auto l : text::split(holderSource, '\n')) lines.emplace_back(l);
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    std::vector<std::size_t> originalLine(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) originalLine[i] = i + 1;

    const auto allSpans = findSpans(lines);
    std::map<std::string, std::vector<RawDiagnostic>> failures;
    std::vector<RawDiagnostic> preamble;
    bool clean = false;

    while (true) {
        const CompileRun run = toolchain.compile(fileName, text::join(lines, "\n") + "\n");
        if (run.exitCode == 0) {
            clean = true;
            break;
        }
        auto diags = parseDiagnostics(run.output);
        if (diags.empty()) {
            throw ToolchainCrashed("compiler failed without diagnostics (status " + std::to_string(run.exitCode) +
                                   "): " + run.output.substr(0, 500));
        }
        const auto spans = findSpans(lines);
        std::set<std::string> failedNow;
        for (auto& d : diags) {
            const std::size_t idx = d.line - 1;
            d.line = idx < originalLine.size() ? originalLine[idx] : d.line;
            auto span = std::find_if(spans.begin(), spans.end(), [&](const Span& s) { return idx >= s.first && idx <= s.last; });
            if (span == spans.end() || idx >= lines.size()) {
                preamble.push_back(std::move(d));
            } else {
                failedNow.insert(span->id);
                failures[span->id].push_back(std::move(d));
            }
        }
        if (!preamble.empty() || failedNow.empty()) break;
        std::vector<std::string> keptLines;
        std::vector<std::size_t> keptOriginal;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const bool drop = std::any_of(spans.begin(), spans.end(), [&](const Span& s) {
                return failedNow.count(s.id) && i >= s.first && i <= s.last;
            });
            if (drop) continue;
            keptLines.push_back(std::move(lines[i]));
            keptOriginal.push_back(originalLine[i]);
        }
        lines = std::move(keptLines);
        originalLine = std::move(keptOriginal);
    }

    auto toDiagnostics = [](const std::vector<RawDiagnostic>& raw) {
        std::vector<Diagnostic> out;
        for (const auto& r : raw) {
            std::string msg = r.message;
            for (const auto& d : r.details) msg += "; " + d;
            out.push_back({r.line, r.column, msg});
        }
        return out;
    };

    std::vector<CompileOutcome> outcomes;
    for (const auto& span : allSpans) {
        CompileOutcome o;
        o.oracleId = span.id;
        o.toolchainVersion = version;
        if (auto it = failures.find(span.id); it != failures.end()) {
            o.status = CompileStatus::NonCompilable;
            o.diagnostics = toDiagnostics(it->second);
            o.errorClass = classifyDiagnostic(it->second.front());
        } else if (!clean) {
            // The preamble broke the compile, so nothing is known about this oracle.
            o.status = CompileStatus::Unchecked;
        }
        outcomes.push_back(std::move(o));
    }
    if (!preamble.empty()) {
        outcomes.push_back({std::string(kPreambleId), CompileStatus::NonCompilable, toDiagnostics(preamble),
                            ErrorClass::Other, version});
    }
    return outcomes;
}

void applyOutcomes(std::vector<OracleRecord>& records, const std::vector<CompileOutcome>& outcomes) {
    std::map<std::string, CompileStatus> byId;
    for (const auto& o : outcomes) byId[o.oracleId] = o.status;
    for (auto& r : records) {
        auto it = byId.find(r.id);
        r.compileStatus = it == byId.end() ? CompileStatus::Unchecked : it->second;
    }
}

std::string serializeOutcomes(std::string_view fqcn, const std::vector<CompileOutcome>& outcomes) {
    nlohmann::ordered_json root;
    root["schemaVersion"] = 1;
    root["targetClass"] = fqcn;
    root["outcomes"] = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
        nlohmann::ordered_json j;
        j["oracleId"] = o.oracleId;
        j["status"] = std::string(toString(o.status));
        j["diagnostics"] = nlohmann::ordered_json::array();
        for (const auto& d : o.diagnostics) {
            j["diagnostics"].push_back({{"line", d.line}, {"column", d.column}, {"message", d.message}});
        }
        j["errorClass"] = std::string(toString(o.errorClass));
        j["toolchainVersion"] = o.toolchainVersion;
        root["outcomes"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

std::vector<CompileOutcome> parseOutcomes(std::string_view json) {
    auto pick = [](const std::string& s, auto values, const char* what) {
        for (auto v : values) {
            if (toString(v) == s) return v;
        }
        throw InvalidArtifact(std::string("unknown ") + what + " \"" + s + "\"");
    };
    try {
        const auto root = nlohmann::json::parse(json);
        if (root.at("schemaVersion").get<int>() != 1) throw InvalidArtifact("unsupported outcomes schemaVersion");
        std::vector<CompileOutcome> out;
        for (const auto& j : root.at("outcomes")) {
            CompileOutcome o;
            o.oracleId = j.at("oracleId").get<std::string>();
            o.status = pick(j.at("status").get<std::string>(),
                            std::array{CompileStatus::Unchecked, CompileStatus::Compilable, CompileStatus::NonCompilable},
                            "status");
            for (const auto& d : j.at("diagnostics")) {
                o.diagnostics.push_back({d.at("line").get<std::size_t>(), d.at("column").get<std::size_t>(),
                                         d.at("message").get<std::string>()});
            }
            o.errorClass = pick(j.at("errorClass").get<std::string>(),
                                std::array{ErrorClass::None, ErrorClass::TypeError, ErrorClass::SyntaxError,
                                           ErrorClass::MissingHelper, ErrorClass::NameCollision, ErrorClass::Other},
                                "errorClass");
            o.toolchainVersion = j.value("toolchainVersion", "");
            out.push_back(std::move(o));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed outcomes file: ") + e.what());
    }
}

}  // namespace oracle_forge
