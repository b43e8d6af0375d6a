#include "oracle_forge/oracle_extract.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/java_scan.hpp"
#include "oracle_forge/log.hpp"
#include "oracle_forge/text.hpp"

namespace oracle_forge {
namespace {

using java::Token;
using java::TokenKind;
constexpr std::size_t npos = std::string::npos;

bool isFenceLine(std::string_view line) { return text::startsWith(text::trim(line), "```"); }

bool isIndentedCode(std::string_view line) {
    return text::startsWith(line, "    ") || text::startsWith(line, "\t");
}

std::optional<std::string> headingText(std::string_view rawLine) {
    static const std::regex listItem(R"(^(?:\d+[.)]|[-*+])\s+)");
    const std::string_view line = text::trim(rawLine);
    if (line.empty()) return std::nullopt;
    std::string s(line);
    bool heading = false;
    if (s.front() == '#') {
        heading = true;
        s.erase(0, s.find_first_not_of('#'));
    }
    std::smatch m;
    if (std::regex_search(s, m, listItem)) {
        heading = true;
        s = m.suffix();
    }
    const bool bold = text::startsWith(text::trim(s), "**") && text::endsWith(text::trim(s), "**");
    if (bold || (s.back() == ':' && s.size() < 120)) heading = true;
    if (!heading) return std::nullopt;
    std::string cleaned;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '`') continue;
        if ((s[i] == '*' || s[i] == '_') && i + 1 < s.size() && s[i + 1] == s[i]) {
            ++i;
            continue;
        }
        cleaned += s[i];
    }
    std::string out(text::trim(cleaned));
    while (!out.empty() && (out.back() == ':' || out.back() == '.')) out.pop_back();
    out = std::string(text::trim(out));
    if (out.empty()) return std::nullopt;
    return out;
}

std::string labelFromHeading(const std::string& heading) {
    static const std::regex forX(R"(^for (?:the )?(.+?)(?: property)?, (?:the )?(?:test )?oracle.*$)", std::regex::icase);
    static const std::regex xProperty(R"(^(.+?) (?:property|oracle|check)$)", std::regex::icase);
    static const std::regex oracleFor(R"(^(?:test )?oracle (?:for|to check|checking) (.+)$)", std::regex::icase);
    static const std::regex forThe(R"(^for (?:the |a |an )?(.+)$)", std::regex::icase);
    std::string label = heading;
    std::smatch m;
    if (std::regex_match(label, m, forX) || std::regex_match(label, m, oracleFor) || std::regex_match(label, m, forThe)) {
        label = m[1];
    }
    if (std::regex_match(label, m, xProperty)) label = m[1];
    // Sentence case only; identifiers such as isEmpty keep their spelling.
    if (label.size() > 1 && !std::isupper(static_cast<unsigned char>(label[1]))) {
        label[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(label[0])));
    }
    return label;
}

std::string labelFromDocComment(std::string_view doc) {
    std::string prose;
    for (auto line : text::split(doc, '\n')) {
        std::string_view l = text::trim(line);
        for (std::string_view marker : {"/**", "/*", "*/", "//", "*"}) {
            while (text::startsWith(l, marker)) l = text::trim(l.substr(marker.size()));
        }
        if (text::endsWith(l, "*/")) l = text::trim(l.substr(0, l.size() - 2));
        if (text::startsWith(l, "@")) break;
        prose += std::string(l) + "\n";
    }
    std::string flat = text::collapseSpaces(prose);
    const std::size_t stop = flat.find(". ");
    if (stop != npos) flat.resize(stop);
    while (!flat.empty() && flat.back() == '.') flat.pop_back();
    static const std::regex lead(
        R"(^(?:test )?oracle (?:to check (?:if |whether |that )?|for checking (?:if |whether |that )?|checking |for )(.+)$)",
        std::regex::icase);
    std::smatch m;
    if (std::regex_match(flat, m, lead)) flat = m[1];
    return flat;
}

std::string simpleTypeName(std::string_view t) { return eraseTypeName(t); }

std::set<std::string> documentedExceptions(const PartitionUnit& unit) {
    std::set<std::string> out;
    auto add = [&](const MethodDoc& m) {
        for (const auto& t : m.throwsTags) out.insert(simpleTypeName(t.exceptionType));
    };
    add(unit.anchor);
    for (const auto& r : unit.related) add(r);
    return out;
}

struct BodyScan {
    bool catchesDocumented = false;
    bool comparesOutsideCatch = false;
};

bool looksGenericOpen(const std::vector<Token>& code, std::size_t i) {
    if (i == 0) return false;
    const auto& prev = code[i - 1];
    const bool typeLike = (prev.kind == TokenKind::Identifier && std::isupper(static_cast<unsigned char>(prev.text[0]))) ||
                          prev.is(".");
    if (!typeLike) return false;
    const std::size_t after = java::skipAngles(code, i);
    if (after == npos) return false;
    if (after >= code.size()) return true;
    const auto& next = code[after];
    return next.kind == TokenKind::Identifier || next.is("(") || next.is(")") || next.is(",") || next.is("[") ||
           next.is("::") || next.is("...") || next.is(">") || next.is(".");
}

BodyScan scanBody(const std::vector<Token>& code, std::size_t open, std::size_t close,
                  const std::set<std::string>& documented) {
    BodyScan scan;
    std::vector<std::pair<std::size_t, std::size_t>> handlers;
    for (std::size_t i = open; i < close; ++i) {
        if (!code[i].is("catch") || i + 1 >= close || !code[i + 1].is("(")) continue;
        const std::size_t pclose = java::matchClose(code, i + 1);
        if (pclose == npos || pclose + 1 >= close || !code[pclose + 1].is("{")) continue;
        // Types are every identifier chain split by '|', minus the variable name.
        std::string current;
        for (std::size_t k = i + 2; k + 1 < pclose; ++k) {
            if (code[k].is("|")) {
                if (documented.count(simpleTypeName(current))) scan.catchesDocumented = true;
                current.clear();
            } else if (!code[k].is("final")) {
                current.append(code[k].text);
            }
        }
        if (documented.count(simpleTypeName(current))) scan.catchesDocumented = true;
        const std::size_t hclose = java::matchClose(code, pclose + 1);
        handlers.emplace_back(i, hclose == npos ? close : hclose);
    }
    auto inHandler = [&](std::size_t k) {
        return std::any_of(handlers.begin(), handlers.end(), [k](auto& h) { return k >= h.first && k <= h.second; });
    };
    for (std::size_t i = open + 1; i < close; ++i) {
        if (inHandler(i)) continue;
        const auto& t = code[i];
        if (t.is("<") && looksGenericOpen(code, i)) {
            i = java::skipAngles(code, i) - 1;
            continue;
        }
        const bool cmp = t.is("==") || t.is("!=") || t.is("<") || t.is(">") || t.is("<=") || t.is(">=") ||
                         (t.is("equals") && i > 0 && (code[i - 1].is(".") || code[i - 1].is("::")) && i + 1 < close &&
                          code[i + 1].is("("));
        if (cmp) scan.comparesOutsideCatch = true;
    }
    return scan;
}

std::vector<std::string> targetMethodsOf(const std::vector<Token>& code, std::size_t open, std::size_t close,
                                         const PartitionUnit& unit) {
    std::vector<std::string> candidates{unit.anchor.name};
    for (const auto& r : unit.related) candidates.push_back(r.name);
    std::vector<std::string> hits;
    for (const auto& name : candidates) {
        if (std::find(hits.begin(), hits.end(), name) != hits.end()) continue;
        for (std::size_t i = open + 1; i < close; ++i) {
            if (code[i].text != name || i == 0) continue;
            const bool call = (code[i - 1].is(".") && i + 1 < close && code[i + 1].is("(")) || code[i - 1].is("::");
            if (call) {
                hits.push_back(name);
                break;
            }
        }
    }
    if (hits.empty()) hits.push_back(unit.anchor.name);
    return hits;
}

bool isOverrideOfObjectMethod(const java::MethodHeader& h) {
    if (std::find(h.annotations.begin(), h.annotations.end(), "@Override") != h.annotations.end()) return true;
    return h.name == "equals" && h.params.size() == 1;
}

// Visits method declarations at member level, descending into type bodies.
template <typename Fn>
void forEachMethod(const std::vector<Token>& code, std::size_t begin, std::size_t end, Fn&& fn) {
    std::size_t i = begin;
    while (i < end) {
        if (code[i].is(";") || code[i].is("}")) {
            ++i;
            continue;
        }
        if (auto decl = java::parseTypeDeclAt(code, i, end)) {
            forEachMethod(code, decl->bodyOpen + 1, decl->bodyClose, fn);
            i = decl->bodyClose + 1;
            continue;
        }
        if (auto h = java::parseMethodAt(code, i, end)) {
            fn(*h);
            i = h->end + 1;
            continue;
        }
        i = java::skipMember(code, i, end);
    }
}

std::optional<java::MethodHeader> headerOf(const java::Lexed& lexed) {
    const auto& code = lexed.code;
    std::optional<java::MethodHeader> found;
    forEachMethod(code, 0, code.size(), [&](const java::MethodHeader& h) {
        if (!found && h.bodyOpen != npos) found = h;
    });
    return found;
}

}  // namespace

std::string_view toString(OracleKind k) {
    switch (k) {
    case OracleKind::Assertion:
        return "assertion";
    case OracleKind::Exception:
        return "exception";
    case OracleKind::Hybrid:
        return "hybrid";
    }
    return "";
}

std::string_view toString(CompileStatus s) {
    switch (s) {
    case CompileStatus::Unchecked:
        return "unchecked";
    case CompileStatus::Compilable:
        return "compilable";
    case CompileStatus::NonCompilable:
        return "nonCompilable";
    }
    return "";
}

std::string_view toString(Correctness c) {
    switch (c) {
    case Correctness::Unjudged:
        return "unjudged";
    case Correctness::Correct:
        return "correct";
    case Correctness::Incorrect:
        return "incorrect";
    }
    return "";
}

std::string OracleRecord::paramSignature() const {
    std::vector<std::string> erased;
    for (const auto& p : paramDecls) erased.push_back(eraseTypeName(p.typeName));
    return text::join(erased, ",");
}

std::vector<CodeBlock> findCodeBlocks(std::string_view response) {
    const auto lines = text::split(response, '\n');
    std::vector<CodeBlock> blocks;
    std::optional<std::string> lastHeading;

    const bool hasFence = std::any_of(lines.begin(), lines.end(), isFenceLine);
    if (hasFence) {
        std::size_t i = 0;
        while (i < lines.size()) {
            if (!isFenceLine(lines[i])) {
                if (auto h = headingText(lines[i])) lastHeading = h;
                ++i;
                continue;
            }
            CodeBlock block;
            block.heading = lastHeading;
            block.firstLine = i + 1;
            std::vector<std::string> body;
            ++i;
            while (i < lines.size() && !isFenceLine(lines[i])) body.emplace_back(lines[i++]);
            ++i;  // closing fence (or end of input)
            block.text = text::join(body, "\n");
            blocks.push_back(std::move(block));
        }
        return blocks;
    }

    std::size_t i = 0;
    while (i < lines.size()) {
        if (!isIndentedCode(lines[i]) || text::trim(lines[i]).empty()) {
            if (auto h = headingText(lines[i])) lastHeading = h;
            ++i;
            continue;
        }
        CodeBlock block;
        block.fenced = false;
        block.heading = lastHeading;
        block.firstLine = i;
        std::vector<std::string> body;
        while (i < lines.size() && (isIndentedCode(lines[i]) || text::trim(lines[i]).empty())) body.emplace_back(lines[i++]);
        while (!body.empty() && text::trim(body.back()).empty()) body.pop_back();
        block.text = text::join(body, "\n");
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<OracleRecord> extractOracles(const LlmExchange& exchange, const PartitionUnit& unit) {
    if (text::trim(exchange.responseText).empty()) throw NoOraclesFound("empty response for " + unit.id());

    std::vector<OracleRecord> records;
    for (const auto& block : findCodeBlocks(exchange.responseText)) {
        const auto lexed = java::tokenize(block.text);
        const auto& code = lexed.code;
        std::size_t prevEnd = 0;
        bool firstInBlock = true;
        std::size_t cursor = 0;
        forEachMethod(code, 0, code.size(), [&](const java::MethodHeader& h) {
            const std::size_t declStart = code[h.begin].offset;
            // Comments between the previous code token and this declaration.
            prevEnd = h.begin > 0 ? code[h.begin - 1].end() : 0;
            const auto comments = java::commentsBetween(lexed, std::max(prevEnd, cursor), declStart);
            cursor = code[h.end].end();
            if (h.bodyOpen == npos || h.returnType.empty() || isOverrideOfObjectMethod(h)) return;
            if (h.returnType != "boolean") {
                log::warn("skipping non-boolean method " + h.name + " (returns " + h.returnType + ") in response for " +
                          unit.id());
                return;
            }
            OracleRecord rec;
            rec.name = h.name;
            for (const auto& p : h.params) rec.paramDecls.push_back({p.type, p.name});
            rec.returnType = h.returnType;
            rec.bodySource = java::dedent(block.text.substr(declStart, code[h.end].end() - declStart), code[h.begin].column);
            if (!comments.empty()) {
                // The contiguous run of comments directly above the declaration.
                std::size_t first = comments.size() - 1;
                while (first > 0) {
                    const std::string_view gap =
                        std::string_view(block.text).substr(comments[first - 1].end(), comments[first].offset - comments[first - 1].end());
                    if (text::countOccurrences(gap, "\n") > 1) break;
                    --first;
                }
                const std::size_t from = comments[first].offset;
                const std::size_t to = comments.back().end();
                rec.docComment = java::dedent(block.text.substr(from, to - from), comments[first].column);
            }
            rec.targetClass = unit.classFqcn;
            rec.targetMethods = targetMethodsOf(code, h.bodyOpen, h.end, unit);

            const std::string docLabel = rec.docComment.empty() ? std::string() : labelFromDocComment(rec.docComment);
            const std::string headLabel = block.heading ? labelFromHeading(*block.heading) : std::string();
            if (firstInBlock) {
                rec.propertyLabel = !headLabel.empty() ? headLabel : !docLabel.empty() ? docLabel : "unlabeled";
            } else {
                rec.propertyLabel = !docLabel.empty() ? docLabel : !headLabel.empty() ? headLabel : "unlabeled";
            }
            firstInBlock = false;

            rec.kind = classifyKind(rec, unit);
            if (auto unknown = unknownTypeReferences(rec); !unknown.empty()) {
                rec.notes.push_back("requiresHelpers: " + text::join(unknown, ", "));
            }
            records.push_back(std::move(rec));
        });
    }
    if (records.empty()) {
        throw NoOraclesFound("response for " + unit.id() + " contains no boolean-returning methods");
    }
    for (std::size_t k = 0; k < records.size(); ++k) {
        records[k].id = unit.id() + "#" + std::to_string(k + 1);
    }
    return records;
}

OracleKind classifyKind(const OracleRecord& record, const PartitionUnit& unit) {
    const auto lexed = java::tokenize(record.bodySource);
    const auto header = headerOf(lexed);
    if (!header) return OracleKind::Assertion;
    const auto scan = scanBody(lexed.code, header->bodyOpen, header->end, documentedExceptions(unit));
    if (!scan.catchesDocumented) return OracleKind::Assertion;
    return scan.comparesOutsideCatch ? OracleKind::Hybrid : OracleKind::Exception;
}

std::vector<OracleRecord> dedupeNames(std::vector<OracleRecord> records) {
    std::set<std::pair<std::string, std::string>> taken;
    std::map<std::pair<std::string, std::string>, int> nextSuffix;
    for (auto& rec : records) {
        const std::string sig = rec.paramSignature();
        if (taken.insert({rec.name, sig}).second) continue;
        int& n = nextSuffix[{rec.name, sig}];
        if (n < 2) n = 2;
        std::string candidate;
        do {
            candidate = rec.name + "_" + std::to_string(n++);
        } while (taken.count({candidate, sig}));
        taken.insert({candidate, sig});
        rec.name = candidate;
    }
    return records;
}

std::string renderMethod(const OracleRecord& record) {
    const auto lexed = java::tokenize(record.bodySource);
    const auto header = headerOf(lexed);
    if (!header) return record.bodySource;
    const auto& tok = lexed.code[header->nameToken];
    std::string out = record.bodySource;
    out.replace(tok.offset, tok.text.size(), record.name);
    return out;
}

std::vector<std::string> unknownTypeReferences(const OracleRecord& record) {
    const auto lexed = java::tokenize(record.bodySource);
    const auto& code = lexed.code;
    const auto header = headerOf(lexed);
    std::set<std::string> typeVars = {"E", "K", "V", "T"};
    if (header && !header->typeParameters.empty()) {
        const auto inner = java::tokenize(header->typeParameters);
        for (std::size_t i = 0; i + 1 < inner.code.size(); ++i) {
            if ((inner.code[i].is("<") || inner.code[i].is(",")) && inner.code[i + 1].kind == TokenKind::Identifier) {
                typeVars.insert(std::string(inner.code[i + 1].text));
            }
        }
    }
    std::vector<std::string> unknown;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto& t = code[i];
        if (t.kind != TokenKind::Identifier || !std::isupper(static_cast<unsigned char>(t.text[0]))) continue;
        if (i > 0 && (code[i - 1].is(".") || code[i - 1].is("@"))) continue;
        const std::string name(t.text);
        // ALL_CAPS identifiers are constants, not types.
        if (std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isupper(c) || std::isdigit(c) || c == '_'; }) &&
            name.size() > 1) {
            continue;
        }
        if (typeVars.count(name) || java::isKnownJdkType(name)) continue;
        if (std::find(unknown.begin(), unknown.end(), name) == unknown.end()) unknown.push_back(name);
    }
    return unknown;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Enum, std::size_t N>
Enum enumFromString(const std::string& s, const std::array<Enum, N>& values, const char* what) {
    for (auto v : values) {
        if (toString(v) == s) return v;
    }
    throw InvalidArtifact(std::string("unknown ") + what + " \"" + s + "\"");
}

}  // namespace

std::string serializeCorpus(const std::vector<OracleRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["name"] = r.name;
        j["paramDecls"] = nlohmann::ordered_json::array();
        for (const auto& p : r.paramDecls) j["paramDecls"].push_back({{"typeName", p.typeName}, {"paramName", p.paramName}});
        j["returnType"] = r.returnType;
        j["bodySource"] = r.bodySource;
        j["docComment"] = r.docComment;
        j["kind"] = std::string(toString(r.kind));
        j["targetClass"] = r.targetClass;
        j["targetMethods"] = r.targetMethods;
        j["propertyLabel"] = r.propertyLabel;
        j["compileStatus"] = std::string(toString(r.compileStatus));
        j["correctnessStatus"] = std::string(toString(r.correctnessStatus));
        j["notes"] = r.notes;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<OracleRecord> parseCorpus(std::string_view json) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArtifact(std::string("corpus is not valid JSON: ") + e.what());
    }
    if (!root.is_array()) throw InvalidArtifact("corpus must be a JSON array of oracle records");
    std::vector<OracleRecord> out;
    std::set<std::string> ids;
    try {
        for (const auto& j : root) {
            OracleRecord r;
            r.id = j.at("id").get<std::string>();
            r.name = j.at("name").get<std::string>();
            for (const auto& p : j.at("paramDecls")) {
                r.paramDecls.push_back({p.at("typeName").get<std::string>(), p.at("paramName").get<std::string>()});
            }
            r.returnType = j.at("returnType").get<std::string>();
            r.bodySource = j.at("bodySource").get<std::string>();
            r.docComment = j.value("docComment", "");
            r.kind = enumFromString(j.at("kind").get<std::string>(),
                                    std::array{OracleKind::Assertion, OracleKind::Exception, OracleKind::Hybrid}, "kind");
            r.targetClass = j.at("targetClass").get<std::string>();
            r.targetMethods = j.value("targetMethods", std::vector<std::string>{});
            r.propertyLabel = j.value("propertyLabel", "unlabeled");
            r.compileStatus = enumFromString(
                j.value("compileStatus", "unchecked"),
                std::array{CompileStatus::Unchecked, CompileStatus::Compilable, CompileStatus::NonCompilable},
                "compileStatus");
            r.correctnessStatus =
                enumFromString(j.value("correctnessStatus", "unjudged"),
                               std::array{Correctness::Unjudged, Correctness::Correct, Correctness::Incorrect},
                               "correctnessStatus");
            r.notes = j.value("notes", std::vector<std::string>{});
            if (r.returnType != "boolean") throw InvalidArtifact("oracle " + r.id + " does not return boolean");
            if (!isJavaIdentifier(r.name)) throw InvalidArtifact("oracle " + r.id + " has invalid name " + r.name);
            if (!ids.insert(r.id).second) throw InvalidArtifact("duplicate oracle id " + r.id);
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed oracle record: ") + e.what());
    }
    return out;
}

}  // namespace oracle_forge
