#include "oracle_forge/eval_harness.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"

namespace oracle_forge {
namespace {

using ojson = nlohmann::ordered_json;

void requireOrdered(std::uint64_t child, std::uint64_t parent, const std::string& what) {
    if (child > parent) throw PreconditionViolation(what);
}

std::vector<std::string> orderedClasses(const std::vector<std::string>& preferred, const std::vector<OracleRecord>& corpus) {
    std::vector<std::string> out;
    auto add = [&](const std::string& c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    for (const auto& c : preferred) add(c);
    for (const auto& r : corpus) add(r.targetClass);
    return out;
}

// Renders rows as a left-aligned text grid with a rule under the header.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string line;
        for (std::size_t i = 0; i < rows[k].size(); ++i) {
            if (i) line += "  ";
            line += fmt::format("{:<{}}", rows[k][i], width[i]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
        if (k == 0) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
            out += std::string(total, '-') + "\n";
        }
    }
    return out;
}

std::string markdown(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out += "|";
        for (const auto& cell : rows[k]) out += " " + cell + " |";
        out += "\n";
        if (k == 0) {
            out += "|";
            for (std::size_t i = 0; i < rows[k].size(); ++i) out += i == 0 ? "---|" : "---:|";
            out += "\n";
        }
    }
    return out;
}

std::string countWithPercent(std::uint64_t n, const Ratio& r) {
    return fmt::format("{}({}%)", n, r.percent("0.0"));
}

std::vector<std::vector<std::string>> compilabilityCells(const EvalReport& report) {
    std::vector<std::vector<std::string>> rows{{"Class", "#Methods", "#Oracles", "#Compilable Oracles", "#Correct Oracles"}};
    auto add = [&](const CompilabilityRow& r) {
        rows.push_back({r.className, std::to_string(r.nMethods), std::to_string(r.nOracles),
                        countWithPercent(r.nCompilable, r.compilable()), countWithPercent(r.nCorrect, r.correct())});
    };
    for (const auto& r : report.compilabilityRows) add(r);
    if (!report.compilabilityRows.empty()) add(report.compilabilityTotal());
    return rows;
}

std::vector<std::vector<std::string>> coverageCells(const std::vector<CoverageRow>& body, const CoverageRow& total) {
    std::vector<std::vector<std::string>> rows{
        {"Class", "#Documented", "#Generated", "#Checked", "Precision(%)", "Recall(%)"}};
    auto add = [&](const CoverageRow& r) {
        rows.push_back({r.className, std::to_string(r.nDocumented), std::to_string(r.nGenerated),
                        std::to_string(r.nChecked), r.precision().percent(), r.recall().percent()});
    };
    for (const auto& r : body) add(r);
    if (!body.empty()) add(total);
    return rows;
}

ojson compilabilityJson(const CompilabilityRow& r) {
    return {{"class", r.className},       {"nMethods", r.nMethods},
            {"nOracles", r.nOracles},     {"nCompilable", r.nCompilable},
            {"nCorrect", r.nCorrect},     {"pctCompilable", r.compilable().percent("0.0")},
            {"pctCorrect", r.correct().percent("0.0")}};
}

ojson coverageJson(const CoverageRow& r) {
    return {{"class", r.className},
            {"nDocumented", r.nDocumented},
            {"nGenerated", r.nGenerated},
            {"nChecked", r.nChecked},
            {"precision", r.precision().percent()},
            {"recall", r.recall().percent()}};
}

template <typename Enum, std::size_t N>
Enum pickEnum(const std::string& s, const std::array<Enum, N>& values, const char* what) {
    for (auto v : values) {
        if (toString(v) == s) return v;
    }
    throw InvalidArtifact(std::string("unknown ") + what + " \"" + s + "\"");
}

}  // namespace

std::string_view toString(PropertyKind k) { return k == PropertyKind::Assertion ? "assertion" : "exception"; }

std::optional<std::uint64_t> Ratio::permille() const {
    if (den == 0) return std::nullopt;
    return (2000 * num + den) / (2 * den);
}

std::string Ratio::percent(std::string_view zeroDenominator) const {
    const auto p = permille();
    if (!p) return std::string(zeroDenominator);
    return fmt::format("{}.{}", *p / 10, *p % 10);
}

CompilabilityRow makeCompilabilityRow(std::string className, std::uint64_t nMethods, std::uint64_t nOracles,
                                      std::uint64_t nCompilable, std::uint64_t nCorrect) {
    requireOrdered(nCompilable, nOracles, "nCompilable exceeds nOracles for " + className);
    requireOrdered(nCorrect, nOracles, "nCorrect exceeds nOracles for " + className);
    return {std::move(className), nMethods, nOracles, nCompilable, nCorrect};
}

CoverageRow makeCoverageRow(std::string className, std::uint64_t nDocumented, std::uint64_t nGenerated,
                            std::uint64_t nChecked) {
    requireOrdered(nGenerated, nDocumented, "nGenerated exceeds nDocumented for " + className);
    requireOrdered(nChecked, nGenerated, "nChecked exceeds nGenerated for " + className);
    return {std::move(className), nDocumented, nGenerated, nChecked};
}

CompilabilityRow totalOf(const std::vector<CompilabilityRow>& rows) {
    CompilabilityRow t{"Total"};
    for (const auto& r : rows) {
        t.nMethods += r.nMethods;
        t.nOracles += r.nOracles;
        t.nCompilable += r.nCompilable;
        t.nCorrect += r.nCorrect;
    }
    return t;
}

CoverageRow totalOf(const std::vector<CoverageRow>& rows) {
    CoverageRow t{"Total"};
    for (const auto& r : rows) {
        t.nDocumented += r.nDocumented;
        t.nGenerated += r.nGenerated;
        t.nChecked += r.nChecked;
    }
    return t;
}

std::vector<CompilabilityRow> computeCompilability(const std::vector<OracleRecord>& corpus,
                                                   const std::vector<CompileOutcome>& outcomes,
                                                   const std::vector<AnnotationEntry>& annotations,
                                                   const std::map<std::string, std::uint64_t>& methodCounts,
                                                   const std::vector<std::string>& classOrder) {
    std::map<std::string, const OracleRecord*> byId;
    for (const auto& r : corpus) byId[r.id] = &r;
    std::map<std::string, CompileStatus> status;
    for (const auto& o : outcomes) status[o.oracleId] = o.status;
    std::set<std::string> correct;
    for (const auto& a : annotations) {
        if (!byId.count(a.oracleId)) throw DanglingAnnotation("annotation references unknown oracle " + a.oracleId);
        if (a.correct) correct.insert(a.oracleId);
    }

    std::vector<CompilabilityRow> rows;
    for (const auto& cls : orderedClasses(classOrder, corpus)) {
        CompilabilityRow row{cls};
        if (auto it = methodCounts.find(cls); it != methodCounts.end()) row.nMethods = it->second;
        for (const auto& r : corpus) {
            if (r.targetClass != cls) continue;
            ++row.nOracles;
            auto it = status.find(r.id);
            const CompileStatus s = it == status.end() ? r.compileStatus : it->second;
            if (s == CompileStatus::Compilable) ++row.nCompilable;
            if (correct.count(r.id)) ++row.nCorrect;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CoverageRow> computeCoverage(const std::vector<PropertyCatalogEntry>& catalog,
                                         const std::vector<OracleRecord>& corpus,
                                         const std::vector<AnnotationEntry>& annotations, PropertyKind kind) {
    std::set<std::string> oracleIds;
    for (const auto& r : corpus) oracleIds.insert(r.id);
    std::map<std::string, const PropertyCatalogEntry*> properties;
    for (const auto& e : catalog) properties[e.id] = &e;

    std::set<std::string> generated, checked;
    for (const auto& a : annotations) {
        if (!oracleIds.count(a.oracleId)) throw DanglingAnnotation("annotation references unknown oracle " + a.oracleId);
        for (const auto& pid : a.matchedPropertyIds) {
            if (!properties.count(pid)) {
                throw DanglingAnnotation("annotation for " + a.oracleId + " references unknown property " + pid);
            }
            generated.insert(pid);
            if (a.correct) checked.insert(pid);
        }
    }

    std::vector<CoverageRow> rows;
    for (const auto& e : catalog) {
        auto row = std::find_if(rows.begin(), rows.end(), [&](const CoverageRow& r) { return r.className == e.targetClass; });
        if (row == rows.end()) {
            rows.push_back(CoverageRow{e.targetClass});
            row = rows.end() - 1;
        }
        if (e.kind != kind) continue;
        ++row->nDocumented;
        if (generated.count(e.id)) ++row->nGenerated;
        if (checked.count(e.id)) ++row->nChecked;
    }
    return rows;
}

ReportFormat parseReportFormat(std::string_view s) {
    if (s == "table") return ReportFormat::Table;
    if (s == "json") return ReportFormat::Json;
    if (s == "markdown") return ReportFormat::Markdown;
    throw InvalidConfig("unknown report format \"" + std::string(s) + "\" (expected table, json or markdown)");
}

std::string renderReport(const EvalReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: {
        ojson root;
        root["schemaVersion"] = 1;
        auto section = [](const auto& rows, const auto& total, auto toJson) {
            ojson s;
            s["rows"] = ojson::array();
            for (const auto& r : rows) s["rows"].push_back(toJson(r));
            s["total"] = toJson(total);
            return s;
        };
        root["compilability"] = section(report.compilabilityRows, report.compilabilityTotal(), compilabilityJson);
        root["assertion"] = section(report.assertionRows, report.assertionTotal(), coverageJson);
        root["exception"] = section(report.exceptionRows, report.exceptionTotal(), coverageJson);
        return root.dump(2) + "\n";
    }
    case ReportFormat::Markdown:
        return "## Evaluation of Compilability\n\n" + markdown(compilabilityCells(report)) +
               "\n## Evaluation of Assertion Oracles\n\n" +
               markdown(coverageCells(report.assertionRows, report.assertionTotal())) +
               "\n## Evaluation of Exception Oracles\n\n" +
               markdown(coverageCells(report.exceptionRows, report.exceptionTotal()));
    case ReportFormat::Table:
        return "Compilability\n\n" + grid(compilabilityCells(report)) + "\nAssertion oracles\n\n" +
               grid(coverageCells(report.assertionRows, report.assertionTotal())) + "\nException oracles\n\n" +
               grid(coverageCells(report.exceptionRows, report.exceptionTotal()));
    }
    return {};
}

EvalReport parseReportJson(std::string_view json) {
    try {
        const auto root = nlohmann::json::parse(json);
        if (root.at("schemaVersion").get<int>() != 1) throw InvalidArtifact("unsupported report schemaVersion");
        EvalReport report;
        for (const auto& r : root.at("compilability").at("rows")) {
            report.compilabilityRows.push_back(makeCompilabilityRow(
                r.at("class").get<std::string>(), r.at("nMethods").get<std::uint64_t>(),
                r.at("nOracles").get<std::uint64_t>(), r.at("nCompilable").get<std::uint64_t>(),
                r.at("nCorrect").get<std::uint64_t>()));
        }
        auto coverage = [&](const char* key, std::vector<CoverageRow>& into) {
            for (const auto& r : root.at(key).at("rows")) {
                into.push_back(makeCoverageRow(r.at("class").get<std::string>(), r.at("nDocumented").get<std::uint64_t>(),
                                               r.at("nGenerated").get<std::uint64_t>(),
                                               r.at("nChecked").get<std::uint64_t>()));
            }
        };
        coverage("assertion", report.assertionRows);
        coverage("exception", report.exceptionRows);
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed report: ") + e.what());
    } catch (const PreconditionViolation& e) {
        throw InvalidArtifact(std::string("inconsistent report: ") + e.what());
    }
}

std::vector<PropertyCatalogEntry> parseCatalog(std::string_view json) {
    std::vector<PropertyCatalogEntry> out;
    std::set<std::string> ids;
    try {
        const auto root = nlohmann::json::parse(json);
        if (!root.is_array()) throw InvalidArtifact("catalog must be a JSON array");
        for (const auto& j : root) {
            PropertyCatalogEntry e;
            e.id = j.at("id").get<std::string>();
            e.targetClass = j.at("targetClass").get<std::string>();
            e.targetMethod = j.at("targetMethod").get<std::string>();
            e.kind = pickEnum(j.at("kind").get<std::string>(), std::array{PropertyKind::Assertion, PropertyKind::Exception},
                              "property kind");
            e.description = j.value("description", "");
            if (j.contains("exceptionType") && !j["exceptionType"].is_null()) {
                e.exceptionType = j["exceptionType"].get<std::string>();
            }
            if (e.kind == PropertyKind::Exception && (!e.exceptionType || e.exceptionType->empty())) {
                throw InvalidArtifact("exception property " + e.id + " has no exceptionType");
            }
            if (!ids.insert(e.id).second) throw InvalidArtifact("duplicate property id " + e.id);
            out.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed catalog: ") + e.what());
    }
    return out;
}

std::string serializeCatalog(const std::vector<PropertyCatalogEntry>& catalog) {
    ojson arr = ojson::array();
    for (const auto& e : catalog) {
        ojson j{{"id", e.id},
                {"targetClass", e.targetClass},
                {"targetMethod", e.targetMethod},
                {"kind", std::string(toString(e.kind))},
                {"description", e.description}};
        if (e.exceptionType) j["exceptionType"] = *e.exceptionType;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<AnnotationEntry> parseAnnotations(std::string_view json) {
    std::vector<AnnotationEntry> out;
    try {
        const auto root = nlohmann::json::parse(json);
        if (!root.is_array()) throw InvalidArtifact("annotations must be a JSON array");
        for (const auto& j : root) {
            AnnotationEntry a;
            a.oracleId = j.at("oracleId").get<std::string>();
            a.matchedPropertyIds = j.at("matchedPropertyIds").get<std::vector<std::string>>();
            a.correct = j.at("correct").get<bool>();
            a.note = j.value("note", "");
            out.push_back(std::move(a));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed annotations: ") + e.what());
    }
    return out;
}

std::string serializeAnnotations(const std::vector<AnnotationEntry>& annotations) {
    ojson arr = ojson::array();
    for (const auto& a : annotations) {
        arr.push_back({{"oracleId", a.oracleId},
                       {"matchedPropertyIds", a.matchedPropertyIds},
                       {"correct", a.correct},
                       {"note", a.note}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace oracle_forge
