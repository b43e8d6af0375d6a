#include <gtest/gtest.h>

#include <random>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/eval_harness.hpp"
#include "oracles/coverage_sets.hpp"
#include "support.hpp"

using namespace oracle_forge;

namespace {

struct PublishedCoverage {
    const char* cls;
    std::uint64_t documented, generated, checked;
    const char* precision;
    const char* recall;
};

// Published assertion and exception tables, body rows.
const PublishedCoverage kAssertionRows[] = {
    {"java.lang.Object", 33, 30, 29, "96.7", "90.9"}, {"java.lang.String", 162, 151, 144, "95.4", "93.2"},
    {"java.util.Set", 44, 39, 36, "92.3", "88.6"},    {"java.util.List", 71, 63, 62, "98.4", "88.7"},
    {"java.util.Map", 80, 69, 67, "97.1", "86.3"},
};
const PublishedCoverage kExceptionRows[] = {
    {"java.lang.Object", 11, 11, 11, "100.0", "100.0"}, {"java.lang.String", 28, 28, 27, "96.4", "100.0"},
    {"java.util.Set", 24, 23, 22, "95.7", "95.8"},      {"java.util.List", 62, 62, 61, "98.4", "100.0"},
    {"java.util.Map", 57, 56, 54, "96.4", "98.2"},
};

OracleRecord record(std::string id, std::string cls) {
    OracleRecord r;
    r.id = std::move(id);
    r.name = "check" + std::to_string(r.id.size());
    r.targetClass = std::move(cls);
    return r;
}

}  // namespace

TEST(EvalHarness, PublishedTotals) {
    const auto compile = makeCompilabilityRow("Total", 165, 428, 418, 423);
    EXPECT_EQ(compile.compilable().percent(), "97.7");
    EXPECT_EQ(compile.correct().percent(), "98.8");

    const auto assertion = makeCoverageRow("Total", 390, 352, 338);
    EXPECT_EQ(assertion.precision().percent(), "96.0");
    EXPECT_EQ(assertion.recall().percent(), "90.3");

    const auto exception = makeCoverageRow("Total", 182, 180, 175);
    EXPECT_EQ(exception.precision().percent(), "97.2");
    EXPECT_EQ(exception.recall().percent(), "98.9");
}

TEST(EvalHarness, PublishedCoverageRowsAndTheirSums) {
    for (const auto* table : {kAssertionRows, kExceptionRows}) {
        std::vector<CoverageRow> rows;
        for (int i = 0; i < 5; ++i) {
            const auto& p = table[i];
            rows.push_back(makeCoverageRow(p.cls, p.documented, p.generated, p.checked));
            EXPECT_EQ(rows.back().precision().percent(), p.precision) << p.cls;
            EXPECT_EQ(rows.back().recall().percent(), p.recall) << p.cls;
        }
        const auto total = totalOf(rows);
        EXPECT_EQ(total.className, "Total");
        if (table == kAssertionRows) {
            EXPECT_EQ(total, makeCoverageRow("Total", 390, 352, 338));
        } else {
            EXPECT_EQ(total, makeCoverageRow("Total", 182, 180, 175));
        }
    }
}

// The compilability body rows do not add up to the printed totals, and two
// printed percentages disagree with their own counts. The arithmetic below
// is what the counts give.
TEST(EvalHarness, PublishedCompilabilityRows) {
    const std::vector<CompilabilityRow> rows = {
        makeCompilabilityRow("java.lang.Object", 11, 38, 36, 38),
        makeCompilabilityRow("java.lang.String", 77, 158, 151, 155),
        makeCompilabilityRow("java.util.Set", 20, 54, 53, 53),
        makeCompilabilityRow("java.util.List", 32, 87, 86, 86),
        makeCompilabilityRow("java.util.Map", 25, 88, 87, 88),
    };
    EXPECT_EQ(rows[0].compilable().percent(), "94.7");
    EXPECT_EQ(rows[0].correct().percent(), "100.0");
    EXPECT_EQ(rows[1].compilable().percent(), "95.6");
    EXPECT_EQ(rows[1].correct().percent(), "98.1");
    EXPECT_EQ(rows[2].compilable().percent(), "98.1");
    EXPECT_EQ(rows[3].compilable().percent(), "98.9");
    EXPECT_EQ(rows[4].compilable().percent(), "98.9");
    const auto sum = totalOf(rows);
    EXPECT_EQ(sum.nMethods, 165u);
    EXPECT_EQ(sum.nOracles, 425u);
    EXPECT_EQ(sum.nCompilable, 413u);
    EXPECT_EQ(sum.nCorrect, 420u);
}

TEST(EvalHarness, PercentAgreesWithLongDivision) {
    for (std::uint64_t den = 0; den <= 300; ++den) {
        for (std::uint64_t num = 0; num <= den; ++num) {
            ASSERT_EQ((Ratio{num, den}.percent()), oracles::percentByLongDivision(num, den)) << num << "/" << den;
        }
    }
    EXPECT_EQ((Ratio{0, 0}.percent("0.0")), "0.0");
    EXPECT_FALSE((Ratio{1, 0}.permille()).has_value());
    EXPECT_EQ(*(Ratio{69, 80}.permille()), 863u);
}

TEST(EvalHarness, RowInvariants) {
    EXPECT_THROW(makeCoverageRow("x", 3, 4, 1), PreconditionViolation);
    EXPECT_THROW(makeCoverageRow("x", 4, 3, 4), PreconditionViolation);
    EXPECT_THROW(makeCompilabilityRow("x", 1, 3, 4, 0), PreconditionViolation);
    EXPECT_THROW(makeCompilabilityRow("x", 1, 3, 0, 4), PreconditionViolation);
    EXPECT_EQ(makeCoverageRow("x", 0, 0, 0).precision().percent(), "n/a");
}

// Counting agrees with the set-intersection formulation on random inputs.
TEST(EvalHarness, CoverageMatchesSetOracle) {
    std::mt19937 rng(7);
    const std::vector<std::string> classes = {"a.A", "b.B", "c.C"};
    for (int round = 0; round < 300; ++round) {
        std::vector<PropertyCatalogEntry> catalog;
        const int nProps = std::uniform_int_distribution<int>(0, 20)(rng);
        for (int i = 0; i < nProps; ++i) {
            PropertyCatalogEntry e;
            e.id = "p" + std::to_string(i);
            e.targetClass = classes[rng() % classes.size()];
            e.targetMethod = "m";
            e.kind = rng() % 2 ? PropertyKind::Assertion : PropertyKind::Exception;
            if (e.kind == PropertyKind::Exception) e.exceptionType = "java.lang.RuntimeException";
            catalog.push_back(e);
        }
        std::vector<OracleRecord> corpus;
        std::vector<AnnotationEntry> annotations;
        const int nOracles = std::uniform_int_distribution<int>(0, 20)(rng);
        for (int i = 0; i < nOracles; ++i) {
            corpus.push_back(record("o" + std::to_string(i), classes[rng() % classes.size()]));
            if (rng() % 4 == 0) continue;
            AnnotationEntry a{corpus.back().id, {}, rng() % 3 != 0, ""};
            for (int k = 0, n = static_cast<int>(rng() % 3); k < n && nProps > 0; ++k) {
                a.matchedPropertyIds.push_back("p" + std::to_string(rng() % nProps));
            }
            annotations.push_back(a);
        }
        for (auto kind : {PropertyKind::Assertion, PropertyKind::Exception}) {
            const auto rows = computeCoverage(catalog, corpus, annotations, kind);
            const auto expected = oracles::coverageBySets(catalog, annotations, kind);
            std::size_t nonEmpty = 0;
            for (const auto& r : rows) {
                EXPECT_LE(r.nChecked, r.nGenerated);
                EXPECT_LE(r.nGenerated, r.nDocumented);
                auto it = expected.find(r.className);
                if (it == expected.end()) {
                    EXPECT_EQ(r.nDocumented, 0u);
                    continue;
                }
                ++nonEmpty;
                EXPECT_EQ(r.nDocumented, it->second.documented);
                EXPECT_EQ(r.nGenerated, it->second.generated);
                EXPECT_EQ(r.nChecked, it->second.checked);
            }
            EXPECT_EQ(nonEmpty, expected.size());
        }
    }
}

TEST(EvalHarness, CompilabilityCounts) {
    std::vector<OracleRecord> corpus = {record("x1", "a.A"), record("x2", "a.A"), record("y1", "b.B")};
    corpus[0].compileStatus = CompileStatus::Compilable;
    corpus[2].compileStatus = CompileStatus::Compilable;
    const std::vector<CompileOutcome> outcomes = {{"y1", CompileStatus::NonCompilable, {}, ErrorClass::TypeError, "v"}};
    const std::vector<AnnotationEntry> ann = {{"x1", {}, true, ""}, {"y1", {}, true, ""}, {"x2", {}, false, ""}};
    const auto rows = computeCompilability(corpus, outcomes, ann, {{"a.A", 4}, {"z.Z", 2}}, {"z.Z"});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], (CompilabilityRow{"z.Z", 2, 0, 0, 0}));
    EXPECT_EQ(rows[1], (CompilabilityRow{"a.A", 4, 2, 1, 1}));
    EXPECT_EQ(rows[2], (CompilabilityRow{"b.B", 0, 1, 0, 1}));
    EXPECT_EQ(rows[0].compilable().percent("0.0"), "0.0");
}

TEST(EvalHarness, EmptyCorpusAndDanglingAnnotations) {
    EXPECT_TRUE(computeCompilability({}, {}, {}).empty());
    EvalReport empty;
    const auto md = renderReport(empty, ReportFormat::Markdown);
    EXPECT_NE(md.find("| Class | #Methods | #Oracles | #Compilable Oracles | #Correct Oracles |"), std::string::npos);
    EXPECT_EQ(md.find("Total"), std::string::npos);
    EXPECT_EQ(parseReportJson(renderReport(empty, ReportFormat::Json)), empty);

    const std::vector<OracleRecord> corpus = {record("x1", "a.A")};
    EXPECT_THROW(computeCompilability(corpus, {}, {{"nope", {}, true, ""}}), DanglingAnnotation);
    const std::vector<PropertyCatalogEntry> catalog = {{"p", "a.A", "m", PropertyKind::Assertion, "", std::nullopt}};
    EXPECT_THROW(computeCoverage(catalog, corpus, {{"x1", {"missing"}, true, ""}}, PropertyKind::Assertion),
                 DanglingAnnotation);
    EXPECT_THROW(computeCoverage(catalog, corpus, {{"nope", {"p"}, true, ""}}, PropertyKind::Assertion),
                 DanglingAnnotation);
}

TEST(EvalHarness, ReportFormats) {
    EvalReport report;
    report.compilabilityRows = {makeCompilabilityRow("java.lang.Object", 11, 38, 36, 38)};
    report.assertionRows = {makeCoverageRow("java.lang.Object", 33, 30, 29), makeCoverageRow("java.util.Map", 80, 69, 67)};
    report.exceptionRows = {makeCoverageRow("java.util.List", 62, 62, 61)};

    const auto json = renderReport(report, ReportFormat::Json);
    EXPECT_EQ(parseReportJson(json), report);
    EXPECT_NE(json.find("\"schemaVersion\": 1"), std::string::npos);
    EXPECT_NE(json.find("\"precision\": \"96.7\""), std::string::npos);

    const auto md = renderReport(report, ReportFormat::Markdown);
    EXPECT_NE(md.find("| java.lang.Object | 11 | 38 | 36(94.7%) | 38(100.0%) |"), std::string::npos);
    EXPECT_NE(md.find("| Total | 113 | 99 | 96 | 97.0 | 87.6 |"), std::string::npos);
    EXPECT_NE(md.find("| java.util.List | 62 | 62 | 61 | 98.4 | 100.0 |"), std::string::npos);

    const auto table = renderReport(report, ReportFormat::Table);
    EXPECT_NE(table.find("86.3"), std::string::npos);
    EXPECT_EQ(renderReport(report, ReportFormat::Table), table);

    EXPECT_EQ(parseReportFormat("markdown"), ReportFormat::Markdown);
    EXPECT_THROW(parseReportFormat("csv"), InvalidConfig);
    EXPECT_THROW(parseReportJson("{\"schemaVersion\": 2}"), InvalidArtifact);
    EXPECT_THROW(parseReportJson("not json"), InvalidArtifact);
}

TEST(EvalHarness, CatalogAndAnnotationFiles) {
    for (const char* fqcn : {"java.lang.Object", "java.lang.String", "java.util.List", "java.util.Map", "java.util.Set"}) {
        const auto catalog = parseCatalog(testsupport::slurp(testsupport::dataDir() / "catalog" / (std::string(fqcn) + ".json")));
        EXPECT_FALSE(catalog.empty());
        EXPECT_EQ(parseCatalog(serializeCatalog(catalog)), catalog);
        for (const auto& e : catalog) EXPECT_EQ(e.targetClass, fqcn);
        const auto ann = parseAnnotations(
            testsupport::slurp(testsupport::dataDir() / "annotations" / (std::string(fqcn) + ".json")));
        EXPECT_EQ(parseAnnotations(serializeAnnotations(ann)), ann);
    }
    EXPECT_THROW(parseCatalog(R"([{"id":"a","targetClass":"x","targetMethod":"m","kind":"exception"}])"), InvalidArtifact);
    EXPECT_THROW(parseCatalog(R"([{"id":"a","targetClass":"x","targetMethod":"m","kind":"bogus"}])"), InvalidArtifact);
    EXPECT_THROW(parseCatalog(R"([{"id":"a","targetClass":"x","targetMethod":"m","kind":"assertion"},
                                 {"id":"a","targetClass":"x","targetMethod":"m","kind":"assertion"}])"),
                 InvalidArtifact);
    EXPECT_THROW(parseCatalog("{}"), InvalidArtifact);
    EXPECT_THROW(parseAnnotations(R"([{"oracleId":"a"}])"), InvalidArtifact);
}
