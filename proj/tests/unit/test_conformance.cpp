#include <gtest/gtest.h>

#include "oracle_forge/conformance.hpp"
#include "oracle_forge/errors.hpp"
#include "support.hpp"

using namespace oracle_forge;
namespace fs = std::filesystem;

namespace {

const fs::path kConformance = testsupport::dataDir() / "conformance";

// A fake runner: prints the given body as its results, then exits.
fs::path fakeRunner(const testsupport::TempDir& dir, const std::string& stdoutText, int exitCode,
                    const std::string& stderrText = "") {
    testsupport::spit(dir / "stdout.txt", stdoutText);
    testsupport::spit(dir / "stderr.txt", stderrText);
    return testsupport::writeScript(dir / "runner",
                                    "printf '%s\\n' \"$@\" > \"" + (dir / "argv.txt").string() + "\"\n" +
                                        "cat \"" + (dir / "stdout.txt").string() + "\"\n" + "cat \"" +
                                        (dir / "stderr.txt").string() + "\" >&2\n" + "exit " +
                                        std::to_string(exitCode) + "\n");
}

const std::string kFlagshipResults =
    R"({"oracle":"checkSymmetric","outcome":"fail","message":"equals is not symmetric"})" "\n"
    R"({"oracle":"checkReflexive","outcome":"pass","message":""})" "\n"
    R"({"oracle":"checkEqualsHashCodeConsistency","outcome":"pass","message":""})" "\n";

}  // namespace

TEST(Conformance, ShippedFixturesAgreeWithTheHolder) {
    const auto holder = testsupport::slurp(kConformance / "OracleHolder.java");
    for (const char* name : {"point", "point-fixed"}) {
        const auto fixture = parseFixture(testsupport::slurp(kConformance / name / "fixture.json"));
        EXPECT_EQ(fixture.invocations.size(), 3u);
        EXPECT_NO_THROW(validateFixture(fixture, holder));
        EXPECT_EQ(parseFixture(serializeFixture(fixture)), fixture);
        for (const auto& s : fixture.subjectClasses) EXPECT_TRUE(fs::exists(kConformance / name / s)) << s;
    }
    const auto flagship = parseFixture(testsupport::slurp(kConformance / "point" / "fixture.json"));
    EXPECT_EQ(flagship.invocations[0].oracleName, "checkSymmetric");
    EXPECT_EQ(flagship.invocations[0].expected, ConformanceOutcome::Fail);
}

TEST(Conformance, FixtureValidation) {
    const std::string holder = "class H { boolean a(Object x) { return true; } boolean b(Object x, Object y) { return true; } }";
    EXPECT_NO_THROW(validateFixture(FixtureSpec{{}, {{"a", {"1"}, ConformanceOutcome::Pass}}}, holder));
    EXPECT_THROW(validateFixture(FixtureSpec{{}, {{"c", {"1"}, ConformanceOutcome::Pass}}}, holder), PreconditionViolation);
    EXPECT_THROW(validateFixture(FixtureSpec{{}, {{"b", {"1"}, ConformanceOutcome::Pass}}}, holder), PreconditionViolation);
    EXPECT_THROW(parseFixture(R"({"subjectClasses":[],"invocations":[{"oracleName":"a","argExpressions":[],"expected":"error"}]})"),
                 InvalidArtifact);
    EXPECT_THROW(parseFixture("{"), InvalidArtifact);
}

TEST(Conformance, RunnerOutputProtocol) {
    const auto fixture = parseFixture(testsupport::slurp(kConformance / "point" / "fixture.json"));
    const auto results = parseRunnerOutput(kFlagshipResults, fixture);
    ASSERT_EQ(results.size(), 3u);
    EXPECT_EQ(results[0].outcome, ConformanceOutcome::Fail);
    EXPECT_EQ(results[0].message, "equals is not symmetric");

    EXPECT_THROW(parseRunnerOutput("", fixture), ProtocolError);
    EXPECT_THROW(parseRunnerOutput("Exception in thread main\n", fixture), ProtocolError);
    EXPECT_THROW(parseRunnerOutput(R"({"oracle":"checkSymmetric","outcome":"maybe","message":""})", fixture), ProtocolError);
    EXPECT_THROW(parseRunnerOutput(R"({"oracle":"checkSymmetric","outcome":"error","message":""})", fixture), ProtocolError);
    const auto reordered = R"({"oracle":"checkReflexive","outcome":"pass","message":""})" "\n"
                           R"({"oracle":"checkSymmetric","outcome":"fail","message":""})" "\n"
                           R"({"oracle":"checkEqualsHashCodeConsistency","outcome":"pass","message":""})" "\n";
    EXPECT_THROW(parseRunnerOutput(reordered, fixture), ProtocolError);
    EXPECT_THROW(parseRunnerOutput(kFlagshipResults + kFlagshipResults, fixture), ProtocolError);
}

TEST(Conformance, FlagshipFixtureThroughAFakeRunner) {
    testsupport::TempDir dir;
    const auto runner = fakeRunner(dir, kFlagshipResults, 0);
    const auto holder = kConformance / "OracleHolder.java";
    const auto fixtureFile = kConformance / "point" / "fixture.json";
    const auto report = runConformance(holder, fixtureFile, {runner.string(), std::chrono::seconds(10)});
    EXPECT_TRUE(report.allMatch());
    EXPECT_EQ(report.runnerExitCode, 0);

    const std::string argvText = testsupport::slurp(dir / "argv.txt");
    const auto argv = text::split(argvText, '\n');
    ASSERT_GE(argv.size(), 4u);
    EXPECT_EQ(fs::path(std::string(argv[0])), fs::absolute(holder));
    EXPECT_EQ(fs::path(std::string(argv[1])), fs::absolute(fixtureFile));
    EXPECT_EQ(fs::path(std::string(argv[2])).filename(), "Point.java");
    EXPECT_EQ(fs::path(std::string(argv[3])).filename(), "Point3D.java");

    const auto fixture = parseFixture(testsupport::slurp(fixtureFile));
    const auto rendered = renderConformanceReport(report, fixture);
    EXPECT_NE(rendered.find("checkSymmetric(new Point(3, 4), new Point3D(3, 4, 5)) expected fail, got fail"),
              std::string::npos);
    EXPECT_EQ(rendered.find("MISMATCH"), std::string::npos);
}

TEST(Conformance, MismatchAndExitCodeAgreement) {
    const auto holder = kConformance / "OracleHolder.java";
    const auto fixtureFile = kConformance / "point-fixed" / "fixture.json";
    {
        // The fixed classes should pass symmetry; a runner reporting fail is a mismatch.
        testsupport::TempDir dir;
        const auto runner = fakeRunner(dir, kFlagshipResults, 1);
        const auto report = runConformance(holder, fixtureFile, {runner.string(), std::chrono::seconds(10)});
        EXPECT_FALSE(report.allMatch());
        EXPECT_EQ(report.matchesExpected, (std::vector<bool>{false, true, true}));
        EXPECT_NE(renderConformanceReport(report, parseFixture(testsupport::slurp(fixtureFile))).find("MISMATCH checkSymmetric"),
                  std::string::npos);
    }
    {
        testsupport::TempDir dir;
        const auto runner = fakeRunner(dir, kFlagshipResults, 0);
        EXPECT_THROW(runConformance(holder, fixtureFile, {runner.string(), std::chrono::seconds(10)}), ProtocolError);
    }
}

TEST(Conformance, RunnerFailures) {
    const auto holder = kConformance / "OracleHolder.java";
    const auto fixtureFile = kConformance / "point" / "fixture.json";
    {
        testsupport::TempDir dir;
        const auto runner = fakeRunner(dir, "", 2, "Point.java:3: error: ';' expected");
        EXPECT_THROW(runConformance(holder, fixtureFile, {runner.string(), std::chrono::seconds(10)}), CompileFailure);
    }
    {
        testsupport::TempDir dir;
        const auto runner = fakeRunner(dir, "", 3, "Exception in thread \"main\" java.lang.NoClassDefFoundError");
        EXPECT_THROW(runConformance(holder, fixtureFile, {runner.string(), std::chrono::seconds(10)}), HarnessCrash);
    }
    {
        testsupport::TempDir dir;
        const auto runner = testsupport::writeScript(dir / "slow", "sleep 5\n");
        EXPECT_THROW(runConformance(holder, fixtureFile, {runner.string(), std::chrono::milliseconds(200)}), HarnessCrash);
    }
    {
        testsupport::TempDir dir;
        const auto runner = fakeRunner(dir, "garbage\n", 0);
        EXPECT_THROW(runConformance(holder, fixtureFile, {runner.string(), std::chrono::seconds(10)}), ProtocolError);
    }
    EXPECT_THROW(runConformance(holder, fixtureFile, {"/nonexistent/runner", std::chrono::seconds(1)}), ToolchainUnavailable);
}
