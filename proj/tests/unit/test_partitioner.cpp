#include <gtest/gtest.h>

#include <random>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/partitioner.hpp"
#include "oracles/algorithm_partition.hpp"
#include "oracles/random_docs.hpp"
#include "support.hpp"

using namespace oracle_forge;

TEST(Partitioner, ObjectEqualsBundlesHashCode) {
    const ClassDoc doc = testsupport::loadFixtureDoc("java.lang.Object");
    const auto units = partition(doc);
    ASSERT_EQ(units.size(), doc.methods.size());
    const auto it = std::find_if(units.begin(), units.end(), [](const PartitionUnit& u) { return u.anchor.name == "equals"; });
    ASSERT_NE(it, units.end());
    ASSERT_EQ(it->related.size(), 1u);
    EXPECT_EQ(it->related[0].name, "hashCode");
    EXPECT_EQ(it->renderedDescription, it->anchor.description + "\n\n" + it->related[0].description);
    EXPECT_EQ(it->id(), "java.lang.Object#equals(Object)");
}

TEST(Partitioner, NoSeeAlsoMeansNoRelated) {
    ClassDoc doc;
    doc.fqcn = "a.B";
    for (const char* n : {"f", "g", "h"}) doc.methods.push_back(MethodDoc{n, {}, "void", std::string("about ") + n, {}, {}, false});
    const auto units = partition(doc);
    ASSERT_EQ(units.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_TRUE(units[i].related.empty());
        EXPECT_EQ(units[i].renderedDescription, doc.methods[i].description);
    }
}

TEST(Partitioner, EmptyDocHasNoUnits) {
    ClassDoc doc;
    doc.fqcn = "a.B";
    EXPECT_TRUE(partition(doc).empty());
}

TEST(Partitioner, NotTransitiveAndOrderedBySeeAlso) {
    ClassDoc doc;
    doc.fqcn = "a.B";
    auto method = [](std::string name, std::vector<std::string> refs) {
        MethodDoc m{name, {}, "void", "D-" + name, {}, {}, false};
        for (auto& r : refs) m.seeAlso.push_back(*MethodRef::parse(r));
        return m;
    };
    doc.methods = {method("a", {"c()", "b()", "c()", "a()"}), method("b", {"d()"}), method("c", {}), method("d", {})};
    const auto units = partition(doc);
    ASSERT_EQ(units[0].related.size(), 2u);
    EXPECT_EQ(units[0].related[0].name, "c");
    EXPECT_EQ(units[0].related[1].name, "b");
    EXPECT_EQ(units[0].renderedDescription, "D-a\n\nD-c\n\nD-b");
    // d is reachable only through b and stays out of a's bundle.
    EXPECT_EQ(units[1].renderedDescription, "D-b\n\nD-d");
}

TEST(Partitioner, RenderDescriptionIsIdempotent) {
    const auto units = partition(testsupport::loadFixtureDoc("java.util.List"));
    for (const auto& u : units) {
        EXPECT_EQ(renderDescription(u), u.renderedDescription);
        PartitionUnit copy = u;
        copy.renderedDescription = renderDescription(copy);
        EXPECT_EQ(renderDescription(copy), u.renderedDescription);
    }
}

TEST(Partitioner, WholeClassUnitCoversEveryMethod) {
    const ClassDoc doc = testsupport::loadFixtureDoc("java.util.Map");
    const auto unit = wholeClassUnit(doc);
    for (const auto& m : doc.methods) EXPECT_NE(unit.renderedDescription.find(m.description), std::string::npos);
    EXPECT_TRUE(unit.related.empty());
}

// Equivalence with the literal algorithm over random documents.
TEST(Partitioner, AgreesWithAlgorithmOnRandomDocs) {
    std::mt19937 rng(20240601);
    int ambiguousSeen = 0;
    for (int round = 0; round < 400; ++round) {
        const bool plantAmbiguity = round % 10 == 0;
        const ClassDoc doc = oracles::randomDoc(rng, plantAmbiguity);
        std::vector<oracles::ExpectedUnit> expected;
        bool expectAmbiguous = false;
        try {
            expected = oracles::partitionByAlgorithm(doc);
        } catch (const oracles::AmbiguousRef&) {
            expectAmbiguous = true;
        }
        if (expectAmbiguous) {
            ++ambiguousSeen;
            EXPECT_THROW(partition(doc), AmbiguousReference) << "round " << round;
            continue;
        }
        const auto units = partition(doc);
        ASSERT_EQ(units.size(), expected.size());
        for (std::size_t i = 0; i < units.size(); ++i) {
            EXPECT_EQ(units[i].anchor, doc.methods[expected[i].anchor]);
            ASSERT_EQ(units[i].related.size(), expected[i].related.size()) << "round " << round << " unit " << i;
            for (std::size_t k = 0; k < units[i].related.size(); ++k) {
                EXPECT_EQ(units[i].related[k], doc.methods[expected[i].related[k]]);
            }
            EXPECT_EQ(units[i].renderedDescription, expected[i].description);
        }
        EXPECT_EQ(partition(doc), units);  // pure
    }
    EXPECT_GE(ambiguousSeen, 40);
}
