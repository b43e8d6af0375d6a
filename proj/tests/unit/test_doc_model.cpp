#include <gtest/gtest.h>

#include <random>

#include "oracle_forge/doc_model.hpp"
#include "oracle_forge/errors.hpp"
#include "support.hpp"

using namespace oracle_forge;

namespace {

const char* kEqualsJson = R"J({
  "fqcn": "java.lang.Object",
  "kind": "class",
  "methods": [
    {
      "name": "equals",
      "paramTypes": ["Object"],
      "returnType": "boolean",
      "description": "Indicates whether some other object is \"equal to\" this one.\n\nIt is reflexive: for any non-null reference value x, x.equals(x) should return true.\n\nIt is symmetric: for any non-null reference values x and y, x.equals(y) should return true if and only if y.equals(x) returns true.\n\nIt is transitive: for any non-null reference values x, y, and z, if x.equals(y) returns true and y.equals(z) returns true, then x.equals(z) should return true.\n\nIt is consistent: for any non-null reference values x and y, multiple invocations of x.equals(y) consistently return true or consistently return false.\n\nFor any non-null reference value x, x.equals(null) should return false.",
      "throws": [],
      "seeAlso": ["hashCode()"],
      "deprecated": false
    }
  ]
})J";

}  // namespace

TEST(DocModel, CanonicalJsonEqualsWithHashCodeSeeAlso) {
    const ClassDoc doc = parseClassDoc(kEqualsJson, DocFormat::CanonicalJson);
    EXPECT_EQ(doc.fqcn, "java.lang.Object");
    EXPECT_EQ(doc.kind, TypeKind::Class);
    ASSERT_EQ(doc.methods.size(), 1u);
    const auto& m = doc.methods[0];
    EXPECT_EQ(m.signature(), "equals(Object)");
    ASSERT_EQ(m.seeAlso.size(), 1u);
    EXPECT_EQ(m.seeAlso[0].name, "hashCode");
    ASSERT_TRUE(m.seeAlso[0].paramTypes.has_value());
    EXPECT_TRUE(m.seeAlso[0].paramTypes->empty());
    EXPECT_NE(m.description.find("It is symmetric"), std::string::npos);
}

TEST(DocModel, EmptyClassBody) {
    const ClassDoc fromSource = parseClassDoc("package a.b;\n\npublic class Empty {\n}\n", DocFormat::SourceComments);
    EXPECT_EQ(fromSource.fqcn, "a.b.Empty");
    EXPECT_TRUE(fromSource.methods.empty());
    const ClassDoc fromJson =
        parseClassDoc(R"({"fqcn":"a.b.Empty","kind":"class","methods":[]})", DocFormat::CanonicalJson);
    EXPECT_EQ(fromJson, fromSource);
}

TEST(DocModel, ThrowsTagMatchesHandWrittenRecord) {
    const char* src = R"(package java.lang;
public final class String {
    /**
     * Returns the {@code char} value at the
     * specified index.
     *
     * @param      index   the index of the {@code char} value.
     * @return     the {@code char} value at the specified index of this string.
     * @throws     IndexOutOfBoundsException  if the {@code index}
     *             argument is negative or not less than the length of this
     *             string.
     * @see #length()
     */
    public char charAt(int index) { return 0; }

    /** Returns the length of this string. */
    public int length() { return 0; }
}
)";
    const ClassDoc doc = parseClassDoc(src, DocFormat::SourceComments);
    ASSERT_EQ(doc.methods.size(), 2u);

    MethodDoc expected;
    expected.name = "charAt";
    expected.paramTypes = {"int"};
    expected.returnType = "char";
    expected.description = "Returns the char value at the specified index.";
    expected.throwsTags = {{"IndexOutOfBoundsException",
                            "if the index argument is negative or not less than the length of this string."}};
    expected.seeAlso = {MethodRef{"length", std::vector<std::string>{}, std::nullopt}};
    EXPECT_EQ(doc.methods[0], expected);

    // Round trip through the canonical form keeps the record intact.
    EXPECT_EQ(parseClassDoc(serializeCanonicalJson(doc), DocFormat::CanonicalJson), doc);
}

TEST(DocModel, ResolveSeeAlsoHashCodeOnObjectFixture) {
    const ClassDoc doc = testsupport::loadFixtureDoc("java.lang.Object");
    const auto hit = resolveSeeAlso(doc, *MethodRef::parse("hashCode"));
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->signature(), "hashCode()");
    EXPECT_FALSE(resolveSeeAlso(doc, *MethodRef::parse("compareTo(Object)")).has_value());
}

TEST(DocModel, NameOnlyRefToOverloadsIsAmbiguous) {
    const ClassDoc doc = parseClassDoc(R"({"fqcn":"java.lang.String","kind":"class","methods":[
        {"name":"indexOf","paramTypes":["int"],"returnType":"int","description":"a","throws":[],"seeAlso":[],"deprecated":false},
        {"name":"indexOf","paramTypes":["String"],"returnType":"int","description":"b","throws":[],"seeAlso":[],"deprecated":false}]})",
                                       DocFormat::CanonicalJson);
    EXPECT_THROW(resolveSeeAlso(doc, *MethodRef::parse("indexOf")), AmbiguousReference);
    const auto exact = resolveSeeAlso(doc, *MethodRef::parse("indexOf(String)"));
    ASSERT_TRUE(exact.has_value());
    EXPECT_EQ(exact->description, "b");
}

TEST(DocModel, ForeignQualifiedRefIsOutsideTheDocument) {
    const ClassDoc doc = testsupport::loadFixtureDoc("java.lang.Object");
    EXPECT_FALSE(resolveSeeAlso(doc, *MethodRef::parse("java.util.HashMap#hashCode()")).has_value());
    EXPECT_TRUE(resolveSeeAlso(doc, *MethodRef::parse("Object#hashCode()")).has_value());
}

TEST(DocModel, MethodRefParsing) {
    EXPECT_FALSE(MethodRef::parse("not a ref").has_value());
    EXPECT_FALSE(MethodRef::parse("").has_value());
    const auto r = MethodRef::parse("#wait(long, int)");
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->name, "wait");
    EXPECT_EQ(*r->paramTypes, (std::vector<std::string>{"long", "int"}));
    EXPECT_FALSE(r->qualifier.has_value());
}

TEST(DocModel, Errors) {
    try {
        parseClassDoc("{\"fqcn\": \"a.B\",\n \"kind\": ", DocFormat::CanonicalJson);
        FAIL() << "expected MalformedDoc";
    } catch (const MalformedDoc& e) {
        ASSERT_TRUE(e.position().has_value());
        EXPECT_EQ(e.position()->line, 2u);
    }
    EXPECT_THROW(parseClassDoc(R"({"fqcn":"a.B","kind":"class","methods":[
        {"name":"f","paramTypes":["java.util.List<E>"],"returnType":"void","description":"","throws":[],"seeAlso":[],"deprecated":false},
        {"name":"f","paramTypes":["List"],"returnType":"int","description":"","throws":[],"seeAlso":[],"deprecated":false}]})",
                               DocFormat::CanonicalJson),
                 DuplicateSignature);
    EXPECT_THROW(parseClassDoc(R"({"fqcn":"","kind":"class","methods":[]})", DocFormat::CanonicalJson), MalformedDoc);
    EXPECT_THROW(parseClassDoc(R"({"fqcn":"a.B","kind":"enum","methods":[]})", DocFormat::CanonicalJson),
                 MalformedDoc);
    EXPECT_THROW(detectFormat("notes.txt", "hello world"), UnresolvableFormat);
    EXPECT_EQ(detectFormat("x.java", ""), DocFormat::SourceComments);
    EXPECT_EQ(detectFormat("x.json", ""), DocFormat::CanonicalJson);
    EXPECT_EQ(detectFormat("x.txt", "  {\"fqcn\": 1}"), DocFormat::CanonicalJson);
}

TEST(DocModel, ProseNormalization) {
    EXPECT_EQ(normalizeProse("  a \t b\n c\n\n\n d  "), "a b c\n\nd");
    EXPECT_EQ(normalizeProse(""), "");
    EXPECT_EQ(eraseTypeName("java.util.List<E>"), "List");
    EXPECT_EQ(eraseTypeName("String..."), "String[]");
    EXPECT_EQ(eraseTypeName("Map<? super K, V>"), "Map");
}

TEST(DocModel, FixturesPreserveSourceOrderAndRoundTrip) {
    const std::map<std::string, std::vector<std::string>> firstMethods = {
        {"java.lang.Object", {"getClass()", "hashCode()", "equals(Object)"}},
        {"java.lang.String", {"length()", "isEmpty()", "charAt(int)"}},
        {"java.util.Set", {"size()", "isEmpty()", "add(E)"}},
    };
    for (const auto& [fqcn, expected] : firstMethods) {
        const ClassDoc doc = testsupport::loadFixtureDoc(fqcn);
        ASSERT_GE(doc.methods.size(), expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(doc.methods[i].signature(), expected[i]);
        const ClassDoc again = parseClassDoc(serializeCanonicalJson(doc), DocFormat::CanonicalJson);
        EXPECT_EQ(again, doc) << fqcn;
        EXPECT_EQ(serializeCanonicalJson(again), serializeCanonicalJson(doc));
    }
}

// Random documents survive serialize/parse field for field.
TEST(DocModel, RandomRoundTrip) {
    std::mt19937 rng(7);
    const std::vector<std::string> names = {"get", "put", "size", "add", "remove", "contains"};
    const std::vector<std::string> types = {"int", "Object", "String", "List<E>", "long[]"};
    const std::vector<std::string> words = {"alpha", "beta", "x.equals(y)", "\"quoted\"", "tab\tthere", "<b>"};
    for (int round = 0; round < 100; ++round) {
        ClassDoc doc;
        doc.fqcn = "p.q.C" + std::to_string(round);
        doc.kind = round % 2 ? TypeKind::Interface : TypeKind::Class;
        const int n = static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i) {
            MethodDoc m;
            m.name = names[rng() % names.size()] + std::to_string(i);
            for (unsigned p = 0; p < rng() % 3; ++p) m.paramTypes.push_back(types[rng() % types.size()]);
            m.returnType = "boolean";
            std::string prose;
            for (unsigned w = 0; w < rng() % 12; ++w) {
                prose += words[rng() % words.size()];
                prose += (rng() % 5 == 0) ? "\n\n" : " ";
            }
            m.description = normalizeProse(prose);
            if (rng() % 2) m.throwsTags.push_back({"IllegalStateException", "if " + std::to_string(i)});
            if (rng() % 2) m.seeAlso.push_back({"get0", std::nullopt, std::nullopt});
            m.deprecated = rng() % 4 == 0;
            doc.methods.push_back(m);
        }
        const ClassDoc parsed = parseClassDoc(serializeCanonicalJson(doc), DocFormat::CanonicalJson);
        ASSERT_EQ(parsed, doc) << serializeCanonicalJson(doc);
        EXPECT_EQ(parseClassDoc(serializeCanonicalJson(parsed), DocFormat::CanonicalJson), parsed);
    }
}
