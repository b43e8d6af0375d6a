#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oracle_forge {

enum class TypeKind { Class, Interface };

enum class DocFormat { SourceComments, CanonicalJson };

struct ThrowsTag {
    std::string exceptionType;
    std::string condition;

    friend bool operator==(const ThrowsTag&, const ThrowsTag&) = default;
};

/// A see-also reference to a method of the same document. An absent
/// parameter list means "match by name"; an empty list means "()".
/// `qualifier` holds an explicit owner (`Object#hashCode()`), if any.
struct MethodRef {
    std::string name;
    std::optional<std::vector<std::string>> paramTypes;
    std::optional<std::string> qualifier;

    friend bool operator==(const MethodRef&, const MethodRef&) = default;

    /// Parses `name`, `name(T1, T2)`, `#name()` or `Owner#name(T)`.
    /// Returns nullopt when the text is not syntactically a method reference.
    static std::optional<MethodRef> parse(std::string_view text);

    [[nodiscard]] std::string str() const;
};

struct MethodDoc {
    std::string name;
    std::vector<std::string> paramTypes;
    std::string returnType;
    std::string description;
    std::vector<ThrowsTag> throwsTags;
    std::vector<MethodRef> seeAlso;
    bool deprecated = false;

    friend bool operator==(const MethodDoc&, const MethodDoc&) = default;

    /// `name(T1,T2)` with parameter types erased and stripped of whitespace.
    [[nodiscard]] std::string signature() const;
};

struct ClassDoc {
    std::string fqcn;
    TypeKind kind = TypeKind::Class;
    std::vector<MethodDoc> methods;
    std::string sourcePath;

    /// Equality is field-for-field on content; sourcePath is provenance only.
    friend bool operator==(const ClassDoc& a, const ClassDoc& b) {
        return a.fqcn == b.fqcn && a.kind == b.kind && a.methods == b.methods;
    }

    [[nodiscard]] std::string simpleName() const;
};

/// Throws MalformedDoc, DuplicateSignature.
ClassDoc parseClassDoc(std::string_view source, DocFormat format, std::string sourcePath = {});

/// Picks the format from the file extension, falling back to sniffing
/// the content. Throws UnresolvableFormat when neither applies.
DocFormat detectFormat(std::string_view path, std::string_view content);

std::string serializeCanonicalJson(const ClassDoc& doc);

/// Unique in-class method for `ref`, or nullopt when absent or owned by
/// another type. Throws AmbiguousReference for name-only refs matching
/// several overloads.
std::optional<MethodDoc> resolveSeeAlso(const ClassDoc& doc, const MethodRef& ref);

/// Index form of resolveSeeAlso, for callers that need identity.
std::optional<std::size_t> resolveSeeAlsoIndex(const ClassDoc& doc, const MethodRef& ref);

/// Checks the ClassDoc invariants; throws MalformedDoc or DuplicateSignature.
void validate(const ClassDoc& doc);

// Text helpers shared with the source parser and tests.

/// Collapses whitespace runs inside paragraphs to single spaces and keeps
/// paragraph breaks as exactly one blank line.
std::string normalizeProse(std::string_view text);

/// `java.util.List<E>` -> `List`, `String...` -> `String[]`.
std::string eraseTypeName(std::string_view type);

bool isJavaIdentifier(std::string_view text);

std::string_view toString(TypeKind kind);

}  // namespace oracle_forge
