#pragma once

// Lightweight Java lexer and member scanner. This is not a parser: it
// recognizes enough structure (balanced brackets, method headers, comments)
// to locate doc comments and method declarations in source files and in
// model-generated snippets.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oracle_forge::java {

enum class TokenKind { Identifier, Number, String, Char, TextBlock, Punct, LineComment, BlockComment, DocComment };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t offset = 0;
    std::size_t line = 1;
    std::size_t column = 1;
    bool terminated = true;  // false for unterminated literals and comments

    [[nodiscard]] bool is(std::string_view s) const { return text == s; }
    [[nodiscard]] bool isComment() const {
        return kind == TokenKind::LineComment || kind == TokenKind::BlockComment || kind == TokenKind::DocComment;
    }
    [[nodiscard]] std::size_t end() const { return offset + text.size(); }
};

struct Lexed {
    std::vector<Token> code;
    std::vector<Token> comments;
};

/// Never throws; malformed input yields tokens with terminated == false.
Lexed tokenize(std::string_view source);

bool isKeyword(std::string_view word);
bool isPrimitive(std::string_view word);

/// Simple names of commonly used java.lang, java.util, java.util.function,
/// java.util.concurrent and java.util.stream types.
bool isKnownJdkType(std::string_view simpleName);

/// Index of the bracket closing `tokens[open]` ((, [, {), or npos.
std::size_t matchClose(const std::vector<Token>& tokens, std::size_t open);

/// Index one past the `>` closing a generic argument list opened at `open`,
/// or npos. Handles `>>` and `>>>` tokens.
std::size_t skipAngles(const std::vector<Token>& tokens, std::size_t open);

/// Joins tokens [begin, end) back into compact type/expression text.
std::string joinTokens(const std::vector<Token>& tokens, std::size_t begin, std::size_t end);

struct Param {
    std::string type;
    std::string name;
};

struct MethodHeader {
    std::size_t begin = 0;  // first token of the declaration (annotations included)
    std::size_t nameToken = 0;
    std::size_t paramsOpen = 0;
    std::size_t paramsClose = 0;
    std::size_t bodyOpen = 0;   // npos for bodiless declarations
    std::size_t end = 0;        // last token (closing brace or semicolon)
    std::vector<std::string> annotations;
    std::vector<std::string> modifiers;
    std::string typeParameters;  // "<E>" or empty
    std::string returnType;      // empty for constructors
    std::string name;
    std::vector<Param> params;
    std::vector<std::string> thrown;
};

/// Tries to read a method (or constructor) declaration starting at `i`.
std::optional<MethodHeader> parseMethodAt(const std::vector<Token>& code, std::size_t i, std::size_t limit);

/// Extent of a type declaration (class/interface/enum/record) starting at
/// `i`: returns {bodyOpen, bodyClose} when one begins there.
struct TypeDecl {
    std::string keyword;
    std::string name;
    std::size_t bodyOpen = 0;
    std::size_t bodyClose = 0;
};
std::optional<TypeDecl> parseTypeDeclAt(const std::vector<Token>& code, std::size_t i, std::size_t limit);

/// Index after the member/statement beginning at `i`: past the next `;` at
/// bracket depth 0, or past a balanced `{...}` block, whichever comes first.
std::size_t skipMember(const std::vector<Token>& code, std::size_t i, std::size_t limit);

/// Comments lying strictly between byte offsets [from, to), in order.
std::vector<Token> commentsBetween(const Lexed& lexed, std::size_t from, std::size_t to);

/// Removes the common leading indentation of lines 2..n given that the
/// first line started at `firstColumn` (1-based) in the original text.
std::string dedent(std::string_view text, std::size_t firstColumn);

}  // namespace oracle_forge::java
