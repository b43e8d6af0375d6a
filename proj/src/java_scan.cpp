#include "oracle_forge/java_scan.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace oracle_forge::java {
namespace {

constexpr std::size_t npos = std::string::npos;

bool isIdentStart(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool isIdentPart(unsigned char c) { return isIdentStart(c) || std::isdigit(c); }

constexpr std::array<std::string_view, 26> kPuncts = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=", ">=", "&&", "||",
    "++",   "--",  "+=",  "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "<<", ">>", "@"};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Lexed run() {
        Lexed out;
        while (pos_ < src_.size()) {
            const unsigned char c = src_[pos_];
            if (c == '\n') {
                advance(1);
                continue;
            }
            if (std::isspace(c)) {
                advance(1);
                continue;
            }
            const std::size_t start = pos_, line = line_, col = col_;
            Token tok{TokenKind::Punct, {}, start, line, col, true};
            if (c == '/' && peek(1) == '/') {
                tok.kind = TokenKind::LineComment;
                while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
            } else if (c == '/' && peek(1) == '*') {
                tok.kind = (peek(2) == '*' && peek(3) != '/') ? TokenKind::DocComment : TokenKind::BlockComment;
                advance(2);
                tok.terminated = false;
                while (pos_ < src_.size()) {
                    if (src_[pos_] == '*' && peek(1) == '/') {
                        advance(2);
                        tok.terminated = true;
                        break;
                    }
                    advance(1);
                }
            } else if (c == '"' && peek(1) == '"' && peek(2) == '"') {
                tok.kind = TokenKind::TextBlock;
                advance(3);
                tok.terminated = false;
                while (pos_ < src_.size()) {
                    if (src_[pos_] == '\\') {
                        advance(2);
                        continue;
                    }
                    if (src_[pos_] == '"' && peek(1) == '"' && peek(2) == '"') {
                        advance(3);
                        tok.terminated = true;
                        break;
                    }
                    advance(1);
                }
            } else if (c == '"' || c == '\'') {
                tok.kind = c == '"' ? TokenKind::String : TokenKind::Char;
                advance(1);
                tok.terminated = false;
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    if (src_[pos_] == '\\') {
                        advance(pos_ + 1 < src_.size() && src_[pos_ + 1] != '\n' ? 2 : 1);
                        continue;
                    }
                    if (static_cast<unsigned char>(src_[pos_]) == c) {
                        advance(1);
                        tok.terminated = true;
                        break;
                    }
                    advance(1);
                }
            } else if (isIdentStart(c)) {
                tok.kind = TokenKind::Identifier;
                while (pos_ < src_.size() && isIdentPart(src_[pos_])) advance(1);
            } else if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
                tok.kind = TokenKind::Number;
                while (pos_ < src_.size()) {
                    const unsigned char d = src_[pos_];
                    if (std::isalnum(d) || d == '_' || d == '.') {
                        advance(1);
                    } else if ((d == '+' || d == '-') && pos_ > start &&
                               (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E' || src_[pos_ - 1] == 'p' ||
                                src_[pos_ - 1] == 'P')) {
                        advance(1);
                    } else {
                        break;
                    }
                }
            } else {
                std::size_t len = 1;
                for (auto p : kPuncts) {
                    if (src_.substr(pos_, p.size()) == p) {
                        len = p.size();
                        break;
                    }
                }
                advance(len);
            }
            tok.text = src_.substr(start, pos_ - start);
            (tok.isComment() ? out.comments : out.code).push_back(tok);
        }
        return out;
    }

private:
    [[nodiscard]] char peek(std::size_t n) const { return pos_ + n < src_.size() ? src_[pos_ + n] : '\0'; }

    void advance(std::size_t n) {
        for (std::size_t k = 0; k < n && pos_ < src_.size(); ++k, ++pos_) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
                ++col_;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

constexpr std::array<std::string_view, 51> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",     "catch",     "char",
    "class",    "const",      "continue",  "default",   "do",       "double",   "else",      "enum",
    "extends",  "final",      "finally",   "float",     "for",      "goto",     "if",        "implements",
    "import",   "instanceof", "int",       "interface", "long",     "native",   "new",       "package",
    "private",  "protected",  "public",    "return",    "short",    "static",   "strictfp",  "super",
    "switch",   "synchronized", "this",    "throw",     "throws",   "transient", "try",      "void",
    "volatile", "while",      "var"};

constexpr std::array<std::string_view, 12> kModifiers = {
    "public", "protected", "private", "static",   "final",     "abstract",
    "default", "synchronized", "native", "strictfp", "transient", "volatile"};

bool isModifier(std::string_view w) { return std::find(kModifiers.begin(), kModifiers.end(), w) != kModifiers.end(); }

bool isWordLike(const Token& t) {
    return t.kind == TokenKind::Identifier || t.kind == TokenKind::Number || t.kind == TokenKind::String ||
           t.kind == TokenKind::Char;
}

// Skips `@Name`, `@a.b.Name` and `@Name(...)`; returns the index after it.
std::size_t skipAnnotation(const std::vector<Token>& code, std::size_t i, std::size_t limit) {
    if (i >= limit || !code[i].is("@") || i + 1 >= limit || code[i + 1].kind != TokenKind::Identifier ||
        code[i + 1].is("interface")) {
        return i;
    }
    std::size_t j = i + 2;
    while (j + 1 < limit && code[j].is(".") && code[j + 1].kind == TokenKind::Identifier) j += 2;
    if (j < limit && code[j].is("(")) {
        const std::size_t close = matchClose(code, j);
        if (close == npos || close >= limit) return i;
        j = close + 1;
    }
    return j;
}

// Reads a type starting at i: qualified name, generic args, array dims.
// Returns index after the type, or npos.
std::size_t readType(const std::vector<Token>& code, std::size_t i, std::size_t limit) {
    if (i >= limit) return npos;
    if (code[i].is("?")) return npos;
    if (code[i].kind != TokenKind::Identifier) return npos;
    if (isKeyword(code[i].text) && !isPrimitive(code[i].text) && !code[i].is("void") && !code[i].is("var")) {
        return npos;
    }
    std::size_t j = i + 1;
    for (;;) {
        if (j < limit && code[j].is("<")) {
            j = skipAngles(code, j);
            if (j == npos || j > limit) return npos;
        }
        if (j + 1 < limit && code[j].is(".") && code[j + 1].kind == TokenKind::Identifier) {
            j += 2;
            continue;
        }
        break;
    }
    while (j + 1 < limit && code[j].is("[") && code[j + 1].is("]")) j += 2;
    if (j < limit && code[j].is("...")) ++j;
    return j;
}

std::vector<std::vector<std::size_t>> splitTopLevel(const std::vector<Token>& code, std::size_t begin,
                                                    std::size_t end) {
    std::vector<std::vector<std::size_t>> parts(1);
    int depth = 0;
    for (std::size_t k = begin; k < end; ++k) {
        const auto& t = code[k];
        if (t.is("(") || t.is("[") || t.is("{") || t.is("<")) ++depth;
        if (t.is(")") || t.is("]") || t.is("}") || t.is(">")) --depth;
        if (t.is(">>")) depth -= 2;
        if (t.is(">>>")) depth -= 3;
        if (t.is(",") && depth == 0) {
            parts.emplace_back();
            continue;
        }
        parts.back().push_back(k);
    }
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
}

}  // namespace

Lexed tokenize(std::string_view source) { return Lexer(source).run(); }

bool isKeyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool isPrimitive(std::string_view word) {
    static constexpr std::array<std::string_view, 8> prims = {"boolean", "byte", "char",  "short",
                                                              "int",     "long", "float", "double"};
    return std::find(prims.begin(), prims.end(), word) != prims.end();
}

bool isKnownJdkType(std::string_view simpleName) {
    static const std::set<std::string_view> names = {
    "AbstractCollection",
    "AbstractList",
    "AbstractMap",
    "AbstractQueue",
    "AbstractSequentialList",
    "AbstractSet",
    "ArithmeticException",
    "ArrayBlockingQueue",
    "ArrayDeque",
    "ArrayIndexOutOfBoundsException",
    "ArrayList",
    "ArrayStoreException",
    "Arrays",
    "AssertionError",
    "AtomicBoolean",
    "AtomicInteger",
    "AtomicLong",
    "AtomicReference",
    "AutoCloseable",
    "BiConsumer",
    "BiFunction",
    "BiPredicate",
    "BigDecimal",
    "BigInteger",
    "BinaryOperator",
    "BitSet",
    "BlockingQueue",
    "Boolean",
    "BooleanSupplier",
    "Byte",
    "Calendar",
    "Callable",
    "CharSequence",
    "Character",
    "CharacterCodingException",
    "Charset",
    "Class",
    "ClassCastException",
    "ClassLoader",
    "ClassNotFoundException",
    "CloneNotSupportedException",
    "Cloneable",
    "Collection",
    "Collections",
    "Collector",
    "Collectors",
    "Comparable",
    "Comparator",
    "CompletableFuture",
    "ConcurrentHashMap",
    "ConcurrentLinkedQueue",
    "ConcurrentMap",
    "ConcurrentModificationException",
    "ConcurrentSkipListMap",
    "ConcurrentSkipListSet",
    "Consumer",
    "CopyOnWriteArrayList",
    "CopyOnWriteArraySet",
    "CountDownLatch",
    "CyclicBarrier",
    "Date",
    "Deprecated",
    "Deque",
    "Double",
    "DoubleFunction",
    "DoubleStream",
    "Duration",
    "EmptyStackException",
    "Entry",
    "Enum",
    "EnumMap",
    "EnumSet",
    "Enumeration",
    "Error",
    "Exception",
    "ExecutionException",
    "Executor",
    "ExecutorService",
    "Executors",
    "Float",
    "ForkJoinPool",
    "Function",
    "FunctionalInterface",
    "Future",
    "HashMap",
    "HashSet",
    "Hashtable",
    "IOException",
    "IdentityHashMap",
    "IllegalAccessException",
    "IllegalArgumentException",
    "IllegalMonitorStateException",
    "IllegalStateException",
    "IllformedLocaleException",
    "IndexOutOfBoundsException",
    "InheritableThreadLocal",
    "InputMismatchException",
    "InputStream",
    "Instant",
    "InstantiationException",
    "IntBinaryOperator",
    "IntConsumer",
    "IntFunction",
    "IntPredicate",
    "IntStream",
    "IntSupplier",
    "IntUnaryOperator",
    "Integer",
    "InterruptedException",
    "Iterable",
    "Iterator",
    "LinkageError",
    "LinkedBlockingQueue",
    "LinkedHashMap",
    "LinkedHashSet",
    "LinkedList",
    "List",
    "ListIterator",
    "LocalDate",
    "LocalDateTime",
    "Locale",
    "Lock",
    "Long",
    "LongFunction",
    "LongStream",
    "Map",
    "Matcher",
    "Math",
    "MathContext",
    "MissingResourceException",
    "NavigableMap",
    "NavigableSet",
    "NegativeArraySizeException",
    "NoSuchElementException",
    "NoSuchFieldException",
    "NoSuchMethodException",
    "NullPointerException",
    "Number",
    "NumberFormatException",
    "ObjIntConsumer",
    "Object",
    "Objects",
    "Optional",
    "OptionalDouble",
    "OptionalInt",
    "OptionalLong",
    "OutOfMemoryError",
    "OutputStream",
    "Override",
    "Pattern",
    "PatternSyntaxException",
    "Predicate",
    "PrintStream",
    "PriorityQueue",
    "Process",
    "ProcessBuilder",
    "Properties",
    "Queue",
    "Random",
    "RandomAccess",
    "Record",
    "ReentrantLock",
    "ReflectiveOperationException",
    "RoundingMode",
    "Runnable",
    "Runtime",
    "RuntimeException",
    "SafeVarargs",
    "Scanner",
    "SecurityException",
    "Semaphore",
    "SequencedCollection",
    "SequencedMap",
    "SequencedSet",
    "Serializable",
    "Set",
    "Short",
    "SortedMap",
    "SortedSet",
    "Spliterator",
    "Spliterators",
    "Stack",
    "StackOverflowError",
    "StandardCharsets",
    "Stream",
    "StreamSupport",
    "StrictMath",
    "String",
    "StringBuffer",
    "StringBuilder",
    "StringIndexOutOfBoundsException",
    "StringJoiner",
    "Supplier",
    "SuppressWarnings",
    "System",
    "Thread",
    "ThreadLocal",
    "ThreadLocalRandom",
    "Throwable",
    "TimeUnit",
    "TimeoutException",
    "Timer",
    "TimerTask",
    "ToDoubleFunction",
    "ToIntFunction",
    "ToLongFunction",
    "TreeMap",
    "TreeSet",
    "UUID",
    "UnaryOperator",
    "UncheckedIOException",
    "UnsupportedEncodingException",
    "UnsupportedOperationException",
    "Vector",
    "Void",
    "WeakHashMap"};
    return names.count(simpleName) > 0;
}

std::size_t matchClose(const std::vector<Token>& tokens, std::size_t open) {
    if (open >= tokens.size()) return npos;
    const std::string_view o = tokens[open].text;
    const std::string_view c = o == "(" ? ")" : o == "[" ? "]" : o == "{" ? "}" : "";
    if (c.empty()) return npos;
    int depth = 0;
    for (std::size_t k = open; k < tokens.size(); ++k) {
        if (tokens[k].text == o) ++depth;
        else if (tokens[k].text == c && --depth == 0) return k;
    }
    return npos;
}

std::size_t skipAngles(const std::vector<Token>& tokens, std::size_t open) {
    int depth = 0;
    for (std::size_t k = open; k < tokens.size(); ++k) {
        const auto& t = tokens[k];
        if (t.is("<")) ++depth;
        else if (t.is(">")) depth -= 1;
        else if (t.is(">>")) depth -= 2;
        else if (t.is(">>>")) depth -= 3;
        else if (t.is(";") || t.is("{") || t.is("}") || t.is("=") || t.is("(") || t.is(")") || t.is("&&") ||
                 t.is("||")) {
            return npos;
        }
        if (depth <= 0) return depth == 0 ? k + 1 : npos;
    }
    return npos;
}

std::string joinTokens(const std::vector<Token>& tokens, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t k = begin; k < end && k < tokens.size(); ++k) {
        const auto& t = tokens[k];
        if (k > begin) {
            const auto& prev = tokens[k - 1];
            const bool space = (isWordLike(prev) && isWordLike(t)) || prev.is(",") || prev.is("?") ||
                               (prev.is("&") && !t.is("&")) || (t.is("&") && !prev.is("&"));
            if (space) out += ' ';
        }
        out.append(t.text);
    }
    return out;
}

std::optional<MethodHeader> parseMethodAt(const std::vector<Token>& code, std::size_t i, std::size_t limit) {
    MethodHeader h;
    h.begin = i;
    std::size_t j = i;
    for (;;) {
        if (j < limit && code[j].is("@")) {
            const std::size_t next = skipAnnotation(code, j, limit);
            if (next == j) return std::nullopt;
            h.annotations.push_back(joinTokens(code, j, next));
            j = next;
        } else if (j < limit && code[j].kind == TokenKind::Identifier && isModifier(code[j].text)) {
            h.modifiers.emplace_back(code[j].text);
            ++j;
        } else {
            break;
        }
    }
    if (j < limit && code[j].is("<")) {
        const std::size_t after = skipAngles(code, j);
        if (after == npos || after > limit) return std::nullopt;
        h.typeParameters = joinTokens(code, j, after);
        j = after;
        while (j < limit && code[j].is("@")) {
            const std::size_t next = skipAnnotation(code, j, limit);
            if (next == j) return std::nullopt;
            j = next;
        }
    }
    if (j >= limit || code[j].kind != TokenKind::Identifier) return std::nullopt;

    if (j + 1 < limit && code[j + 1].is("(")) {
        // Constructor: the name directly precedes the parameter list.
        if (isKeyword(code[j].text)) return std::nullopt;
        h.nameToken = j;
    } else {
        const std::size_t afterType = readType(code, j, limit);
        if (afterType == npos || afterType + 1 >= limit) return std::nullopt;
        if (code[afterType].kind != TokenKind::Identifier || isKeyword(code[afterType].text)) return std::nullopt;
        if (!code[afterType + 1].is("(")) return std::nullopt;
        h.returnType = joinTokens(code, j, afterType);
        h.nameToken = afterType;
    }
    h.name = std::string(code[h.nameToken].text);
    h.paramsOpen = h.nameToken + 1;
    h.paramsClose = matchClose(code, h.paramsOpen);
    if (h.paramsClose == npos || h.paramsClose >= limit) return std::nullopt;

    for (const auto& part : splitTopLevel(code, h.paramsOpen + 1, h.paramsClose)) {
        std::size_t p = 0;
        while (p < part.size()) {
            const auto& t = code[part[p]];
            if (t.is("final")) {
                ++p;
            } else if (t.is("@") && p + 1 < part.size()) {
                const std::size_t next = skipAnnotation(code, part[p], part.back() + 1);
                if (next == part[p]) return std::nullopt;
                while (p < part.size() && part[p] < next) ++p;
            } else {
                break;
            }
        }
        if (part.size() < p + 2) return std::nullopt;
        const auto& nameTok = code[part.back()];
        if (nameTok.kind != TokenKind::Identifier || isKeyword(nameTok.text)) return std::nullopt;
        const std::size_t typeEnd = readType(code, part[p], part.back());
        if (typeEnd != part.back()) return std::nullopt;
        h.params.push_back({joinTokens(code, part[p], part.back()), std::string(nameTok.text)});
    }

    j = h.paramsClose + 1;
    while (j + 1 < limit && code[j].is("[") && code[j + 1].is("]")) j += 2;
    if (j < limit && code[j].is("throws")) {
        ++j;
        for (;;) {
            const std::size_t after = readType(code, j, limit);
            if (after == npos) return std::nullopt;
            h.thrown.push_back(joinTokens(code, j, after));
            j = after;
            if (j < limit && code[j].is(",")) {
                ++j;
                continue;
            }
            break;
        }
    }
    if (j < limit && code[j].is("default") && h.returnType.size()) {
        // annotation element default value
        while (j < limit && !code[j].is(";")) ++j;
    }
    if (j >= limit) return std::nullopt;
    if (code[j].is(";")) {
        h.bodyOpen = npos;
        h.end = j;
        return h;
    }
    if (!code[j].is("{")) return std::nullopt;
    h.bodyOpen = j;
    const std::size_t close = matchClose(code, j);
    if (close == npos || close >= limit) return std::nullopt;
    h.end = close;
    return h;
}

std::optional<TypeDecl> parseTypeDeclAt(const std::vector<Token>& code, std::size_t i, std::size_t limit) {
    std::size_t j = i;
    while (j < limit) {
        if (code[j].is("@") && j + 1 < limit && code[j + 1].is("interface")) {
            ++j;
            break;
        }
        if (code[j].is("@")) {
            const std::size_t next = skipAnnotation(code, j, limit);
            if (next == j) return std::nullopt;
            j = next;
        } else if (code[j].kind == TokenKind::Identifier && isModifier(code[j].text)) {
            ++j;
        } else {
            break;
        }
    }
    if (j + 1 >= limit) return std::nullopt;
    const auto& kw = code[j];
    if (!(kw.is("class") || kw.is("interface") || kw.is("enum") || kw.is("record"))) return std::nullopt;
    if (code[j + 1].kind != TokenKind::Identifier) return std::nullopt;
    TypeDecl decl;
    decl.keyword = std::string(kw.text);
    decl.name = std::string(code[j + 1].text);
    std::size_t k = j + 2;
    while (k < limit && !code[k].is("{") && !code[k].is(";")) {
        if (code[k].is("(")) {
            const std::size_t close = matchClose(code, k);
            if (close == npos) return std::nullopt;
            k = close + 1;
            continue;
        }
        ++k;
    }
    if (k >= limit || !code[k].is("{")) return std::nullopt;
    decl.bodyOpen = k;
    decl.bodyClose = matchClose(code, k);
    if (decl.bodyClose == npos || decl.bodyClose >= limit) return std::nullopt;
    return decl;
}

std::size_t skipMember(const std::vector<Token>& code, std::size_t i, std::size_t limit) {
    std::size_t j = i;
    while (j < limit) {
        const auto& t = code[j];
        if (t.is(";")) return j + 1;
        if (t.is("(") || t.is("[")) {
            const std::size_t close = matchClose(code, j);
            if (close == npos || close >= limit) return limit;
            j = close + 1;
            continue;
        }
        if (t.is("{")) {
            const std::size_t close = matchClose(code, j);
            if (close == npos || close >= limit) return limit;
            // `int[] a = {1, 2};` continues to the semicolon.
            if (close + 1 < limit && (code[close + 1].is(";") || code[close + 1].is(",") || code[close + 1].is(")"))) {
                j = close + 1;
                continue;
            }
            return close + 1;
        }
        if (t.is("}")) return j + 1;
        ++j;
    }
    return limit;
}

std::vector<Token> commentsBetween(const Lexed& lexed, std::size_t from, std::size_t to) {
    std::vector<Token> out;
    for (const auto& c : lexed.comments) {
        if (c.offset >= from && c.end() <= to) out.push_back(c);
    }
    return out;
}

std::string dedent(std::string_view text, std::size_t firstColumn) {
    const std::size_t indent = firstColumn > 0 ? firstColumn - 1 : 0;
    std::string out;
    std::size_t pos = 0;
    bool first = true;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!first) {
            std::size_t strip = 0;
            while (strip < indent && strip < line.size() && (line[strip] == ' ' || line[strip] == '\t')) ++strip;
            line.remove_prefix(strip);
        }
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
            line.remove_suffix(1);
        }
        out.append(line);
        if (nl == text.size()) break;
        out += '\n';
        pos = nl + 1;
        first = false;
    }
    return out;
}

}  // namespace oracle_forge::java
