#include "oracle_forge/doc_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/java_scan.hpp"
#include "oracle_forge/text.hpp"

namespace oracle_forge {
namespace {

using ordered_json = nlohmann::ordered_json;

SourcePosition positionOf(std::string_view text, std::size_t byteOffset) {
    SourcePosition pos{1, 1};
    for (std::size_t i = 0; i < byteOffset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

bool isFqcn(std::string_view s) {
    if (s.empty()) return false;
    for (auto part : text::split(s, '.')) {
        if (!isJavaIdentifier(part)) return false;
    }
    return true;
}

// Strips a trailing parameter name from `Type name` written inside a ref.
std::string refParamType(std::string_view raw) {
    std::string t = text::collapseSpaces(raw);
    int depth = 0;
    std::size_t lastSpace = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '<') ++depth;
        else if (t[i] == '>') --depth;
        else if (t[i] == ' ' && depth == 0) lastSpace = i;
    }
    if (lastSpace != std::string::npos) {
        const std::string tail = t.substr(lastSpace + 1);
        const std::string head = t.substr(0, lastSpace);
        if (isJavaIdentifier(tail) && !head.empty() && head.back() != ',' && head != "?" &&
            head.find("extends") == std::string::npos && head.find("super") == std::string::npos) {
            return head;
        }
    }
    return t;
}

std::vector<std::string> splitParams(std::string_view inner) {
    std::vector<std::string> out;
    if (text::trim(inner).empty()) return out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size() && inner[i] == '<') ++depth;
        if (i < inner.size() && inner[i] == '>') --depth;
        if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
            out.push_back(std::string(text::trim(inner.substr(start, i - start))));
            start = i + 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical JSON

const ordered_json& requireKey(const ordered_json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw MalformedDoc("missing key \"" + std::string(key) + "\" in " + path);
    return *it;
}

std::string requireString(const ordered_json& v, const std::string& path) {
    if (!v.is_string()) throw MalformedDoc("expected string at " + path);
    return v.get<std::string>();
}

std::vector<std::string> requireStringArray(const ordered_json& v, const std::string& path) {
    if (!v.is_array()) throw MalformedDoc("expected array at " + path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(requireString(v[i], path + "/" + std::to_string(i)));
    return out;
}

void rejectUnknownKeys(const ordered_json& obj, std::initializer_list<std::string_view> known, const std::string& path) {
    for (const auto& [k, _] : obj.items()) {
        if (std::find(known.begin(), known.end(), k) == known.end()) {
            throw MalformedDoc("unknown key \"" + k + "\" in " + path);
        }
    }
}

ClassDoc parseCanonicalJson(std::string_view source, std::string sourcePath) {
    ordered_json root;
    try {
        root = ordered_json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw MalformedDoc(std::string("invalid JSON: ") + e.what(), positionOf(source, byte));
    }
    if (!root.is_object()) throw MalformedDoc("class document must be a JSON object");
    rejectUnknownKeys(root, {"fqcn", "kind", "methods"}, "/");

    ClassDoc doc;
    doc.sourcePath = std::move(sourcePath);
    doc.fqcn = requireString(requireKey(root, "fqcn", "/"), "/fqcn");
    const std::string kind = requireString(requireKey(root, "kind", "/"), "/kind");
    if (kind == "class") doc.kind = TypeKind::Class;
    else if (kind == "interface") doc.kind = TypeKind::Interface;
    else throw MalformedDoc("kind must be \"class\" or \"interface\", got \"" + kind + "\"");

    const auto& methods = requireKey(root, "methods", "/");
    if (!methods.is_array()) throw MalformedDoc("expected array at /methods");
    for (std::size_t i = 0; i < methods.size(); ++i) {
        const std::string path = "/methods/" + std::to_string(i);
        const auto& m = methods[i];
        if (!m.is_object()) throw MalformedDoc("expected object at " + path);
        rejectUnknownKeys(m, {"name", "paramTypes", "returnType", "description", "throws", "seeAlso", "deprecated"},
                          path);
        MethodDoc md;
        md.name = requireString(requireKey(m, "name", path), path + "/name");
        md.returnType = requireString(requireKey(m, "returnType", path), path + "/returnType");
        if (m.contains("paramTypes")) md.paramTypes = requireStringArray(m["paramTypes"], path + "/paramTypes");
        for (auto& p : md.paramTypes) p = text::collapseSpaces(p);
        if (m.contains("description")) {
            md.description = normalizeProse(requireString(m["description"], path + "/description"));
        }
        if (m.contains("throws")) {
            const auto& th = m["throws"];
            if (!th.is_array()) throw MalformedDoc("expected array at " + path + "/throws");
            for (std::size_t k = 0; k < th.size(); ++k) {
                const std::string tpath = path + "/throws/" + std::to_string(k);
                if (!th[k].is_object()) throw MalformedDoc("expected object at " + tpath);
                rejectUnknownKeys(th[k], {"type", "condition"}, tpath);
                ThrowsTag tag;
                tag.exceptionType = std::string(text::trim(requireString(requireKey(th[k], "type", tpath), tpath + "/type")));
                if (th[k].contains("condition")) {
                    tag.condition = normalizeProse(requireString(th[k]["condition"], tpath + "/condition"));
                }
                md.throwsTags.push_back(std::move(tag));
            }
        }
        if (m.contains("seeAlso")) {
            const auto refs = requireStringArray(m["seeAlso"], path + "/seeAlso");
            for (std::size_t k = 0; k < refs.size(); ++k) {
                auto ref = MethodRef::parse(refs[k]);
                if (!ref) {
                    throw MalformedDoc("\"" + refs[k] + "\" is not a method reference at " + path + "/seeAlso/" +
                                       std::to_string(k));
                }
                md.seeAlso.push_back(std::move(*ref));
            }
        }
        if (m.contains("deprecated")) {
            if (!m["deprecated"].is_boolean()) throw MalformedDoc("expected boolean at " + path + "/deprecated");
            md.deprecated = m["deprecated"].get<bool>();
        }
        doc.methods.push_back(std::move(md));
    }
    validate(doc);
    return doc;
}

// ---------------------------------------------------------------------------
// Source comments

struct DocComment {
    std::string description;
    std::vector<ThrowsTag> throwsTags;
    std::vector<MethodRef> seeAlso;
    bool deprecated = false;
};

std::string decodeEntity(std::string_view name) {
    if (name == "lt") return "<";
    if (name == "gt") return ">";
    if (name == "amp") return "&";
    if (name == "quot") return "\"";
    if (name == "apos" || name == "#39") return "'";
    if (name == "nbsp") return " ";
    return {};
}

// Renders inline tags and HTML markup of a Javadoc fragment as plain prose.
std::string renderJavadocProse(std::string_view in) {
    static const std::set<std::string, std::less<>> breakTags = {
        "p", "ul", "ol", "li", "br", "pre", "blockquote", "h1", "h2", "h3", "h4", "h5", "h6",
        "dl", "dt", "dd", "table", "tr", "hr", "div"};
    std::string out;
    std::size_t i = 0;
    while (i < in.size()) {
        const char c = in[i];
        if (c == '{' && i + 1 < in.size() && in[i + 1] == '@') {
            int depth = 0;
            std::size_t j = i;
            for (; j < in.size(); ++j) {
                if (in[j] == '{') ++depth;
                else if (in[j] == '}' && --depth == 0) break;
            }
            const std::string_view body = in.substr(i + 2, (j < in.size() ? j : in.size()) - i - 2);
            std::size_t ws = 0;
            while (ws < body.size() && !std::isspace(static_cast<unsigned char>(body[ws]))) ++ws;
            const std::string_view tag = body.substr(0, ws);
            const std::string_view arg = text::trim(body.substr(ws));
            if (tag == "code" || tag == "literal" || tag == "value") {
                out.append(arg);
            } else if (tag == "link" || tag == "linkplain") {
                std::string_view ref = arg;
                std::string_view label;
                std::size_t split = std::string_view::npos;
                int paren = 0;
                for (std::size_t k = 0; k < arg.size(); ++k) {
                    if (arg[k] == '(') ++paren;
                    else if (arg[k] == ')') --paren;
                    else if (std::isspace(static_cast<unsigned char>(arg[k])) && paren == 0) {
                        split = k;
                        break;
                    }
                }
                if (split != std::string_view::npos) {
                    ref = arg.substr(0, split);
                    label = text::trim(arg.substr(split));
                }
                if (!label.empty()) {
                    out.append(label);
                } else {
                    std::string r(ref);
                    if (!r.empty() && r.front() == '#') r.erase(0, 1);
                    std::replace(r.begin(), r.end(), '#', '.');
                    out += r;
                }
            }
            i = j < in.size() ? j + 1 : in.size();
            continue;
        }
        if (c == '<') {
            std::size_t j = i + 1;
            if (j < in.size() && in[j] == '/') ++j;
            std::size_t nameStart = j;
            while (j < in.size() && std::isalnum(static_cast<unsigned char>(in[j]))) ++j;
            const std::size_t close = in.find('>', j);
            if (j > nameStart && std::isalpha(static_cast<unsigned char>(in[nameStart])) && close != std::string_view::npos) {
                std::string name(in.substr(nameStart, j - nameStart));
                std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
                if (breakTags.count(name)) out += "\n\n";
                i = close + 1;
                continue;
            }
        }
        if (c == '&') {
            const std::size_t semi = in.find(';', i);
            if (semi != std::string_view::npos && semi - i <= 6) {
                const std::string decoded = decodeEntity(in.substr(i + 1, semi - i - 1));
                if (!decoded.empty()) {
                    out += decoded;
                    i = semi + 1;
                    continue;
                }
            }
        }
        out += c;
        ++i;
    }
    return out;
}

// Strips comment delimiters and leading asterisks, one line per line.
std::string commentBody(std::string_view raw) {
    std::string_view body = raw;
    if (body.substr(0, 3) == "/**") body.remove_prefix(3);
    if (body.size() >= 2 && body.substr(body.size() - 2) == "*/") body.remove_suffix(2);
    std::string out;
    for (auto line : text::split(body, '\n')) {
        std::string_view l = line;
        std::size_t k = 0;
        while (k < l.size() && (l[k] == ' ' || l[k] == '\t')) ++k;
        if (k < l.size() && l[k] == '*') {
            l.remove_prefix(k + 1);
            if (!l.empty() && l.front() == ' ') l.remove_prefix(1);
        }
        out.append(l);
        out += '\n';
    }
    return out;
}

DocComment parseDocComment(std::string_view raw) {
    const std::string body = commentBody(raw);
    DocComment dc;
    std::string description;
    std::vector<std::pair<std::string, std::string>> tags;
    for (auto line : text::split(body, '\n')) {
        const std::string_view t = text::trim(line);
        if (!t.empty() && t.front() == '@') {
            std::size_t e = 1;
            while (e < t.size() && std::isalpha(static_cast<unsigned char>(t[e]))) ++e;
            tags.emplace_back(std::string(t.substr(1, e - 1)), std::string(text::trim(t.substr(e))));
            continue;
        }
        std::string& target = tags.empty() ? description : tags.back().second;
        target.append(line);
        target += '\n';
    }
    dc.description = normalizeProse(renderJavadocProse(description));
    for (auto& [name, value] : tags) {
        if (name == "throws" || name == "exception") {
            const std::string v = normalizeProse(value);
            const std::size_t sp = v.find_first_of(" \n");
            ThrowsTag tag;
            tag.exceptionType = v.substr(0, sp);
            if (sp != std::string::npos) tag.condition = normalizeProse(renderJavadocProse(v.substr(sp + 1)));
            if (!tag.exceptionType.empty()) dc.throwsTags.push_back(std::move(tag));
        } else if (name == "see") {
            const std::string v = text::collapseSpaces(value);
            std::size_t end = v.find('(');
            std::size_t space = v.find(' ');
            std::string refText;
            if (end != std::string::npos && (space == std::string::npos || end < space)) {
                const std::size_t close = v.find(')', end);
                refText = v.substr(0, close == std::string::npos ? v.size() : close + 1);
            } else {
                refText = v.substr(0, space);
            }
            if (auto ref = MethodRef::parse(refText)) dc.seeAlso.push_back(std::move(*ref));
        } else if (name == "deprecated") {
            dc.deprecated = true;
        }
    }
    return dc;
}

ClassDoc parseSourceComments(std::string_view source, std::string sourcePath) {
    const auto lexed = java::tokenize(source);
    for (const auto& c : lexed.comments) {
        if (!c.terminated) throw MalformedDoc("unterminated comment", SourcePosition{c.line, c.column});
    }
    const auto& code = lexed.code;
    for (const auto& t : code) {
        if (!t.terminated) throw MalformedDoc("unterminated literal", SourcePosition{t.line, t.column});
    }

    ClassDoc doc;
    doc.sourcePath = std::move(sourcePath);
    std::string pkg;
    std::optional<java::TypeDecl> decl;
    std::size_t i = 0;
    while (i < code.size()) {
        if (code[i].is("package")) {
            std::size_t j = i + 1;
            while (j < code.size() && !code[j].is(";")) pkg.append(code[j++].text);
            i = j + 1;
            continue;
        }
        if (code[i].is("import")) {
            while (i < code.size() && !code[i].is(";")) ++i;
            ++i;
            continue;
        }
        decl = java::parseTypeDeclAt(code, i, code.size());
        if (decl) break;
        ++i;
    }
    if (!decl) {
        const auto pos = code.empty() ? SourcePosition{1, 1} : SourcePosition{code.back().line, code.back().column};
        throw MalformedDoc("no class or interface declaration found", pos);
    }
    doc.fqcn = pkg.empty() ? decl->name : pkg + "." + decl->name;
    doc.kind = (decl->keyword == "interface") ? TypeKind::Interface : TypeKind::Class;

    std::size_t prevEnd = code[decl->bodyOpen].end();
    std::size_t j = decl->bodyOpen + 1;
    while (j < decl->bodyClose) {
        if (code[j].is(";")) {
            prevEnd = code[j].end();
            ++j;
            continue;
        }
        if (auto nested = java::parseTypeDeclAt(code, j, decl->bodyClose)) {
            j = nested->bodyClose + 1;
            prevEnd = code[nested->bodyClose].end();
            continue;
        }
        auto header = java::parseMethodAt(code, j, decl->bodyClose);
        if (!header) {
            const std::size_t next = java::skipMember(code, j, decl->bodyClose);
            prevEnd = code[next - 1].end();
            j = next;
            continue;
        }
        const bool isPrivate = std::find(header->modifiers.begin(), header->modifiers.end(), "private") !=
                               header->modifiers.end();
        if (!header->returnType.empty() && !isPrivate) {
            MethodDoc md;
            md.name = header->name;
            md.returnType = header->returnType;
            for (const auto& p : header->params) md.paramTypes.push_back(p.type);
            const auto comments = java::commentsBetween(lexed, prevEnd, code[j].offset);
            for (auto it = comments.rbegin(); it != comments.rend(); ++it) {
                if (it->kind == java::TokenKind::DocComment) {
                    auto dc = parseDocComment(it->text);
                    md.description = std::move(dc.description);
                    md.throwsTags = std::move(dc.throwsTags);
                    md.seeAlso = std::move(dc.seeAlso);
                    md.deprecated = dc.deprecated;
                    break;
                }
            }
            for (const auto& a : header->annotations) {
                if (a == "@Deprecated" || a.rfind("@Deprecated(", 0) == 0 || a == "@java.lang.Deprecated") {
                    md.deprecated = true;
                }
            }
            doc.methods.push_back(std::move(md));
        }
        prevEnd = code[header->end].end();
        j = header->end + 1;
    }
    validate(doc);
    return doc;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<MethodRef> MethodRef::parse(std::string_view raw) {
    std::string_view t = text::trim(raw);
    MethodRef ref;
    const std::size_t hash = t.find('#');
    if (hash != std::string_view::npos) {
        const std::string_view owner = t.substr(0, hash);
        if (!owner.empty()) {
            if (!isFqcn(owner)) return std::nullopt;
            ref.qualifier = std::string(owner);
        }
        t.remove_prefix(hash + 1);
    }
    const std::size_t open = t.find('(');
    const std::string_view name = text::trim(t.substr(0, open));
    if (!isJavaIdentifier(name)) return std::nullopt;
    ref.name = std::string(name);
    if (open != std::string_view::npos) {
        if (t.back() != ')') return std::nullopt;
        const std::string_view inner = t.substr(open + 1, t.size() - open - 2);
        if (inner.find_first_of("()") != std::string_view::npos) return std::nullopt;
        std::vector<std::string> params;
        for (const auto& p : splitParams(inner)) {
            if (p.empty()) return std::nullopt;
            params.push_back(refParamType(p));
        }
        ref.paramTypes = std::move(params);
    }
    return ref;
}

std::string MethodRef::str() const {
    std::string out;
    if (qualifier) out = *qualifier + "#";
    out += name;
    if (paramTypes) out += "(" + text::join(*paramTypes, ", ") + ")";
    return out;
}

std::string MethodDoc::signature() const {
    std::vector<std::string> erased;
    erased.reserve(paramTypes.size());
    for (const auto& p : paramTypes) erased.push_back(eraseTypeName(p));
    return name + "(" + text::join(erased, ",") + ")";
}

std::string ClassDoc::simpleName() const {
    const std::size_t dot = fqcn.rfind('.');
    return dot == std::string::npos ? fqcn : fqcn.substr(dot + 1);
}

ClassDoc parseClassDoc(std::string_view source, DocFormat format, std::string sourcePath) {
    switch (format) {
    case DocFormat::CanonicalJson:
        return parseCanonicalJson(source, std::move(sourcePath));
    case DocFormat::SourceComments:
        return parseSourceComments(source, std::move(sourcePath));
    }
    throw UnresolvableFormat("unknown documentation format");
}

DocFormat detectFormat(std::string_view path, std::string_view content) {
    auto endsWith = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
    };
    if (endsWith(".json")) return DocFormat::CanonicalJson;
    if (endsWith(".java")) return DocFormat::SourceComments;
    const std::string_view t = text::trim(content);
    if (!t.empty() && t.front() == '{') return DocFormat::CanonicalJson;
    if (t.find("/**") != std::string_view::npos &&
        (t.find("class ") != std::string_view::npos || t.find("interface ") != std::string_view::npos)) {
        return DocFormat::SourceComments;
    }
    throw UnresolvableFormat("cannot determine documentation format of \"" + std::string(path) + "\"");
}

std::string serializeCanonicalJson(const ClassDoc& doc) {
    ordered_json root;
    root["fqcn"] = doc.fqcn;
    root["kind"] = std::string(toString(doc.kind));
    root["methods"] = ordered_json::array();
    for (const auto& m : doc.methods) {
        ordered_json jm;
        jm["name"] = m.name;
        jm["paramTypes"] = m.paramTypes;
        jm["returnType"] = m.returnType;
        jm["description"] = m.description;
        jm["throws"] = ordered_json::array();
        for (const auto& t : m.throwsTags) {
            ordered_json jt;
            jt["type"] = t.exceptionType;
            jt["condition"] = t.condition;
            jm["throws"].push_back(std::move(jt));
        }
        jm["seeAlso"] = ordered_json::array();
        for (const auto& r : m.seeAlso) jm["seeAlso"].push_back(r.str());
        jm["deprecated"] = m.deprecated;
        root["methods"].push_back(std::move(jm));
    }
    return root.dump(2) + "\n";
}

std::optional<std::size_t> resolveSeeAlsoIndex(const ClassDoc& doc, const MethodRef& ref) {
    if (ref.qualifier && *ref.qualifier != doc.fqcn && *ref.qualifier != doc.simpleName()) return std::nullopt;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < doc.methods.size(); ++i) {
        const auto& m = doc.methods[i];
        if (m.name != ref.name) continue;
        if (ref.paramTypes) {
            if (m.paramTypes.size() != ref.paramTypes->size()) continue;
            bool same = true;
            for (std::size_t k = 0; k < m.paramTypes.size() && same; ++k) {
                same = eraseTypeName(m.paramTypes[k]) == eraseTypeName((*ref.paramTypes)[k]);
            }
            if (!same) continue;
        }
        hits.push_back(i);
    }
    if (hits.empty()) return std::nullopt;
    if (hits.size() > 1) {
        throw AmbiguousReference("see-also reference \"" + ref.str() + "\" matches " + std::to_string(hits.size()) +
                                 " overloads in " + doc.fqcn);
    }
    return hits.front();
}

std::optional<MethodDoc> resolveSeeAlso(const ClassDoc& doc, const MethodRef& ref) {
    if (auto idx = resolveSeeAlsoIndex(doc, ref)) return doc.methods[*idx];
    return std::nullopt;
}

void validate(const ClassDoc& doc) {
    if (!isFqcn(doc.fqcn)) throw MalformedDoc("invalid fully-qualified name \"" + doc.fqcn + "\"");
    std::set<std::string> seen;
    for (const auto& m : doc.methods) {
        if (!isJavaIdentifier(m.name)) throw MalformedDoc("invalid method name \"" + m.name + "\"");
        for (const auto& t : m.throwsTags) {
            if (t.exceptionType.empty()) throw MalformedDoc("empty exception type in " + m.name);
        }
        if (!seen.insert(m.signature()).second) {
            throw DuplicateSignature("duplicate method signature " + m.signature() + " in " + doc.fqcn);
        }
    }
}

std::string normalizeProse(std::string_view input) {
    std::vector<std::string> paragraphs;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) paragraphs.push_back(std::move(current));
        current.clear();
    };
    for (auto line : text::split(input, '\n')) {
        const std::string collapsed = text::collapseSpaces(line);
        if (collapsed.empty()) {
            flush();
            continue;
        }
        if (!current.empty()) current += ' ';
        current += collapsed;
    }
    flush();
    return text::join(paragraphs, "\n\n");
}

std::string eraseTypeName(std::string_view type) {
    type = text::trim(type);
    if (type.substr(0, 6) == "final " || type.substr(0, 6) == "final\t") type = text::trim(type.substr(6));
    std::string noGenerics;
    int depth = 0;
    for (char c : type) {
        if (c == '<') ++depth;
        else if (c == '>') --depth;
        else if (depth == 0 && !std::isspace(static_cast<unsigned char>(c))) noGenerics += c;
    }
    std::string suffix;
    while (noGenerics.size() >= 3 && noGenerics.substr(noGenerics.size() - 3) == "...") {
        noGenerics.resize(noGenerics.size() - 3);
        suffix += "[]";
    }
    while (noGenerics.size() >= 2 && noGenerics.substr(noGenerics.size() - 2) == "[]") {
        noGenerics.resize(noGenerics.size() - 2);
        suffix += "[]";
    }
    const std::size_t dot = noGenerics.rfind('.');
    if (dot != std::string::npos) noGenerics.erase(0, dot + 1);
    return noGenerics + suffix;
}

bool isJavaIdentifier(std::string_view s) {
    if (s.empty()) return false;
    const auto first = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(first) || first == '_' || first == '$' || first >= 0x80)) return false;
    for (unsigned char c : s) {
        if (!(std::isalnum(c) || c == '_' || c == '$' || c >= 0x80)) return false;
    }
    return !java::isKeyword(s);
}

std::string_view toString(TypeKind kind) { return kind == TypeKind::Class ? "class" : "interface"; }

}  // namespace oracle_forge
