#include "oracle_forge/prompt_engine.hpp"

#include <regex>

#include <nlohmann/json.hpp>

#include "oracle_forge/assets.hpp"
#include "oracle_forge/errors.hpp"
#include "oracle_forge/text.hpp"

namespace oracle_forge {
namespace {

constexpr std::string_view kClassType = "{{class_type}}";
constexpr std::string_view kExamples = "{{examples}}";
constexpr std::string_view kDescription = "{{method_description}}";

const std::regex& stepLine() {
    static const std::regex re(R"(^\s*Step \d+ - .*$)");
    return re;
}

std::string replaceAll(std::string s, std::string_view from, std::string_view to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
        s.replace(pos, from.size(), to);
    }
    return s;
}

std::string indentLines(std::string_view body, std::string_view indent) {
    std::vector<std::string> lines;
    for (auto line : text::split(body, '\n')) {
        lines.push_back(line.empty() ? std::string() : std::string(indent) + std::string(line));
    }
    return text::join(lines, "\n");
}

std::string renderExamples(const std::vector<FewShotExample>& bank) {
    std::vector<std::string> parts;
    for (const auto& ex : bank) {
        parts.push_back("    <description>\n" + indentLines(ex.description, "        ") + "\n    </description>\n" +
                        "    <oracle>\n" + indentLines(ex.oracle, "        ") + "\n    </oracle>");
    }
    return text::join(parts, "\n");
}

std::string dropSteps(const std::string& body) {
    std::vector<std::string> kept;
    for (auto line : text::split(body, '\n')) {
        if (!std::regex_match(line.begin(), line.end(), stepLine())) kept.emplace_back(line);
    }
    return text::join(kept, "\n");
}

struct TemplateSection {
    SectionTag tag;
    std::string body;
};

std::vector<TemplateSection> parseTemplate(std::string_view tmpl) {
    static const std::regex re(R"(<(context|examples|instruction)>\n([\s\S]*?)\n</\1>)");
    std::vector<TemplateSection> out;
    const std::string s(tmpl);
    for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) {
        const std::string name = (*it)[1];
        const SectionTag tag = name == "context" ? SectionTag::Context
                               : name == "examples" ? SectionTag::Examples
                                                    : SectionTag::Instruction;
        out.push_back({tag, (*it)[2]});
    }
    const bool hasInstruction = std::any_of(out.begin(), out.end(), [](const TemplateSection& t) {
        return t.tag == SectionTag::Instruction && t.body.find(kDescription) != std::string::npos;
    });
    if (!hasInstruction) {
        throw InvalidConfig("prompt template needs an <instruction> section containing " + std::string(kDescription));
    }
    return out;
}

}  // namespace

std::string_view toString(SectionTag tag) {
    switch (tag) {
    case SectionTag::Context:
        return "context";
    case SectionTag::Examples:
        return "examples";
    case SectionTag::Instruction:
        return "instruction";
    }
    return "";
}

Ablation Ablation::parse(std::string_view flags) {
    Ablation a;
    for (auto raw : text::split(flags, ',')) {
        const auto f = text::trim(raw);
        if (f.empty()) continue;
        if (f == "noAssistant") a.noAssistant = true;
        else if (f == "noFewShot") a.noFewShot = true;
        else if (f == "noChainOfThought") a.noChainOfThought = true;
        else throw InvalidConfig("unknown ablation flag \"" + std::string(f) + "\"");
    }
    return a;
}

std::string Ablation::str() const {
    std::vector<std::string> parts;
    if (noAssistant) parts.emplace_back("noAssistant");
    if (noFewShot) parts.emplace_back("noFewShot");
    if (noChainOfThought) parts.emplace_back("noChainOfThought");
    return text::join(parts, ",");
}

PromptDocument renderPrompt(const PartitionUnit& unit, const PromptConfig& cfg) {
    if (cfg.classTypeName.empty()) throw InvalidConfig("classTypeName must not be empty");
    if (cfg.fewShotBank.empty() && !cfg.ablation.noFewShot) {
        throw MissingFewShot("few-shot bank is empty; pass noFewShot to render without examples");
    }
    const auto sections = parseTemplate(cfg.templateText ? std::string_view(*cfg.templateText) : defaultPromptTemplate());

    PromptDocument doc;
    for (const auto& sec : sections) {
        std::string body = sec.body;
        switch (sec.tag) {
        case SectionTag::Context:
            if (cfg.ablation.noAssistant) continue;
            body = replaceAll(body, kClassType, cfg.classTypeName);
            break;
        case SectionTag::Examples:
            if (cfg.ablation.noFewShot) continue;
            body = replaceAll(body, kExamples, renderExamples(cfg.fewShotBank));
            break;
        case SectionTag::Instruction: {
            if (cfg.ablation.noChainOfThought) body = dropSteps(body);
            body = replaceAll(body, kClassType, cfg.classTypeName);
            const std::size_t at = body.find(kDescription);
            body.replace(at, kDescription.size(), unit.renderedDescription);
            break;
        }
        }
        doc.sections.emplace_back(sec.tag, std::move(body));
    }

    std::vector<std::string> wrapped;
    for (const auto& [tag, body] : doc.sections) {
        const std::string name(toString(tag));
        wrapped.push_back("<" + name + ">\n" + body + "\n</" + name + ">");
    }
    doc.renderedText = text::join(wrapped, "\n\n") + "\n";
    return doc;
}

std::vector<FewShotExample> parseFewShotBank(std::string_view json) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidConfig(std::string("few-shot bank is not valid JSON: ") + e.what());
    }
    if (!root.is_array()) throw InvalidConfig("few-shot bank must be a JSON array");
    std::vector<FewShotExample> bank;
    for (const auto& item : root) {
        if (!item.is_object() || !item.contains("description") || !item.contains("oracle") ||
            !item["description"].is_string() || !item["oracle"].is_string()) {
            throw InvalidConfig("few-shot entries need string fields \"description\" and \"oracle\"");
        }
        bank.push_back({item["description"].get<std::string>(), item["oracle"].get<std::string>()});
    }
    return bank;
}

std::vector<FewShotExample> defaultFewShotBank() {
    static const std::vector<FewShotExample> bank = parseFewShotBank(assets::fewShotBank());
    return bank;
}

std::string_view defaultPromptTemplate() { return assets::promptTemplate(); }

PromptConfig defaultPromptConfig(const std::string& classFqcn) {
    PromptConfig cfg;
    cfg.classTypeName = classFqcn;
    cfg.fewShotBank = defaultFewShotBank();
    return cfg;
}

}  // namespace oracle_forge
