#include "oracle_forge/artifacts.hpp"

#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"

namespace oracle_forge {
namespace {

using ojson = nlohmann::ordered_json;

nlohmann::json parseObject(std::string_view json, std::string_view what) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArtifact(std::string(what) + " is not valid JSON: " + e.what());
    }
    if (!root.is_object()) throw InvalidArtifact(std::string(what) + " must be a JSON object");
    if (!root.contains("schemaVersion") || !root["schemaVersion"].is_number_integer()) {
        throw InvalidArtifact(std::string(what) + " lacks schemaVersion");
    }
    requireSchemaVersion(root["schemaVersion"].get<int>(), what);
    return root;
}

}  // namespace

void requireSchemaVersion(int version, std::string_view what) {
    if (version != kSchemaVersion) {
        throw InvalidArtifact(std::string(what) + " has schemaVersion " + std::to_string(version) + "; expected " +
                              std::to_string(kSchemaVersion));
    }
}

std::string serializeUnits(const UnitSet& set) {
    ojson root;
    root["schemaVersion"] = kSchemaVersion;
    root["classDoc"] = ojson::parse(serializeCanonicalJson(set.doc));
    root["wholeClass"] = set.wholeClass;
    root["units"] = ojson::array();
    for (const auto& u : set.units) {
        ojson ju;
        ju["id"] = u.id();
        ju["anchor"] = u.anchor.signature();
        ju["related"] = ojson::array();
        for (const auto& r : u.related) ju["related"].push_back(r.signature());
        ju["renderedDescription"] = u.renderedDescription;
        root["units"].push_back(std::move(ju));
    }
    return root.dump(2) + "\n";
}

UnitSet parseUnits(std::string_view json) {
    const auto root = parseObject(json, "units file");
    try {
        UnitSet set;
        set.doc = parseClassDoc(root.at("classDoc").dump(), DocFormat::CanonicalJson);
        set.wholeClass = root.value("wholeClass", false);
        if (set.wholeClass) {
            set.units.push_back(wholeClassUnit(set.doc));
        } else {
            set.units = partition(set.doc);
        }
        // The stored ids must agree with the units rebuilt from the document.
        const auto& stored = root.at("units");
        if (stored.size() != set.units.size()) throw InvalidArtifact("units file does not match its class document");
        for (std::size_t i = 0; i < stored.size(); ++i) {
            if (stored[i].at("id").get<std::string>() != set.units[i].id()) {
                throw InvalidArtifact("unit " + stored[i].at("id").get<std::string>() +
                                      " does not match its class document");
            }
        }
        return set;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed units file: ") + e.what());
    } catch (const MalformedDoc& e) {
        throw InvalidArtifact(std::string("units file embeds an invalid class document: ") + e.what());
    }
}

std::string serializeExchanges(std::string_view fqcn, const std::vector<UnitExchange>& exchanges) {
    ojson root;
    root["schemaVersion"] = kSchemaVersion;
    root["targetClass"] = fqcn;
    root["exchanges"] = ojson::array();
    for (const auto& e : exchanges) {
        ojson j;
        j["unitId"] = e.unitId;
        j["cassetteKey"] = e.exchange.cassetteKey;
        j["model"] = e.exchange.request.modelId;
        j["temperature"] = renderTemperature(e.exchange.request.temperature);
        j["prompt"] = e.exchange.request.prompt;
        j["response"] = e.exchange.responseText;
        j["recordedAt"] = formatTimestamp(e.exchange.recordedAt);
        root["exchanges"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

std::vector<UnitExchange> parseExchanges(std::string_view json) {
    const auto root = parseObject(json, "exchanges file");
    try {
        std::vector<UnitExchange> out;
        for (const auto& j : root.at("exchanges")) {
            UnitExchange e;
            e.unitId = j.at("unitId").get<std::string>();
            e.exchange.request.modelId = j.at("model").get<std::string>();
            e.exchange.request.temperature = std::stod(j.at("temperature").get<std::string>());
            e.exchange.request.prompt = j.at("prompt").get<std::string>();
            e.exchange.responseText = j.at("response").get<std::string>();
            e.exchange.cassetteKey = j.at("cassetteKey").get<std::string>();
            e.exchange.recordedAt = parseTimestamp(j.at("recordedAt").get<std::string>());
            out.push_back(std::move(e));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact(std::string("malformed exchanges file: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InvalidArtifact("malformed temperature in exchanges file");
    } catch (const InvalidConfig& e) {
        throw InvalidArtifact(std::string("malformed exchanges file: ") + e.what());
    }
}

}  // namespace oracle_forge
