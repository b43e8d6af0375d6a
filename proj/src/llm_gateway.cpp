#include "oracle_forge/llm_gateway.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <thread>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/log.hpp"
#include "oracle_forge/text.hpp"

namespace oracle_forge {
namespace fs = std::filesystem;

std::string formatTimestamp(std::chrono::system_clock::time_point t) {
    const std::time_t secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    ::gmtime_r(&secs, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::chrono::system_clock::time_point parseTimestamp(std::string_view iso) {
    std::tm tm{};
    int consumed = 0;
    const std::string s(iso);
    if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2dZ%n", &tm.tm_year, &tm.tm_mon, &tm.tm_mday, &tm.tm_hour,
                    &tm.tm_min, &tm.tm_sec, &consumed) != 6 ||
        static_cast<std::size_t>(consumed) != s.size()) {
        throw InvalidConfig("timestamp must look like 2024-01-31T12:00:00Z, got \"" + s + "\"");
    }
    tm.tm_year -= 1900;
    tm.tm_mon -= 1;
    return std::chrono::system_clock::from_time_t(::timegm(&tm));
}

Clock fixedClock(std::chrono::system_clock::time_point t) {
    return [t] { return t; };
}

Clock defaultClock() {
    if (const char* fixed = std::getenv("ORACLE_FORGE_FIXED_CLOCK"); fixed && *fixed) {
        return fixedClock(parseTimestamp(fixed));
    }
    return [] { return std::chrono::system_clock::now(); };
}

std::string_view toString(GatewayMode mode) {
    switch (mode) {
    case GatewayMode::Live:
        return "live";
    case GatewayMode::Replay:
        return "replay";
    case GatewayMode::Record:
        return "record";
    }
    return "";
}

GatewayMode parseGatewayMode(std::string_view text) {
    if (text == "live") return GatewayMode::Live;
    if (text == "replay") return GatewayMode::Replay;
    if (text == "record") return GatewayMode::Record;
    throw InvalidConfig("mode must be live, replay or record, got \"" + std::string(text) + "\"");
}

std::string renderTemperature(double temperature) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.1f", temperature);
    return buf;
}

void validate(const LlmRequest& req) {
    if (req.modelId.empty()) throw InvalidRequest("model id must not be empty");
    if (req.prompt.empty()) throw InvalidRequest("prompt must not be empty");
    if (!(req.temperature >= 0.0 && req.temperature <= 2.0)) {
        throw InvalidRequest("temperature must lie in [0, 2]");
    }
    const double tenths = req.temperature * 10.0;
    if (std::fabs(tenths - std::round(tenths)) > 1e-9) {
        throw InvalidRequest("temperature must have at most one decimal, got " + std::to_string(req.temperature));
    }
}

std::string sha256Hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("CryptoError", "SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

std::string cassetteKey(const LlmRequest& req) {
    std::string material;
    material += "model:" + std::to_string(req.modelId.size()) + ":" + req.modelId + "\n";
    material += "temperature:" + renderTemperature(req.temperature) + "\n";
    material += "prompt:" + std::to_string(req.prompt.size()) + ":" + req.prompt;
    return sha256Hex(material);
}

// ---------------------------------------------------------------------------

CassetteStore::CassetteStore(fs::path dir) : dir_(std::move(dir)) {
    if (!fs::exists(dir_)) return;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        const std::string key = entry.path().stem().string();
        if (key.size() != 64 || key.find_first_not_of("0123456789abcdef") != std::string::npos) continue;
        entries_.emplace(key, deserialize(text::readFile(entry.path().string()), key));
    }
}

std::optional<LlmExchange> CassetteStore::find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    return std::nullopt;
}

bool CassetteStore::put(const LlmExchange& ex) {
    std::unique_lock lock(mutex_);
    if (entries_.count(ex.cassetteKey)) return false;
    text::writeFileAtomic((dir_ / (ex.cassetteKey + ".json")).string(), serialize(ex));
    entries_.emplace(ex.cassetteKey, ex);
    return true;
}

std::size_t CassetteStore::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

std::string CassetteStore::serialize(const LlmExchange& ex) {
    nlohmann::ordered_json j;
    j["model"] = ex.request.modelId;
    j["temperature"] = std::stod(renderTemperature(ex.request.temperature));
    j["prompt"] = ex.request.prompt;
    j["response"] = ex.responseText;
    j["recorded_at"] = formatTimestamp(ex.recordedAt);
    return j.dump(2) + "\n";
}

LlmExchange CassetteStore::deserialize(std::string_view json, const std::string& expectedKey) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArtifact("cassette " + expectedKey + " is not valid JSON: " + e.what());
    }
    LlmExchange ex;
    try {
        ex.request.modelId = j.at("model").get<std::string>();
        ex.request.temperature = j.at("temperature").get<double>();
        ex.request.prompt = j.at("prompt").get<std::string>();
        ex.responseText = j.at("response").get<std::string>();
        ex.recordedAt = parseTimestamp(j.at("recorded_at").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArtifact("cassette " + expectedKey + " is missing fields: " + e.what());
    } catch (const InvalidConfig& e) {
        throw InvalidArtifact("cassette " + expectedKey + ": " + e.what());
    }
    ex.cassetteKey = cassetteKey(ex.request);
    if (ex.cassetteKey != expectedKey) {
        throw InvalidArtifact("cassette " + expectedKey + " content hashes to " + ex.cassetteKey);
    }
    return ex;
}

// ---------------------------------------------------------------------------

LlmGateway::LlmGateway(std::shared_ptr<CassetteStore> store, std::shared_ptr<Transport> transport, Clock clock,
                       RetryPolicy retry, Sleeper sleeper)
    : store_(std::move(store)),
      transport_(std::move(transport)),
      clock_(std::move(clock)),
      retry_(retry),
      sleeper_(sleeper ? std::move(sleeper) : Sleeper([](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); })) {}

LlmExchange LlmGateway::complete(const LlmRequest& req, GatewayMode mode) {
    validate(req);
    const std::string key = cassetteKey(req);

    if (mode == GatewayMode::Replay) {
        if (!store_) throw CassetteMiss("no cassette store configured");
        auto hit = store_->find(key);
        if (!hit) throw CassetteMiss("no recording for key " + key + " in " + store_->dir().string());
        return *hit;
    }
    if (mode == GatewayMode::Record && store_) {
        if (auto hit = store_->find(key)) return *hit;
    }

    LlmExchange ex;
    ex.request = req;
    ex.cassetteKey = key;
    ex.responseText = sendWithRetry(req);
    ex.recordedAt = clock_();
    if (mode == GatewayMode::Record) {
        if (!store_) throw InvalidConfig("record mode needs a cassette store");
        store_->put(ex);
    }
    return ex;
}

std::string LlmGateway::sendWithRetry(const LlmRequest& req) {
    if (!transport_) throw TransportError("no transport configured", 0);
    auto backoff = retry_.initialBackoff;
    for (int attempt = 1;; ++attempt) {
        try {
            return transport_->send(req);
        } catch (const TransportError& e) {
            if (attempt >= retry_.maxAttempts) throw TransportError(e.what(), attempt);
            log::warn("llm request failed (attempt " + std::to_string(attempt) + "): " + e.what());
            sleeper_(backoff);
            backoff *= 2;
        }
    }
}

}  // namespace oracle_forge
