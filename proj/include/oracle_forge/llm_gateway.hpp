#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace oracle_forge {

using Clock = std::function<std::chrono::system_clock::time_point()>;

/// System clock unless ORACLE_FORGE_FIXED_CLOCK holds an ISO-8601 UTC time.
Clock defaultClock();
Clock fixedClock(std::chrono::system_clock::time_point t);

std::string formatTimestamp(std::chrono::system_clock::time_point t);
/// Parses `YYYY-MM-DDTHH:MM:SSZ`; throws InvalidConfig.
std::chrono::system_clock::time_point parseTimestamp(std::string_view iso);

enum class GatewayMode { Live, Replay, Record };

std::string_view toString(GatewayMode mode);
/// Throws InvalidConfig.
GatewayMode parseGatewayMode(std::string_view text);

inline constexpr double kDefaultTemperature = 0.7;

struct LlmRequest {
    std::string modelId;
    double temperature = kDefaultTemperature;
    std::string prompt;

    friend bool operator==(const LlmRequest&, const LlmRequest&) = default;
};

/// Temperature with exactly one decimal, as used in the cassette key.
std::string renderTemperature(double temperature);

/// Throws InvalidRequest: empty prompt or model, temperature outside
/// [0, 2] or not representable with one decimal.
void validate(const LlmRequest& req);

/// SHA-256 (lowercase hex) over a length-prefixed encoding of model id,
/// one-decimal temperature and prompt bytes.
std::string cassetteKey(const LlmRequest& req);

std::string sha256Hex(std::string_view data);

struct LlmExchange {
    LlmRequest request;
    std::string responseText;
    std::string cassetteKey;
    std::chrono::system_clock::time_point recordedAt{};

    friend bool operator==(const LlmExchange& a, const LlmExchange& b) {
        return a.request == b.request && a.responseText == b.responseText && a.cassetteKey == b.cassetteKey;
    }
};

/// Performs one chat completion. Throws TransportError (retryable) or
/// AuthError (not retried).
class Transport {
public:
    virtual ~Transport() = default;
    virtual std::string send(const LlmRequest& req) = 0;
};

/// Chat-completion POST with a single user message; endpoint and key come
/// from ORACLE_FORGE_LLM_URL and ORACLE_FORGE_LLM_KEY.
class HttpTransport final : public Transport {
public:
    HttpTransport(std::string url, std::string apiKey, std::chrono::seconds timeout = std::chrono::seconds(120));

    /// Throws AuthError when the key is missing, TransportError when the URL is.
    static std::unique_ptr<HttpTransport> fromEnvironment();

    std::string send(const LlmRequest& req) override;

    /// Request body sent for `req`.
    static std::string requestBody(const LlmRequest& req);
    /// Extracts `choices[0].message.content`; throws TransportError.
    static std::string parseResponseBody(std::string_view body);

private:
    std::string url_;
    std::string apiKey_;
    std::chrono::seconds timeout_;
};

/// Directory of `<cassetteKey>.json` files. Loaded once; writes are
/// serialized and never replace an existing entry.
class CassetteStore {
public:
    explicit CassetteStore(std::filesystem::path dir);

    [[nodiscard]] std::optional<LlmExchange> find(const std::string& key) const;

    /// Persists `ex` unless its key is already present. Returns false when
    /// the entry existed (the stored response is kept).
    bool put(const LlmExchange& ex);

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }

    static std::string serialize(const LlmExchange& ex);
    /// Throws InvalidArtifact, including when the stored key does not match
    /// the recomputed one.
    static LlmExchange deserialize(std::string_view json, const std::string& expectedKey);

private:
    std::filesystem::path dir_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, LlmExchange> entries_;
};

struct RetryPolicy {
    int maxAttempts = 3;
    std::chrono::milliseconds initialBackoff{1000};
};

class LlmGateway {
public:
    using Sleeper = std::function<void(std::chrono::milliseconds)>;

    /// `transport` may be null when only replay mode is used.
    LlmGateway(std::shared_ptr<CassetteStore> store, std::shared_ptr<Transport> transport, Clock clock = defaultClock(),
               RetryPolicy retry = {}, Sleeper sleeper = {});

    /// live: call the endpoint. record: call the endpoint and persist, or
    /// reuse an existing recording for the same key. replay: stored response
    /// only, never touching the transport. Throws CassetteMiss,
    /// TransportError, AuthError, InvalidRequest.
    LlmExchange complete(const LlmRequest& req, GatewayMode mode);

private:
    std::string sendWithRetry(const LlmRequest& req);

    std::shared_ptr<CassetteStore> store_;
    std::shared_ptr<Transport> transport_;
    Clock clock_;
    RetryPolicy retry_;
    Sleeper sleeper_;
};

}  // namespace oracle_forge
