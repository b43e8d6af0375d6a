#include <gtest/gtest.h>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdlib>
#include <thread>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/llm_gateway.hpp"
#include "support.hpp"

using namespace oracle_forge;
using namespace std::chrono_literals;

namespace {

/// Scripted transport: pops canned results, counts calls.
class ScriptedTransport : public Transport {
public:
    std::vector<std::function<std::string()>> script;
    std::atomic<int> calls{0};

    std::string send(const LlmRequest&) override {
        const int i = calls++;
        if (i >= static_cast<int>(script.size())) throw std::logic_error("transport used more than scripted");
        return script[static_cast<std::size_t>(i)]();
    }
};

class ForbiddenTransport : public Transport {
public:
    std::string send(const LlmRequest&) override {
        ADD_FAILURE() << "replay touched the transport";
        throw TransportError("forbidden", 1);
    }
};

const auto kT0 = parseTimestamp("2024-06-01T00:00:00Z");

LlmRequest req(std::string prompt) { return LlmRequest{"gpt-4", 0.7, std::move(prompt)}; }

}  // namespace

TEST(LlmGateway, KeyIsLengthPrefixedSha256) {
    // Hand-built preimage for the documented encoding.
    const LlmRequest r{"gpt-4", 0.7, "hi"};
    EXPECT_EQ(cassetteKey(r), sha256Hex("model:5:gpt-4\ntemperature:0.7\nprompt:2:hi"));
    EXPECT_EQ(sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(cassetteKey(r).size(), 64u);
    // Different fields that concatenate to the same bytes still differ.
    EXPECT_NE(cassetteKey({"ab", 0.7, "c"}), cassetteKey({"a", 0.7, "bc"}));
    EXPECT_NE(cassetteKey({"m", 0.7, "p"}), cassetteKey({"m", 0.8, "p"}));
    EXPECT_EQ(renderTemperature(0.7), "0.7");
    EXPECT_EQ(renderTemperature(2), "2.0");
}

TEST(LlmGateway, RequestValidation) {
    EXPECT_THROW(validate(LlmRequest{"gpt-4", 0.7, ""}), InvalidRequest);
    EXPECT_THROW(validate(LlmRequest{"", 0.7, "p"}), InvalidRequest);
    EXPECT_THROW(validate(LlmRequest{"m", 2.1, "p"}), InvalidRequest);
    EXPECT_THROW(validate(LlmRequest{"m", -0.1, "p"}), InvalidRequest);
    EXPECT_THROW(validate(LlmRequest{"m", 0.75, "p"}), InvalidRequest);
    EXPECT_NO_THROW(validate(LlmRequest{"m", 0.0, "p"}));
    EXPECT_EQ(LlmRequest{}.temperature, 0.7);
}

TEST(LlmGateway, RecordThenReplayIsByteIdentical) {
    testsupport::TempDir dir;
    auto transport = std::make_shared<ScriptedTransport>();
    transport->script = {[] { return std::string("```java\nboolean checkX() { return true; }\n```\n"); }};
    auto store = std::make_shared<CassetteStore>(dir.path());
    LlmGateway recorder(store, transport, fixedClock(kT0));
    const auto recorded = recorder.complete(req("prompt one"), GatewayMode::Record);
    EXPECT_EQ(transport->calls, 1);
    EXPECT_TRUE(std::filesystem::exists(dir / (recorded.cassetteKey + ".json")));

    // Re-recording the same request reuses the entry and leaves the file alone.
    const auto before = testsupport::slurp(dir / (recorded.cassetteKey + ".json"));
    EXPECT_EQ(recorder.complete(req("prompt one"), GatewayMode::Record), recorded);
    EXPECT_EQ(transport->calls, 1);
    EXPECT_EQ(testsupport::slurp(dir / (recorded.cassetteKey + ".json")), before);

    LlmGateway replayer(std::make_shared<CassetteStore>(dir.path()), std::make_shared<ForbiddenTransport>());
    const auto a = replayer.complete(req("prompt one"), GatewayMode::Replay);
    const auto b = replayer.complete(req("prompt one"), GatewayMode::Replay);
    EXPECT_EQ(a.responseText, recorded.responseText);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.recordedAt, kT0);
    EXPECT_THROW(replayer.complete(req("unseen"), GatewayMode::Replay), CassetteMiss);
}

TEST(LlmGateway, ShippedObjectEqualsCassetteReplays) {
    const auto store = std::make_shared<CassetteStore>(testsupport::dataDir() / "cassettes");
    EXPECT_GE(store->size(), 34u);
    bool found = false;
    for (const auto& e : std::filesystem::directory_iterator(testsupport::dataDir() / "cassettes")) {
        const auto ex = CassetteStore::deserialize(testsupport::slurp(e.path()), e.path().stem().string());
        if (ex.request.prompt.find("in java.lang.Object,") == std::string::npos) continue;
        if (ex.responseText.find("boolean checkSymmetric(Object x, Object y)") == std::string::npos) continue;
        LlmGateway gw(store, std::make_shared<ForbiddenTransport>());
        EXPECT_EQ(gw.complete(ex.request, GatewayMode::Replay).responseText, ex.responseText);
        found = true;
    }
    EXPECT_TRUE(found);
}

TEST(LlmGateway, RetriesTransportErrorsThenGivesUp) {
    auto transport = std::make_shared<ScriptedTransport>();
    auto fail = []() -> std::string { throw TransportError("boom", 1); };
    transport->script = {fail, fail, [] { return std::string("ok"); }};
    std::vector<std::chrono::milliseconds> sleeps;
    LlmGateway gw(nullptr, transport, fixedClock(kT0), RetryPolicy{}, [&](auto d) { sleeps.push_back(d); });
    EXPECT_EQ(gw.complete(req("p"), GatewayMode::Live).responseText, "ok");
    EXPECT_EQ(sleeps, (std::vector<std::chrono::milliseconds>{1000ms, 2000ms}));

    transport->calls = 0;
    transport->script = {fail, fail, fail};
    try {
        gw.complete(req("p"), GatewayMode::Live);
        FAIL() << "expected TransportError";
    } catch (const TransportError& e) {
        EXPECT_EQ(e.attempts(), 3);
    }
    EXPECT_EQ(transport->calls, 3);
}

TEST(LlmGateway, AuthErrorsAreNotRetried) {
    auto transport = std::make_shared<ScriptedTransport>();
    transport->script = {[]() -> std::string { throw AuthError("401"); }};
    LlmGateway gw(nullptr, transport, fixedClock(kT0), RetryPolicy{}, [](auto) {});
    EXPECT_THROW(gw.complete(req("p"), GatewayMode::Live), AuthError);
    EXPECT_EQ(transport->calls, 1);
}

TEST(LlmGateway, RecordWithFailingRetriesWritesOneEntry) {
    testsupport::TempDir dir;
    auto transport = std::make_shared<ScriptedTransport>();
    transport->script = {[]() -> std::string { throw TransportError("x", 1); }, [] { return std::string("r"); }};
    auto store = std::make_shared<CassetteStore>(dir.path());
    LlmGateway gw(store, transport, fixedClock(kT0), RetryPolicy{}, [](auto) {});
    gw.complete(req("p"), GatewayMode::Record);
    EXPECT_EQ(store->size(), 1u);
    EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir.path()), {}), 1);
}

TEST(LlmGateway, ConcurrentRecordKeepsOneEntryPerKey) {
    testsupport::TempDir dir;
    auto store = std::make_shared<CassetteStore>(dir.path());
    class Echo : public Transport {
    public:
        std::string send(const LlmRequest& r) override { return "echo " + r.prompt; }
    };
    LlmGateway gw(store, std::make_shared<Echo>(), fixedClock(kT0));
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&] {
            for (int i = 0; i < 20; ++i) gw.complete(req("p" + std::to_string(i % 5)), GatewayMode::Record);
        });
    }
    for (auto& t : threads) t.join();
    EXPECT_EQ(store->size(), 5u);
    EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir.path()), {}), 5);
}

TEST(LlmGateway, CassetteFileFormatAndTamperDetection) {
    LlmExchange ex;
    ex.request = req("a prompt");
    ex.responseText = "resp";
    ex.cassetteKey = cassetteKey(ex.request);
    ex.recordedAt = kT0;
    const auto json = CassetteStore::serialize(ex);
    const auto j = nlohmann::json::parse(json);
    for (const char* k : {"model", "temperature", "prompt", "response", "recorded_at"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j.size(), 5u);
    EXPECT_EQ(j["recorded_at"], "2024-06-01T00:00:00Z");
    EXPECT_EQ(CassetteStore::deserialize(json, ex.cassetteKey), ex);
    EXPECT_THROW(CassetteStore::deserialize(json, std::string(64, '0')), InvalidArtifact);
    EXPECT_THROW(CassetteStore::deserialize("{}", ex.cassetteKey), InvalidArtifact);
    EXPECT_THROW(CassetteStore::deserialize("nope", ex.cassetteKey), InvalidArtifact);
}

TEST(LlmGateway, Clock) {
    EXPECT_EQ(formatTimestamp(kT0), "2024-06-01T00:00:00Z");
    EXPECT_THROW(parseTimestamp("yesterday"), InvalidConfig);
    setenv("ORACLE_FORGE_FIXED_CLOCK", "2030-01-02T03:04:05Z", 1);
    EXPECT_EQ(formatTimestamp(defaultClock()()), "2030-01-02T03:04:05Z");
    unsetenv("ORACLE_FORGE_FIXED_CLOCK");
    EXPECT_EQ(parseGatewayMode("record"), GatewayMode::Record);
    EXPECT_THROW(parseGatewayMode("rewind"), InvalidConfig);
}

TEST(HttpTransport, WireFormat) {
    const auto body = nlohmann::json::parse(HttpTransport::requestBody(req("hello")));
    EXPECT_EQ(body["model"], "gpt-4");
    EXPECT_DOUBLE_EQ(body["temperature"].get<double>(), 0.7);
    ASSERT_EQ(body["messages"].size(), 1u);
    EXPECT_EQ(body["messages"][0]["role"], "user");
    EXPECT_EQ(body["messages"][0]["content"], "hello");
    EXPECT_EQ(HttpTransport::parseResponseBody(R"({"choices":[{"message":{"role":"assistant","content":"x"}}]})"), "x");
    EXPECT_THROW(HttpTransport::parseResponseBody(R"({"choices":[]})"), TransportError);
}

TEST(HttpTransport, MissingCredentials) {
    unsetenv("ORACLE_FORGE_LLM_KEY");
    EXPECT_THROW(HttpTransport::fromEnvironment(), AuthError);
}

// Loopback only: a local server standing in for the endpoint.
TEST(HttpTransport, LoopbackRoundTrip) {
    httplib::Server server;
    std::string seenAuth, seenBody;
    server.Post("/v1/chat", [&](const httplib::Request& rq, httplib::Response& rs) {
        seenAuth = rq.get_header_value("Authorization");
        seenBody = rq.body;
        if (seenAuth != "Bearer good") {
            rs.status = 401;
            return;
        }
        rs.set_content(R"({"choices":[{"message":{"content":"pong"}}]})", "application/json");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    if (port <= 0) GTEST_SKIP() << "loopback unavailable";
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    const std::string url = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat";
    EXPECT_EQ(HttpTransport(url, "good", 5s).send(req("ping")), "pong");
    EXPECT_EQ(nlohmann::json::parse(seenBody)["messages"][0]["content"], "ping");
    EXPECT_THROW(HttpTransport(url, "bad", 5s).send(req("ping")), AuthError);
    server.stop();
    th.join();
}
