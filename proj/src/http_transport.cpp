#include <httplib.h>

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "oracle_forge/errors.hpp"
#include "oracle_forge/llm_gateway.hpp"

namespace oracle_forge {

HttpTransport::HttpTransport(std::string url, std::string apiKey, std::chrono::seconds timeout)
    : url_(std::move(url)), apiKey_(std::move(apiKey)), timeout_(timeout) {}

std::unique_ptr<HttpTransport> HttpTransport::fromEnvironment() {
    const char* key = std::getenv("ORACLE_FORGE_LLM_KEY");
    if (!key || !*key) throw AuthError("ORACLE_FORGE_LLM_KEY is not set");
    const char* url = std::getenv("ORACLE_FORGE_LLM_URL");
    if (!url || !*url) throw TransportError("ORACLE_FORGE_LLM_URL is not set", 0);
    return std::make_unique<HttpTransport>(url, key);
}

std::string HttpTransport::requestBody(const LlmRequest& req) {
    nlohmann::ordered_json body;
    body["model"] = req.modelId;
    body["temperature"] = std::stod(renderTemperature(req.temperature));
    body["messages"] = nlohmann::ordered_json::array();
    body["messages"].push_back({{"role", "user"}, {"content", req.prompt}});
    return body.dump();
}

std::string HttpTransport::parseResponseBody(std::string_view body) {
    try {
        const auto j = nlohmann::json::parse(body);
        return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw TransportError(std::string("unexpected completion payload: ") + e.what(), 1);
    }
}

std::string HttpTransport::send(const LlmRequest& req) {
    // Split "scheme://host[:port]/path" for httplib.
    const std::size_t schemeEnd = url_.find("://");
    const std::size_t pathStart = url_.find('/', schemeEnd == std::string::npos ? 0 : schemeEnd + 3);
    const std::string origin = url_.substr(0, pathStart);
    const std::string path = pathStart == std::string::npos ? "/" : url_.substr(pathStart);

    httplib::Client client(origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    const httplib::Headers headers = {{"Authorization", "Bearer " + apiKey_}};
    auto res = client.Post(path, headers, requestBody(req), "application/json");
    if (!res) throw TransportError("HTTP request to " + url_ + " failed: " + httplib::to_string(res.error()), 1);
    if (res->status == 401 || res->status == 403) {
        throw AuthError("endpoint rejected credentials (HTTP " + std::to_string(res->status) + ")");
    }
    if (res->status < 200 || res->status >= 300) {
        throw TransportError("endpoint returned HTTP " + std::to_string(res->status), 1);
    }
    return parseResponseBody(res->body);
}

}  // namespace oracle_forge
