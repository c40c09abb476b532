#ifndef XTALTEXT_CLIENT_HPP
#define XTALTEXT_CLIENT_HPP

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "xtaltext/errors.hpp"
#include "xtaltext/rng.hpp"

namespace xtal {

struct CompletionRequest {
    std::string prompt;
    double temperature = 0.9;
    double top_p = 0.9;
    int max_tokens = 1024;
    std::vector<std::string> stop;

    void validate() const {
        for (double v : {temperature, top_p}) {
            if (!(v > 0.0 && v <= 1.0)) {
                throw ConfigError("temperature and top_p must lie in (0, 1]");
            }
        }
        if (max_tokens < 1) throw ConfigError("max_tokens must be positive");
    }
};

/// Transport for model inference; implementations must tolerate concurrent
/// complete() calls.
class ChatClient {
public:
    virtual ~ChatClient() = default;
    virtual std::string complete(const CompletionRequest& req) = 0;
};

struct EndpointConfig {
    std::string base_url;             // e.g. "http://localhost:8000"
    std::string model;
    std::string path = "/v1/chat/completions";
    std::string api_key_env = "XTALTEXT_API_KEY";  // credential comes from the
                                                   // environment, never config
    int max_retries = 3;
    double backoff_base_seconds = 1.0;
};

/// OpenAI-compatible chat-completions client with exponential backoff on
/// transient failures (transport errors and 5xx responses).
class HttpChatClient : public ChatClient {
public:
    explicit HttpChatClient(EndpointConfig cfg) : cfg_(std::move(cfg)) {
        if (cfg_.base_url.empty() || cfg_.model.empty()) {
            throw ConfigError("endpoint base_url and model are required");
        }
    }

    std::string complete(const CompletionRequest& req) override {
        req.validate();
        nlohmann::json body = {
            {"model", cfg_.model},
            {"messages", {{{"role", "user"}, {"content", req.prompt}}}},
            {"temperature", req.temperature},
            {"top_p", req.top_p},
            {"max_tokens", req.max_tokens}};
        if (!req.stop.empty()) body["stop"] = req.stop;
        const std::string payload = body.dump();

        httplib::Headers headers;
        if (const char* key = std::getenv(cfg_.api_key_env.c_str())) {
            headers.emplace("Authorization", std::string("Bearer ") + key);
        }
        std::string last_failure = "no attempt made";
        for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
            if (attempt > 0) {
                const double delay =
                    cfg_.backoff_base_seconds * static_cast<double>(1 << (attempt - 1));
                std::this_thread::sleep_for(std::chrono::duration<double>(delay));
            }
            httplib::Client http(cfg_.base_url);
            auto res = http.Post(cfg_.path, headers, payload, "application/json");
            if (!res) {
                last_failure = "transport failure: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status >= 500) {
                last_failure = "server error " + std::to_string(res->status);
                continue;
            }
            if (res->status < 200 || res->status >= 300) {
                throw EndpointError(res->status, res->body);
            }
            try {
                const auto j = nlohmann::json::parse(res->body);
                return j.at("choices").at(0).at("message").at("content")
                    .get<std::string>();
            } catch (const nlohmann::json::exception& e) {
                throw EndpointError(res->status,
                                    std::string("malformed completion payload: ") +
                                        e.what());
            }
        }
        throw TransportError("retries exhausted: " + last_failure);
    }

private:
    EndpointConfig cfg_;
};

/// Test double: exact prompt -> canned response.
class MockFixtureClient : public ChatClient {
public:
    explicit MockFixtureClient(std::map<std::string, std::string> fixtures,
                               std::optional<std::string> fallback = std::nullopt)
        : fixtures_(std::move(fixtures)), fallback_(std::move(fallback)) {}

    std::string complete(const CompletionRequest& req) override {
        auto it = fixtures_.find(req.prompt);
        if (it != fixtures_.end()) return it->second;
        if (fallback_) return *fallback_;
        throw TransportError("no fixture for prompt");
    }

private:
    std::map<std::string, std::string> fixtures_;
    std::optional<std::string> fallback_;
};

/// Test double: returns the first in-context example's crystal string from a
/// few-shot prompt verbatim.
class EchoFirstExampleClient : public ChatClient {
public:
    std::string complete(const CompletionRequest& req) override {
        std::vector<std::string> lines;
        std::string cur;
        for (char ch : req.prompt) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        lines.push_back(cur);
        auto is_header = [](const std::string& line) {
            for (const char* w : {"First", "Second", "Third", "Fourth", "Fifth"}) {
                if (line == std::string(w) + " Example:") return true;
            }
            return false;
        };
        std::size_t i = 0;
        while (i < lines.size() && !is_header(lines[i])) ++i;
        if (i >= lines.size()) {
            throw TransportError("prompt has no in-context example to echo");
        }
        ++i;  // past "First Example:"
        if (i < lines.size() && lines[i].rfind("The ", 0) == 0) ++i;  // condition line
        std::string out;
        for (; i < lines.size(); ++i) {
            if (is_header(lines[i]) || lines[i].find("Based on the") != std::string::npos) {
                break;
            }
            if (!out.empty()) out += '\n';
            out += lines[i];
        }
        if (out.empty()) throw TransportError("first example carries no crystal text");
        return out;
    }
};

/// Test double: wraps another client and replaces its answer with garbage
/// with probability p. Deterministic per (seed, prompt, per-prompt attempt
/// count) regardless of thread scheduling.
class CorruptClient : public ChatClient {
public:
    CorruptClient(ChatClient& inner, double p, std::uint64_t seed)
        : inner_(inner), p_(p), seed_(seed) {
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
    }

    std::string complete(const CompletionRequest& req) override {
        std::uint64_t call_index;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            call_index = prompt_calls_[req.prompt]++;
        }
        const std::uint64_t h = std::hash<std::string>{}(req.prompt);
        SplitMix64 rng(derive_seed(seed_ ^ h, call_index));
        if (rng.uniform() < p_) {
            return "%% corrupted output " + std::to_string(call_index) + " %%";
        }
        return inner_.complete(req);
    }

private:
    ChatClient& inner_;
    double p_;
    std::uint64_t seed_;
    std::mutex mutex_;
    std::map<std::string, std::uint64_t> prompt_calls_;
};

}  // namespace xtal

#endif
