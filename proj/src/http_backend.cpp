#ifdef LAEA_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif

#include <httplib.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <semaphore>
#include <thread>

#include <nlohmann/json.hpp>

#include "laea/backends.hpp"
#include "laea/errors.hpp"

namespace laea {

namespace {

struct ParsedEndpoint {
    std::string host;  // scheme://host[:port]
    std::string base_path;
};

ParsedEndpoint parse_endpoint(const std::string& endpoint) {
    const auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos)
        throw InvalidInput("endpoint must include a scheme: " + endpoint);
    const auto path_start = endpoint.find('/', scheme_end + 3);
    ParsedEndpoint parsed;
    if (path_start == std::string::npos) {
        parsed.host = endpoint;
    } else {
        parsed.host = endpoint.substr(0, path_start);
        parsed.base_path = endpoint.substr(path_start);
        while (!parsed.base_path.empty() && parsed.base_path.back() == '/')
            parsed.base_path.pop_back();
    }
    return parsed;
}

double jittered_backoff_s(double base, int attempt) {
    thread_local std::mt19937_64 jitter_rng{std::random_device{}()};
    const double backoff = base * std::pow(2.0, attempt);
    const double jitter =
        0.25 * backoff *
        (static_cast<double>(jitter_rng() >> 11) * 0x1.0p-53);
    return backoff + jitter;
}

bool retryable_status(int status) {
    return status == 408 || status == 429 || status >= 500;
}

}  // namespace

/// Thin wrapper so <semaphore> stays out of the public header.
class Semaphore {
public:
    explicit Semaphore(int count) : sem_(count) {}
    void acquire() { sem_.acquire(); }
    void release() { sem_.release(); }

private:
    std::counting_semaphore<> sem_;
};

HttpBackend::~HttpBackend() = default;

HttpBackend::HttpBackend(BackendConfig config) : config_(std::move(config)) {
    if (config_.max_retries < 0)
        throw InvalidInput("max_retries must be >= 0");
    if (config_.parallelism < 1)
        throw InvalidInput("parallelism must be >= 1");
    if (!(config_.timeout_s > 0.0))
        throw InvalidInput("timeout must be positive");
    const auto parsed = parse_endpoint(config_.endpoint);
    host_ = parsed.host;
    base_path_ = parsed.base_path;
    limiter_ = std::make_unique<Semaphore>(config_.parallelism);
}

CompletionResult HttpBackend::complete(const std::string& prompt,
                                       const CallTag& tag) {
    if (prompt.empty()) throw InvalidInput("empty prompt");

    nlohmann::json body = {
        {"model", config_.model},
        {"messages",
         nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
        {"temperature", config_.temperature},
    };
    const std::string payload = body.dump();
    const std::string path = base_path_ + "/chat/completions";

    httplib::Headers headers;
    if (!config_.api_key_env.empty()) {
        if (const char* key = std::getenv(config_.api_key_env.c_str());
            key != nullptr && key[0] != '\0') {
            headers.emplace("Authorization", std::string("Bearer ") + key);
        }
    }

    std::string last_error;
    const int attempts = config_.max_retries + 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        limiter_->acquire();
        const int now = ++in_flight_;
        int seen = max_in_flight_.load();
        while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
        }

        const auto start = std::chrono::steady_clock::now();
        httplib::Client client(host_);
        client.set_connection_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::duration<double>(config_.timeout_s)));
        client.set_read_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::duration<double>(config_.timeout_s)));
        client.set_write_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::duration<double>(config_.timeout_s)));
        auto response = client.Post(path, headers, payload, "application/json");
        const double latency =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        --in_flight_;
        limiter_->release();

        CallRecord record{tag.task, tag.dim, prompt.size(),
                          approx_tokens(prompt), latency,
                          CallOutcome::TransportError};

        if (!response) {
            last_error = httplib::to_string(response.error());
            log_.append(std::move(record));
        } else if (response->status == 200) {
            auto parsed =
                nlohmann::json::parse(response->body, nullptr, false);
            if (!parsed.is_discarded() && parsed.contains("choices") &&
                parsed["choices"].is_array() && !parsed["choices"].empty() &&
                parsed["choices"][0].contains("message") &&
                parsed["choices"][0]["message"].contains("content") &&
                parsed["choices"][0]["message"]["content"].is_string()) {
                record.outcome = CallOutcome::Ok;
                const std::size_t id = log_.append(std::move(record));
                return {parsed["choices"][0]["message"]["content"]
                            .get<std::string>(),
                        id};
            }
            last_error = "unparsable completion envelope";
            log_.append(std::move(record));
        } else if (retryable_status(response->status)) {
            last_error = "HTTP " + std::to_string(response->status);
            log_.append(std::move(record));
        } else {
            // 4xx other than 408/429: retrying cannot help.
            log_.append(std::move(record));
            throw BackendUnavailable("backend rejected request: HTTP " +
                                     std::to_string(response->status));
        }

        if (attempt + 1 < attempts) {
            std::this_thread::sleep_for(std::chrono::duration<double>(
                jittered_backoff_s(config_.backoff_base_s, attempt)));
        }
    }
    throw BackendUnavailable("backend unreachable after " +
                             std::to_string(attempts) +
                             " attempts: " + last_error);
}

}  // namespace laea
