#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

namespace laea {

struct BackendConfig {
    std::string endpoint;  // e.g. "http://localhost:11434/v1"
    std::string model;
    double temperature = 0.0;
    double timeout_s = 60.0;
    int max_retries = 3;   // transport retries per query
    int parallelism = 1;   // max in-flight requests
    std::string api_key_env = "OPENAI_API_KEY";
    double backoff_base_s = 0.5;  // schedule: base * 2^attempt, jittered
};

enum class CallOutcome { Ok, Malformed, TransportError };

std::string to_string(CallOutcome outcome);

/// One row per outbound attempt, whatever its fate.
struct CallRecord {
    std::string task;  // "reg" | "cla"
    int dim = 0;
    std::size_t chars = 0;
    std::size_t approx_tokens = 0;
    double latency_s = 0.0;
    CallOutcome outcome = CallOutcome::Ok;
};

struct CallTag {
    std::string task;
    int dim = 0;
};

/// Thread-safe append-only log. Outcomes can be patched after the fact:
/// the transport layer cannot tell a malformed reply from a good one, only
/// the protocol layer can.
class CallLog {
public:
    std::size_t append(CallRecord record);
    void set_outcome(std::size_t id, CallOutcome outcome);
    std::vector<CallRecord> snapshot() const;
    std::size_t size() const;
    /// Columns: task,dim,chars,approx_tokens,latency_s,outcome
    void write_csv(std::ostream& out) const;

private:
    mutable std::mutex mutex_;
    std::vector<CallRecord> records_;
};

struct CompletionResult {
    std::string text;
    std::size_t record_id = 0;
};

/// Prompt-in, text-out backend. Implementations record one CallRecord per
/// outbound attempt.
class TextCompleter {
public:
    virtual ~TextCompleter() = default;
    virtual CompletionResult complete(const std::string& prompt,
                                      const CallTag& tag) = 0;
    CallLog& log() { return log_; }
    const CallLog& log() const { return log_; }

protected:
    CallLog log_;
};

/// ceil(chars / 4); a stand-in for vendor tokenizers, reported, never
/// asserted against.
std::size_t approx_tokens(const std::string& text);

/// Validates that the prompt carries the required blocks (Procedure,
/// Historical Examples, New Evaluation, Note), then returns a canned reply.
/// An optional artificial latency makes it usable as a timing mock.
class EchoBackend : public TextCompleter {
public:
    explicit EchoBackend(std::string canned_reply, double latency_s = 0.0);
    CompletionResult complete(const std::string& prompt,
                              const CallTag& tag) override;

private:
    std::string canned_reply_;
    double latency_s_;
};

/// OpenAI-compatible chat-completions client:
/// POST {endpoint}/chat/completions with a single user message. Transport
/// failures and 5xx are retried with exponential backoff; exhaustion raises
/// BackendUnavailable. The API key is read from the configured environment
/// variable and never logged.
class HttpBackend : public TextCompleter {
public:
    explicit HttpBackend(BackendConfig config);
    ~HttpBackend() override;
    CompletionResult complete(const std::string& prompt,
                              const CallTag& tag) override;

    const BackendConfig& config() const { return config_; }
    /// High-water mark of concurrent in-flight requests (instrumentation).
    int max_in_flight() const { return max_in_flight_.load(); }

private:
    BackendConfig config_;
    std::string host_;       // scheme://host[:port]
    std::string base_path_;  // path prefix before /chat/completions
    std::atomic<int> in_flight_{0};
    std::atomic<int> max_in_flight_{0};
    std::unique_ptr<class Semaphore> limiter_;
};

}  // namespace laea
