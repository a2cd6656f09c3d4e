#include "laea/backends.hpp"

#include <chrono>
#include <thread>

#include "laea/csv.hpp"
#include "laea/errors.hpp"

namespace laea {

std::string to_string(CallOutcome outcome) {
    switch (outcome) {
        case CallOutcome::Ok: return "ok";
        case CallOutcome::Malformed: return "malformed";
        case CallOutcome::TransportError: return "transport-error";
    }
    return "unknown";
}

std::size_t CallLog::append(CallRecord record) {
    std::lock_guard lock(mutex_);
    records_.push_back(std::move(record));
    return records_.size() - 1;
}

void CallLog::set_outcome(std::size_t id, CallOutcome outcome) {
    std::lock_guard lock(mutex_);
    if (id < records_.size()) records_[id].outcome = outcome;
}

std::vector<CallRecord> CallLog::snapshot() const {
    std::lock_guard lock(mutex_);
    return records_;
}

std::size_t CallLog::size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

void CallLog::write_csv(std::ostream& out) const {
    const auto records = snapshot();
    write_csv_row(out, {"task", "dim", "chars", "approx_tokens", "latency_s",
                        "outcome"});
    for (const auto& r : records) {
        write_csv_row(out, {r.task, std::to_string(r.dim),
                            std::to_string(r.chars),
                            std::to_string(r.approx_tokens),
                            format_double(r.latency_s), to_string(r.outcome)});
    }
}

std::size_t approx_tokens(const std::string& text) {
    return (text.size() + 3) / 4;
}

EchoBackend::EchoBackend(std::string canned_reply, double latency_s)
    : canned_reply_(std::move(canned_reply)), latency_s_(latency_s) {}

CompletionResult EchoBackend::complete(const std::string& prompt,
                                       const CallTag& tag) {
    const auto start = std::chrono::steady_clock::now();
    for (const char* block :
         {"Procedure", "Historical Examples", "New Evaluation", "Note"}) {
        if (prompt.find(block) == std::string::npos)
            throw PromptStructureError(std::string("prompt is missing block: ") +
                                       block);
    }
    if (latency_s_ > 0.0)
        std::this_thread::sleep_for(std::chrono::duration<double>(latency_s_));
    const double latency =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const std::size_t id =
        log_.append({tag.task, tag.dim, prompt.size(), approx_tokens(prompt),
                     latency, CallOutcome::Ok});
    return {canned_reply_, id};
}

}  // namespace laea
