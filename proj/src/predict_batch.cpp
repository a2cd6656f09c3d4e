#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "laea/errors.hpp"
#include "laea/predictor.hpp"
#include "laea/scaling.hpp"

namespace laea {

namespace {

void validate_batch_inputs(const Matrix& X, const std::vector<double>& y,
                           const Matrix& U) {
    if (X.empty() || X.size() != y.size())
        throw InvalidInput("predict_batch: |X| must equal |Y| and be > 0");
    if (U.empty()) throw InvalidInput("predict_batch: empty query batch");
}

Prediction predict_one(TextCompleter& backend, const ProtocolConfig& cfg,
                       const ScaledDataset& data, const ScalingTransform& t,
                       const DecisionVector& scaled_u, SurrogateTask task,
                       double fallback_value, const CallTag& tag,
                       bool& fell_back) {
    const PromptBundle bundle = render_prompt(
        task, data, scaled_u, cfg.feature_precision, cfg.value_precision);
    const int attempts = std::max(1, cfg.max_retries + 1);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const CompletionResult reply = backend.complete(bundle.text, tag);
        try {
            const Prediction parsed = parse_llm_response(reply.text, task);
            fell_back = false;
            if (task == SurrogateTask::Reg)
                return Prediction::of_value(
                    inverse_scale_value(t, *parsed.value));
            return parsed;
        } catch (const MalformedResponse&) {
            backend.log().set_outcome(reply.record_id, CallOutcome::Malformed);
        }
    }
    fell_back = true;
    if (task == SurrogateTask::Reg)
        return Prediction::of_value(fallback_value);
    return Prediction::of_label(0);
}

}  // namespace

PredictBatchResult predict_batch(TextCompleter& backend,
                                 const ProtocolConfig& cfg, const Matrix& X,
                                 const std::vector<double>& y, const Matrix& U,
                                 SurrogateTask task) {
    validate_batch_inputs(X, y, U);

    const ScalingTransform t =
        fit_scaling(X, task == SurrogateTask::Reg ? &y : nullptr,
                    cfg.feature_precision, cfg.value_precision);

    ScaledDataset data;
    data.features.reserve(X.size());
    for (const auto& row : X) data.features.push_back(apply_scaling(t, row));
    if (task == SurrogateTask::Reg) {
        data.values.reserve(y.size());
        for (double v : y) data.values.push_back(scale_value(t, v));
    } else {
        data.labels.reserve(y.size());
        for (double v : y) {
            const int label = static_cast<int>(v);
            if (label != 0 && label != 1)
                throw InvalidInput("predict_batch: Cla labels must be 0/1");
            data.labels.push_back(label);
        }
    }

    Matrix scaled_queries;
    scaled_queries.reserve(U.size());
    for (const auto& u : U) scaled_queries.push_back(apply_scaling(t, u));

    // Fallback for queries whose replies stay malformed.
    const double fallback_value = median(y);
    const CallTag tag{to_string(task), static_cast<int>(U.front().size())};

    PredictBatchResult result;
    result.predictions.resize(U.size());
    std::vector<char> fell_back(U.size(), 0);

    const int workers =
        std::min<int>(std::max(1, cfg.parallelism), static_cast<int>(U.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < U.size(); ++i) {
            bool fb = false;
            result.predictions[i] =
                predict_one(backend, cfg, data, t, scaled_queries[i], task,
                            fallback_value, tag, fb);
            fell_back[i] = fb ? 1 : 0;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> aborted{false};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&]() {
            while (!aborted.load()) {
                const std::size_t i = next.fetch_add(1);
                if (i >= U.size()) return;
                try {
                    bool fb = false;
                    result.predictions[i] =
                        predict_one(backend, cfg, data, t, scaled_queries[i],
                                    task, fallback_value, tag, fb);
                    fell_back[i] = fb ? 1 : 0;
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    aborted.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    for (char fb : fell_back) result.failures += fb;
    return result;
}

LlmPredictor::LlmPredictor(std::shared_ptr<TextCompleter> backend,
                           ProtocolConfig cfg)
    : backend_(std::move(backend)), cfg_(cfg) {
    if (!backend_) throw InvalidInput("LlmPredictor: null backend");
}

PredictBatchResult LlmPredictor::predict(const Matrix& X,
                                         const std::vector<double>& y,
                                         const Matrix& U, SurrogateTask task,
                                         const LabelingScheme&) {
    return predict_batch(*backend_, cfg_, X, y, U, task);
}

std::string LlmPredictor::describe() const { return "llm"; }

}  // namespace laea
