#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "laea/backends.hpp"
#include "laea/labeling.hpp"
#include "laea/problems.hpp"
#include "laea/prompt.hpp"

namespace laea {

struct PredictBatchResult {
    std::vector<Prediction> predictions;  // one per query, input order
    int failures = 0;  // queries that fell back after the retry budget
};

/// The surrogate: given an evaluated training context and a query batch,
/// predict values (Reg) or labels (Cla). `y` carries objective values for
/// Reg and 0/1 labels for Cla. `labeling` states which rule produced the
/// Cla labels so oracle implementations can replicate it; the prompt
/// pipeline ignores it.
class Predictor {
public:
    virtual ~Predictor() = default;
    virtual PredictBatchResult predict(const Matrix& X,
                                       const std::vector<double>& y,
                                       const Matrix& U, SurrogateTask task,
                                       const LabelingScheme& labeling) = 0;
    virtual std::string describe() const = 0;
};

struct ProtocolConfig {
    int feature_precision = 3;
    int value_precision = 5;
    int max_retries = 3;  // re-asks after malformed replies, per query
    int parallelism = 1;  // concurrent in-flight queries
};

/// The prompt pipeline: fit scaling on X (and on y for Reg), scale X and U,
/// then per query render -> infer -> parse -> (Reg) inverse-scale. Queries
/// may fan out concurrently up to cfg.parallelism; results keep input
/// order. A query whose replies stay malformed past the retry budget falls
/// back (Reg: median of the raw training values; Cla: label 0) and counts
/// as a failure. BackendUnavailable aborts the whole batch.
PredictBatchResult predict_batch(TextCompleter& backend,
                                 const ProtocolConfig& cfg, const Matrix& X,
                                 const std::vector<double>& y, const Matrix& U,
                                 SurrogateTask task);

class LlmPredictor : public Predictor {
public:
    LlmPredictor(std::shared_ptr<TextCompleter> backend, ProtocolConfig cfg);
    PredictBatchResult predict(const Matrix& X, const std::vector<double>& y,
                               const Matrix& U, SurrogateTask task,
                               const LabelingScheme& labeling) override;
    std::string describe() const override;
    TextCompleter& backend() { return *backend_; }

private:
    std::shared_ptr<TextCompleter> backend_;
    ProtocolConfig cfg_;
};

struct OracleSpec {
    enum class Mode { Perfect, Noisy, Random };
    Mode mode = Mode::Perfect;
    double sigma = 0.0;  // Noisy: std as a fraction of the training range
    std::uint64_t seed = 0;
};

std::string to_string(OracleSpec::Mode mode);

/// Deterministic stand-in for the prompt pipeline. Perfect answers from the
/// true objective; Noisy perturbs those values before thresholding; Random
/// draws uniform values over the training range / fair-coin labels. The RNG
/// restarts from the spec seed on every call, so identical calls produce
/// identical outputs.
class OraclePredictor : public Predictor {
public:
    OraclePredictor(OracleSpec spec, BenchmarkProblem problem);
    PredictBatchResult predict(const Matrix& X, const std::vector<double>& y,
                               const Matrix& U, SurrogateTask task,
                               const LabelingScheme& labeling) override;
    std::string describe() const override;

private:
    OracleSpec spec_;
    BenchmarkProblem problem_;
};

}  // namespace laea
