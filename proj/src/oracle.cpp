#include <algorithm>
#include <cmath>

#include "laea/errors.hpp"
#include "laea/predictor.hpp"
#include "laea/rng.hpp"

namespace laea {

std::string to_string(OracleSpec::Mode mode) {
    switch (mode) {
        case OracleSpec::Mode::Perfect: return "perfect";
        case OracleSpec::Mode::Noisy: return "noisy";
        case OracleSpec::Mode::Random: return "random";
    }
    return "unknown";
}

OraclePredictor::OraclePredictor(OracleSpec spec, BenchmarkProblem problem)
    : spec_(spec), problem_(std::move(problem)) {
    if (spec_.sigma < 0.0) throw InvalidInput("oracle sigma must be >= 0");
}

namespace {

/// Label a query value against the training cutoff: 1 iff it would land
/// among the k best of the training values (appended after equal entries,
/// matching the stable tie rule of assign_labels_topk).
int label_against_cutoff(double query_value, const std::vector<double>& train,
                         double fraction) {
    const std::size_t k = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::floor(fraction * static_cast<double>(train.size()))));
    std::size_t not_worse = 0;
    for (double v : train)
        if (v <= query_value) ++not_worse;
    return not_worse <= k - 1 ? 1 : 0;
}

}  // namespace

PredictBatchResult OraclePredictor::predict(const Matrix& X,
                                            const std::vector<double>& y,
                                            const Matrix& U, SurrogateTask task,
                                            const LabelingScheme& labeling) {
    if (X.empty() || X.size() != y.size())
        throw InvalidInput("oracle predict: |X| must equal |Y| and be > 0");
    if (U.empty()) throw InvalidInput("oracle predict: empty query batch");

    // Fresh stream per call: identical inputs give identical outputs.
    Rng rng(spec_.seed);

    // Training values: for Reg they arrive as y; for Cla y holds labels, so
    // recompute them from the objective (X is raw, f is deterministic).
    std::vector<double> train_values;
    if (task == SurrogateTask::Reg) {
        train_values = y;
    } else {
        train_values.reserve(X.size());
        for (const auto& x : X) train_values.push_back(evaluate(problem_, x));
    }
    const auto [lo_it, hi_it] =
        std::minmax_element(train_values.begin(), train_values.end());
    const double train_lo = *lo_it;
    const double train_range = *hi_it - *lo_it;

    PredictBatchResult result;
    result.predictions.reserve(U.size());

    if (spec_.mode == OracleSpec::Mode::Random) {
        for (std::size_t i = 0; i < U.size(); ++i) {
            if (task == SurrogateTask::Reg)
                result.predictions.push_back(Prediction::of_value(
                    train_lo + rng.next_double() * train_range));
            else
                result.predictions.push_back(
                    Prediction::of_label(rng.next_u64() & 1 ? 1 : 0));
        }
        return result;
    }

    // Perfect / Noisy share the true-value route; Noisy perturbs before
    // any thresholding.
    std::vector<double> query_values;
    query_values.reserve(U.size());
    for (const auto& u : U) {
        double v = evaluate(problem_, u);
        if (spec_.mode == OracleSpec::Mode::Noisy)
            v += rng.normal(0.0, spec_.sigma * train_range);
        query_values.push_back(v);
    }

    if (task == SurrogateTask::Reg) {
        for (double v : query_values)
            result.predictions.push_back(Prediction::of_value(v));
        return result;
    }

    switch (labeling.kind) {
        case LabelingScheme::Kind::BelowMedian: {
            const double threshold = median(train_values);
            for (double v : query_values)
                result.predictions.push_back(
                    Prediction::of_label(v < threshold ? 1 : 0));
            break;
        }
        case LabelingScheme::Kind::TopFraction: {
            for (double v : query_values)
                result.predictions.push_back(Prediction::of_label(
                    label_against_cutoff(v, train_values, labeling.fraction)));
            break;
        }
        case LabelingScheme::Kind::BatchTopFraction: {
            const auto labels =
                assign_labels_topk(query_values, labeling.fraction);
            for (int label : labels)
                result.predictions.push_back(Prediction::of_label(label));
            break;
        }
    }
    return result;
}

std::string OraclePredictor::describe() const {
    return "oracle:" + to_string(spec_.mode);
}

}  // namespace laea
