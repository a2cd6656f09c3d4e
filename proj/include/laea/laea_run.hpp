#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "laea/predictor.hpp"
#include "laea/problems.hpp"
#include "laea/rng.hpp"
#include "laea/solution.hpp"

namespace laea {

enum class LaeaVariant { RegCla, RegOnly };

std::string to_string(LaeaVariant variant);

/// Which archive slice forms the surrogate's context window A_{1:tau}.
enum class WindowPolicy { BestTau, FirstTau, RecentTau };

std::string to_string(WindowPolicy policy);

struct LaeaConfig {
    int population_size = 50;   // N
    int window_size = 50;       // tau
    int max_evaluations = 300;  // true-evaluation budget, init included
    LaeaVariant variant = LaeaVariant::RegCla;
    double label_ratio = 0.3;
    int vwh_bins = 15;
    WindowPolicy window_policy = WindowPolicy::BestTau;
    std::uint64_t seed = 0;
};

struct TracePoint {
    int generation = 0;
    int evaluations = 0;
    double best_objective = 0.0;
};

struct RunResult {
    Solution best;
    std::vector<TracePoint> trace;     // non-increasing best-so-far
    std::vector<Solution> archive;     // insertion order, evaluated only
    std::vector<int> unevaluated_sizes;  // |Pu| per generation
    int prediction_failures = 0;
    std::uint64_t seed = 0;
    bool completed = true;             // false when the backend died mid-run
    bool budget_includes_init = true;  // accounting convention, recorded
    nlohmann::json config_echo;
};

nlohmann::json run_result_to_json(const RunResult& result);
void write_trace_csv(const RunResult& result, std::ostream& out);

/// Notified for every true objective evaluation (instrumentation hook).
using EvalHook = std::function<void(const DecisionVector&, double)>;

/// Index of the smallest predicted value; ties go to the lowest index.
std::size_t assisted_select_value(const std::vector<Prediction>& values);

/// Indices of the label-1 predictions; if more than `cap`, a uniformly
/// random cap-sized subset. Label-0 members are never selected.
std::vector<std::size_t> assisted_select_label(
    const std::vector<Prediction>& labels, std::size_t cap, Rng& rng);

/// Archive slice per the window policy: the tau best / first inserted /
/// most recent evaluated members (all of them while the archive is short).
std::vector<std::size_t> window_indices(const std::vector<Solution>& archive,
                                        int tau, WindowPolicy policy);

/// The surrogate-assisted estimation-of-distribution loop: LHS init, VWH
/// reproduction over evaluated plus model-endorsed unevaluated members,
/// one true evaluation per generation picked by predicted value, archive
/// kept over everything evaluated.
RunResult laea_run(const BenchmarkProblem& problem, Predictor& predictor,
                   const LaeaConfig& cfg, const EvalHook& on_evaluate = {});

}  // namespace laea
