#include "laea/laea_run.hpp"

#include <algorithm>
#include <numeric>

#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/vwh.hpp"

namespace laea {

std::string to_string(LaeaVariant variant) {
    return variant == LaeaVariant::RegCla ? "reg-cla" : "reg-only";
}

std::string to_string(WindowPolicy policy) {
    switch (policy) {
        case WindowPolicy::BestTau: return "best";
        case WindowPolicy::FirstTau: return "first";
        case WindowPolicy::RecentTau: return "recent";
    }
    return "unknown";
}

std::size_t assisted_select_value(const std::vector<Prediction>& values) {
    if (values.empty()) throw InvalidInput("assisted_select_value: empty batch");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (*values[i].value < *values[best].value) best = i;
    return best;
}

std::vector<std::size_t> assisted_select_label(
    const std::vector<Prediction>& labels, std::size_t cap, Rng& rng) {
    std::vector<std::size_t> positives;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (*labels[i].label == 1) positives.push_back(i);
    if (positives.size() <= cap) return positives;
    // Partial Fisher-Yates, then restore index order for determinism.
    for (std::size_t i = 0; i < cap; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.next_below(positives.size() - i));
        std::swap(positives[i], positives[j]);
    }
    positives.resize(cap);
    std::sort(positives.begin(), positives.end());
    return positives;
}

std::vector<std::size_t> window_indices(const std::vector<Solution>& archive,
                                        int tau, WindowPolicy policy) {
    const std::size_t take =
        std::min<std::size_t>(archive.size(), static_cast<std::size_t>(tau));
    std::vector<std::size_t> indices(archive.size());
    std::iota(indices.begin(), indices.end(), 0);
    switch (policy) {
        case WindowPolicy::BestTau:
            std::stable_sort(indices.begin(), indices.end(),
                             [&](std::size_t a, std::size_t b) {
                                 return objective_of(archive[a]) <
                                        objective_of(archive[b]);
                             });
            indices.resize(take);
            break;
        case WindowPolicy::FirstTau:
            indices.resize(take);
            break;
        case WindowPolicy::RecentTau:
            indices.erase(indices.begin(), indices.end() - take);
            break;
    }
    return indices;
}

namespace {

void validate_config(const LaeaConfig& cfg) {
    if (cfg.population_size < 4)
        throw InvalidInput("laea_run: population size must be >= 4");
    if (cfg.window_size < 2)
        throw InvalidInput("laea_run: window size must be >= 2");
    if (cfg.max_evaluations <= cfg.population_size)
        throw InvalidInput("laea_run: budget must exceed the population size");
    if (!(cfg.label_ratio > 0.0) || !(cfg.label_ratio < 1.0))
        throw InvalidInput("laea_run: label ratio must be in (0,1)");
}

nlohmann::json echo_config(const BenchmarkProblem& problem,
                           const Predictor& predictor, const LaeaConfig& cfg) {
    return nlohmann::json{
        {"algorithm", "laea"},
        {"problem", to_string(problem.name)},
        {"dim", problem.dim},
        {"population_size", cfg.population_size},
        {"window_size", cfg.window_size},
        {"max_evaluations", cfg.max_evaluations},
        {"variant", to_string(cfg.variant)},
        {"label_ratio", cfg.label_ratio},
        {"vwh_bins", cfg.vwh_bins},
        {"window_policy", to_string(cfg.window_policy)},
        {"predictor", predictor.describe()},
        {"seed", cfg.seed},
    };
}

}  // namespace

RunResult laea_run(const BenchmarkProblem& problem, Predictor& predictor,
                   const LaeaConfig& cfg, const EvalHook& on_evaluate) {
    validate_config(cfg);
    const int n = cfg.population_size;
    Rng rng(cfg.seed);

    RunResult result;
    result.seed = cfg.seed;
    result.config_echo = echo_config(problem, predictor, cfg);

    auto evaluate_solution = [&](DecisionVector x) {
        const double f = evaluate(problem, x);
        if (on_evaluate) on_evaluate(x, f);
        return Solution(std::move(x), f);
    };

    Population population;
    population.reserve(n);
    for (auto& point : lhs_sample(n, problem, rng.next_u64()))
        population.push_back(evaluate_solution(std::move(point)));
    result.archive = population;
    int evaluations = n;  // initialization counts toward the budget

    double best_so_far = objective_of(*std::min_element(
        population.begin(), population.end(), [](const auto& a, const auto& b) {
            return objective_of(a) < objective_of(b);
        }));
    result.trace.push_back({0, evaluations, best_so_far});

    Population unevaluated;
    const std::size_t cap = static_cast<std::size_t>(n) / 2;
    int generation = 0;

    while (evaluations < cfg.max_evaluations) {
        ++generation;

        Matrix parent_coords;
        parent_coords.reserve(population.size() + unevaluated.size());
        for (const auto& s : population) parent_coords.push_back(s.x);
        for (const auto& s : unevaluated) parent_coords.push_back(s.x);
        const VwhModel model = vwh_fit(parent_coords, problem, cfg.vwh_bins);
        const Matrix offspring = vwh_sample(model, n, rng);

        const auto window =
            window_indices(result.archive, cfg.window_size, cfg.window_policy);
        Matrix train_x;
        std::vector<double> train_f;
        train_x.reserve(window.size());
        train_f.reserve(window.size());
        for (std::size_t idx : window) {
            train_x.push_back(result.archive[idx].x);
            train_f.push_back(objective_of(result.archive[idx]));
        }

        const auto scheme = LabelingScheme::top_fraction(cfg.label_ratio);
        PredictBatchResult values;
        try {
            values = predictor.predict(train_x, train_f, offspring,
                                       SurrogateTask::Reg, scheme);
        } catch (const BackendUnavailable&) {
            result.completed = false;
            break;
        }
        result.prediction_failures += values.failures;
        const std::size_t chosen = assisted_select_value(values.predictions);

        // Model-endorsed members enter the next reproduction pool without
        // ever being truly evaluated; the chosen candidate is excluded
        // since it is about to be evaluated.
        std::vector<std::size_t> endorsed;
        if (cfg.variant == LaeaVariant::RegCla) {
            std::vector<double> train_labels;
            train_labels.reserve(train_f.size());
            for (int label : assign_labels_topk(train_f, cfg.label_ratio))
                train_labels.push_back(label);
            PredictBatchResult labels;
            try {
                labels = predictor.predict(train_x, train_labels, offspring,
                                           SurrogateTask::Cla, scheme);
            } catch (const BackendUnavailable&) {
                result.completed = false;
                break;
            }
            result.prediction_failures += labels.failures;
            auto pruned = labels.predictions;
            pruned[chosen] = Prediction::of_label(0);
            endorsed = assisted_select_label(pruned, cap, rng);
        } else {
            std::vector<std::size_t> order(offspring.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) {
                                 return *values.predictions[a].value <
                                        *values.predictions[b].value;
                             });
            for (std::size_t idx : order) {
                if (idx == chosen) continue;
                if (endorsed.size() == cap) break;
                endorsed.push_back(idx);
            }
        }
        unevaluated.clear();
        for (std::size_t idx : endorsed)
            unevaluated.emplace_back(offspring[idx]);
        result.unevaluated_sizes.push_back(
            static_cast<int>(unevaluated.size()));

        Solution candidate = evaluate_solution(offspring[chosen]);
        ++evaluations;
        best_so_far = std::min(best_so_far, objective_of(candidate));
        result.archive.push_back(candidate);

        population.push_back(std::move(candidate));
        std::stable_sort(population.begin(), population.end(),
                         [](const auto& a, const auto& b) {
                             return objective_of(a) < objective_of(b);
                         });
        population.resize(n);

        result.trace.push_back({generation, evaluations, best_so_far});
    }

    result.best = *std::min_element(
        result.archive.begin(), result.archive.end(),
        [](const auto& a, const auto& b) {
            return objective_of(a) < objective_of(b);
        });
    return result;
}

nlohmann::json run_result_to_json(const RunResult& result) {
    nlohmann::json archive = nlohmann::json::array();
    for (const auto& s : result.archive)
        archive.push_back({{"x", s.x}, {"f", objective_of(s)}});
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& p : result.trace)
        trace.push_back({p.generation, p.evaluations, p.best_objective});
    return nlohmann::json{
        {"config", result.config_echo},
        {"seed", result.seed},
        {"completed", result.completed},
        {"budget_includes_init", result.budget_includes_init},
        {"prediction_failures", result.prediction_failures},
        {"best_x", result.best.x},
        {"best_f", objective_of(result.best)},
        {"trace", trace},
        {"archive", archive},
    };
}

void write_trace_csv(const RunResult& result, std::ostream& out) {
    write_csv_row(out, {"gen", "fes", "best_f"});
    for (const auto& p : result.trace)
        write_csv_row(out, {std::to_string(p.generation),
                            std::to_string(p.evaluations),
                            format_double(p.best_objective)});
}

}  // namespace laea
