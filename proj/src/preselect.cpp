#include "laea/preselect.hpp"

#include <algorithm>

#include "laea/de.hpp"
#include "laea/errors.hpp"

namespace laea {

std::string to_string(PreselectStrategy strategy) {
    switch (strategy) {
        case PreselectStrategy::Random: return "random";
        case PreselectStrategy::Reg: return "reg";
        case PreselectStrategy::Cla: return "cla";
    }
    return "unknown";
}

RunResult code_preselect_run(const BenchmarkProblem& problem,
                             Predictor* predictor, PreselectStrategy strategy,
                             const PreselectConfig& cfg,
                             const EvalHook& on_evaluate) {
    if (cfg.population_size < 6)
        throw InvalidInput("code_preselect_run: population size must be >= 6");
    if (cfg.max_evaluations <= cfg.population_size)
        throw InvalidInput("code_preselect_run: budget must exceed init cost");
    if (strategy != PreselectStrategy::Random && predictor == nullptr)
        throw InvalidInput("code_preselect_run: strategy needs a predictor");

    const int n = cfg.population_size;
    Rng rng(cfg.seed);

    RunResult result;
    result.seed = cfg.seed;
    result.config_echo = nlohmann::json{
        {"algorithm", "code-preselect"},
        {"problem", to_string(problem.name)},
        {"dim", problem.dim},
        {"population_size", n},
        {"max_evaluations", cfg.max_evaluations},
        {"strategy", to_string(strategy)},
        {"label_ratio", cfg.label_ratio},
        {"predictor",
         predictor != nullptr ? predictor->describe() : std::string("none")},
        {"seed", cfg.seed},
    };

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
    int evaluations = n;

    double best_so_far = objective_of(*std::min_element(
        population.begin(), population.end(), [](const auto& a, const auto& b) {
            return objective_of(a) < objective_of(b);
        }));
    result.trace.push_back({0, evaluations, best_so_far});

    const auto scheme = LabelingScheme::top_fraction(cfg.label_ratio);
    int generation = 0;

    while (evaluations < cfg.max_evaluations) {
        ++generation;
        // Generation-synchronous: all trials are judged against the frozen
        // parent snapshot, replacements land afterwards.
        const Population parents = population;

        Matrix parent_x;
        std::vector<double> parent_f;
        std::vector<double> parent_labels;
        if (strategy != PreselectStrategy::Random) {
            parent_x.reserve(parents.size());
            parent_f.reserve(parents.size());
            for (const auto& s : parents) {
                parent_x.push_back(s.x);
                parent_f.push_back(objective_of(s));
            }
            if (strategy == PreselectStrategy::Cla)
                for (int label : assign_labels_topk(parent_f, cfg.label_ratio))
                    parent_labels.push_back(label);
        }

        for (int i = 0; i < n && evaluations < cfg.max_evaluations; ++i) {
            const auto trials = code_generate_trials(
                static_cast<std::size_t>(i), parents, problem, rng);
            Matrix trial_batch(trials.begin(), trials.end());

            std::size_t pick = 0;
            try {
                switch (strategy) {
                    case PreselectStrategy::Random:
                        pick = static_cast<std::size_t>(rng.next_below(3));
                        break;
                    case PreselectStrategy::Reg: {
                        const auto batch =
                            predictor->predict(parent_x, parent_f, trial_batch,
                                               SurrogateTask::Reg, scheme);
                        result.prediction_failures += batch.failures;
                        pick = assisted_select_value(batch.predictions);
                        break;
                    }
                    case PreselectStrategy::Cla: {
                        const auto batch = predictor->predict(
                            parent_x, parent_labels, trial_batch,
                            SurrogateTask::Cla, scheme);
                        result.prediction_failures += batch.failures;
                        std::vector<std::size_t> positives;
                        for (std::size_t t = 0; t < 3; ++t)
                            if (*batch.predictions[t].label == 1)
                                positives.push_back(t);
                        pick = positives.empty()
                                   ? static_cast<std::size_t>(rng.next_below(3))
                                   : positives[rng.next_below(positives.size())];
                        break;
                    }
                }
            } catch (const BackendUnavailable&) {
                result.completed = false;
                break;
            }

            Solution trial = evaluate_solution(trial_batch[pick]);
            ++evaluations;
            best_so_far = std::min(best_so_far, objective_of(trial));
            result.archive.push_back(trial);
            if (objective_of(trial) < objective_of(population[i]))
                population[i] = std::move(trial);
        }
        result.trace.push_back({generation, evaluations, best_so_far});
        if (!result.completed) break;
    }

    result.best = *std::min_element(
        result.archive.begin(), result.archive.end(),
        [](const auto& a, const auto& b) {
            return objective_of(a) < objective_of(b);
        });
    return result;
}

}  // namespace laea
