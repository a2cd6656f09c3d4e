#include <chrono>
#include <functional>

#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/harness/experiments.hpp"
#include "laea/labeling.hpp"
#include "laea/rng.hpp"

#include "io_util.hpp"

namespace laea::harness {

namespace {

double wall_seconds(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

}  // namespace

/// Prompt-size and inference-time sweep over dims x feature precisions x
/// tasks, against a live or mock text backend, serial and fanned out.
ExperimentOutcome run_timing(const ExperimentConfig& cfg) {
    if (cfg.predictor.type == PredictorSpec::Type::Oracle)
        throw ConfigError("timing needs a text backend (llm or echo predictor)");
    if (cfg.problems.empty()) throw ConfigError("timing needs a problem");

    ExperimentOutcome outcome;
    outcome.out_dir = cfg.out_dir;
    OutputDir out(cfg.out_dir);

    auto completer = make_completer(cfg.predictor);

    auto aggregates = out.open("aggregates.csv");
    write_csv_row(aggregates,
                  {"task", "dim", "beta", "calls", "mean_chars", "mean_tokens",
                   "serial_s", "parallel_s"});

    nlohmann::json digest;
    for (int dim : cfg.dims) {
        const auto problem = make_problem(cfg.problems.front(), dim);
        const auto train = lhs_sample(
            cfg.train_size, problem,
            mix_seeds(cfg.seeds.front(), hash_string("timing-train") ^
                                             static_cast<std::uint64_t>(dim)));
        std::vector<double> train_f(train.size());
        for (std::size_t i = 0; i < train.size(); ++i)
            train_f[i] = evaluate(problem, train[i]);
        std::vector<double> train_labels;
        for (int label : assign_labels_topk(train_f, cfg.label_ratio))
            train_labels.push_back(label);
        const auto queries = lhs_sample(
            cfg.train_size, problem,
            mix_seeds(cfg.seeds.front(), hash_string("timing-test") ^
                                             static_cast<std::uint64_t>(dim)));

        for (int beta : {3, 5}) {
            for (const auto task :
                 {SurrogateTask::Reg, SurrogateTask::Cla}) {
                ProtocolConfig protocol = cfg.predictor.protocol;
                protocol.feature_precision = beta;

                const auto& y =
                    task == SurrogateTask::Reg ? train_f : train_labels;
                const std::size_t records_before = completer->log().size();

                protocol.parallelism = 1;
                const double serial_s = wall_seconds([&]() {
                    predict_batch(*completer, protocol, train, y, queries,
                                  task);
                });
                protocol.parallelism =
                    static_cast<int>(queries.size());  // one slot per query
                const double parallel_s = wall_seconds([&]() {
                    predict_batch(*completer, protocol, train, y, queries,
                                  task);
                });

                const auto records = completer->log().snapshot();
                double chars = 0.0;
                double tokens = 0.0;
                std::size_t calls = 0;
                for (std::size_t i = records_before; i < records.size(); ++i) {
                    chars += static_cast<double>(records[i].chars);
                    tokens += static_cast<double>(records[i].approx_tokens);
                    ++calls;
                }
                if (calls > 0) {
                    chars /= static_cast<double>(calls);
                    tokens /= static_cast<double>(calls);
                }

                const std::string task_name = to_string(task);
                write_csv_row(aggregates,
                              {task_name, std::to_string(dim),
                               std::to_string(beta), std::to_string(calls),
                               format_double(chars), format_double(tokens),
                               format_double(serial_s),
                               format_double(parallel_s)});
                digest[task_name][std::to_string(dim)]
                      [std::to_string(beta)] = {{"mean_chars", chars},
                                                {"mean_tokens", tokens},
                                                {"serial_s", serial_s},
                                                {"parallel_s", parallel_s}};
            }
        }
    }

    auto calls = out.open("calls.csv");
    completer->log().write_csv(calls);

    outcome.files = out.files();
    outcome.summary = std::move(digest);
    return outcome;
}

}  // namespace laea::harness
