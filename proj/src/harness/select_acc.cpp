#include <filesystem>
#include <fstream>
#include <map>

#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/ga_collect.hpp"
#include "laea/harness/experiments.hpp"
#include "laea/labeling.hpp"
#include "laea/metrics.hpp"
#include "laea/rng.hpp"

#include "io_util.hpp"

namespace laea::harness {

namespace {

std::string dataset_name(const std::string& problem, int dim) {
    return "ga_dataset_" + problem + "_" + std::to_string(dim) + ".csv";
}

struct PrfSamples {
    std::vector<double> precision;
    std::vector<double> recall;
    std::vector<double> f1;

    void add(const Prf& prf) {
        precision.push_back(prf.precision);
        recall.push_back(prf.recall);
        f1.push_back(prf.f1);
    }
    void add_all(const PrfSamples& other) {
        precision.insert(precision.end(), other.precision.begin(),
                         other.precision.end());
        recall.insert(recall.end(), other.recall.begin(), other.recall.end());
        f1.insert(f1.end(), other.f1.begin(), other.f1.end());
    }
};

std::vector<std::string> prf_fields(const PrfSamples& samples) {
    const auto p = mean_std(samples.precision);
    const auto r = mean_std(samples.recall);
    const auto f = mean_std(samples.f1);
    return {format_double(p.mean), format_double(p.std_dev),
            format_double(r.mean), format_double(r.std_dev),
            format_double(f.mean), format_double(f.std_dev)};
}

nlohmann::json prf_json(const PrfSamples& samples) {
    const auto p = mean_std(samples.precision);
    const auto r = mean_std(samples.recall);
    const auto f = mean_std(samples.f1);
    return {{"precision_mean", p.mean}, {"precision_std", p.std_dev},
            {"recall_mean", r.mean},    {"recall_std", r.std_dev},
            {"f1_mean", f.mean},        {"f1_std", f.std_dev}};
}

}  // namespace

/// Selection-accuracy study: consumes GA parent/offspring snapshots, asks
/// the predictor to pick half of each offspring batch (by predicted value,
/// or by label-1 membership), scores against the true better half.
ExperimentOutcome run_select_acc(const ExperimentConfig& cfg) {
    ExperimentOutcome outcome;
    outcome.out_dir = cfg.out_dir;
    OutputDir out(cfg.out_dir);

    // Datasets either come from a previous collection run or are generated
    // in place; a named-but-incomplete directory is an error.
    const bool external = !cfg.dataset_dir.empty();
    std::map<std::pair<std::string, int>, std::vector<GaCollectRecord>> data;
    for (const auto& problem_name : cfg.problems) {
        for (int dim : cfg.dims) {
            const auto problem = make_problem(problem_name, dim);
            if (external) {
                const auto path = std::filesystem::path(cfg.dataset_dir) /
                                  dataset_name(problem_name, dim);
                if (!std::filesystem::exists(path))
                    throw InvalidState("missing GA dataset: " + path.string());
                std::ifstream in(path);
                data[{problem_name, dim}] = read_ga_dataset_csv(in, dim);
            } else {
                GaCollectConfig collect;
                collect.population_size = cfg.population_size;
                collect.record_generations = cfg.record_generations;
                collect.repeats = static_cast<int>(cfg.seeds.size());
                collect.master_seed = cfg.seeds.front();
                auto records = ga_collect_run(problem, collect);
                auto stream = out.open("datasets/" +
                                       dataset_name(problem_name, dim));
                write_ga_dataset_csv(records, dim, stream);
                data[{problem_name, dim}] = std::move(records);
            }
        }
    }

    const std::vector<std::string> tasks = {"cla", "reg"};
    std::map<std::pair<int, std::string>, PrfSamples> overall;
    std::map<std::tuple<std::string, int, int, std::string>, PrfSamples> staged;

    for (const auto& problem_name : cfg.problems) {
        for (int dim : cfg.dims) {
            const auto problem = make_problem(problem_name, dim);
            for (const auto& record : data.at({problem_name, dim})) {
                Matrix parent_x;
                std::vector<double> parent_f;
                for (const auto& s : record.parents) {
                    parent_x.push_back(s.x);
                    parent_f.push_back(objective_of(s));
                }
                Matrix offspring_x;
                std::vector<double> offspring_f;
                for (const auto& s : record.offspring) {
                    offspring_x.push_back(s.x);
                    offspring_f.push_back(objective_of(s));
                }
                const auto true_half = assign_labels_topk(offspring_f, 0.5);
                const std::uint64_t run_seed =
                    record.run < static_cast<int>(cfg.seeds.size())
                        ? cfg.seeds[record.run]
                        : cfg.seeds.front() + record.run;
                auto built = make_predictor(cfg.predictor, problem, run_seed);

                // Reg: the better half of the predicted values.
                const auto reg_batch = built.predictor->predict(
                    parent_x, parent_f, offspring_x, SurrogateTask::Reg,
                    LabelingScheme::batch_top_fraction(0.5));
                outcome.prediction_failures += reg_batch.failures;
                std::vector<double> predicted(offspring_x.size());
                for (std::size_t i = 0; i < predicted.size(); ++i)
                    predicted[i] = *reg_batch.predictions[i].value;
                const auto reg_sel = assign_labels_topk(predicted, 0.5);
                const Prf reg_prf =
                    precision_recall_f1(confusion(reg_sel, true_half));

                // Cla: every label-1 member is selected, however many.
                std::vector<double> parent_labels;
                for (int label : assign_labels_topk(parent_f, 0.5))
                    parent_labels.push_back(label);
                const auto cla_batch = built.predictor->predict(
                    parent_x, parent_labels, offspring_x, SurrogateTask::Cla,
                    LabelingScheme::batch_top_fraction(0.5));
                outcome.prediction_failures += cla_batch.failures;
                std::vector<int> cla_sel(offspring_x.size());
                for (std::size_t i = 0; i < cla_sel.size(); ++i)
                    cla_sel[i] = *cla_batch.predictions[i].label;
                const Prf cla_prf =
                    precision_recall_f1(confusion(cla_sel, true_half));

                overall[{dim, "reg"}].add(reg_prf);
                overall[{dim, "cla"}].add(cla_prf);
                staged[{problem_name, dim, record.generation, "reg"}].add(
                    reg_prf);
                staged[{problem_name, dim, record.generation, "cla"}].add(
                    cla_prf);
            }
        }
    }

    auto summary = out.open("summary.csv");
    write_csv_row(summary,
                  {"dim", "task", "precision_mean", "precision_std",
                   "recall_mean", "recall_std", "f1_mean", "f1_std"});
    nlohmann::json digest;
    for (int dim : cfg.dims) {
        for (const auto& task : tasks) {
            const auto& samples = overall.at({dim, task});
            std::vector<std::string> row = {std::to_string(dim), task};
            const auto fields = prf_fields(samples);
            row.insert(row.end(), fields.begin(), fields.end());
            write_csv_row(summary, row);
            digest[std::to_string(dim)][task] = prf_json(samples);
        }
    }

    auto stages = out.open("stages.csv");
    write_csv_row(stages, {"problem", "dim", "gen", "task", "precision_mean",
                           "precision_std", "recall_mean", "recall_std",
                           "f1_mean", "f1_std"});
    for (const auto& problem_name : cfg.problems)
        for (int dim : cfg.dims)
            for (int gen : cfg.record_generations)
                for (const auto& task : tasks) {
                    const auto it =
                        staged.find({problem_name, dim, gen, task});
                    if (it == staged.end()) continue;
                    std::vector<std::string> row = {
                        problem_name, std::to_string(dim),
                        std::to_string(gen), task};
                    const auto fields = prf_fields(it->second);
                    row.insert(row.end(), fields.begin(), fields.end());
                    write_csv_row(stages, row);
                }

    outcome.files = out.files();
    outcome.summary = std::move(digest);
    return outcome;
}

}  // namespace laea::harness
