#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/harness/experiments.hpp"
#include "laea/labeling.hpp"
#include "laea/metrics.hpp"
#include "laea/rng.hpp"

#include "io_util.hpp"

namespace laea::harness {

namespace {

constexpr const char* kStreamKey = "case2d-train";

}  // namespace

/// 2-D probe of a predictor: 50 LHS training points labeled by their median
/// objective, a full grid as the query set, scored once with direct labels
/// (classification) and once by taking the better half of the predicted
/// values (regression).
ExperimentOutcome run_case2d(const ExperimentConfig& cfg) {
    for (int dim : cfg.dims)
        if (dim != 2)
            throw ConfigError("case2d runs on dim 2 only");

    ExperimentOutcome outcome;
    outcome.out_dir = cfg.out_dir;
    OutputDir out(cfg.out_dir);

    ResultTable table;
    nlohmann::json digest;

    for (const auto& problem_name : cfg.problems) {
        const auto problem = make_problem(problem_name, 2);
        const auto grid = grid_sample(cfg.grid_points, problem);
        std::vector<double> grid_truth(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            grid_truth[i] = evaluate(problem, grid[i]);
        // Rank ground truth for the regression mode: the true better half.
        const auto true_reg = assign_labels_topk(grid_truth, 0.5);

        std::vector<double> acc_cla;
        std::vector<double> acc_reg;
        for (const auto seed : cfg.seeds) {
            const auto train = lhs_sample(
                cfg.train_size, problem,
                mix_seeds(seed, hash_string(kStreamKey) ^
                                    hash_string(problem_name)));
            std::vector<double> train_f(train.size());
            for (std::size_t i = 0; i < train.size(); ++i)
                train_f[i] = evaluate(problem, train[i]);
            const double threshold = median(train_f);
            const auto train_labels = assign_labels_median(train_f);

            // Threshold ground truth (also what the points file plots).
            std::vector<int> true_cla(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i)
                true_cla[i] = grid_truth[i] < threshold ? 1 : 0;

            auto built = make_predictor(cfg.predictor, problem, seed);

            std::vector<double> labels_as_real(train_labels.begin(),
                                               train_labels.end());
            const auto cla_batch = built.predictor->predict(
                train, labels_as_real, grid, SurrogateTask::Cla,
                LabelingScheme::below_median());
            outcome.prediction_failures += cla_batch.failures;
            std::vector<int> pred_cla(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i)
                pred_cla[i] = *cla_batch.predictions[i].label;

            const auto reg_batch = built.predictor->predict(
                train, train_f, grid, SurrogateTask::Reg,
                LabelingScheme::below_median());
            outcome.prediction_failures += reg_batch.failures;
            std::vector<double> pred_values(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i)
                pred_values[i] = *reg_batch.predictions[i].value;
            const auto pred_reg = assign_labels_topk(pred_values, 0.5);

            acc_cla.push_back(accuracy(pred_cla, true_cla));
            acc_reg.push_back(accuracy(pred_reg, true_reg));

            auto points = out.open("points_" + problem_name + "_seed" +
                                   std::to_string(seed) + ".csv");
            write_csv_row(points, {"problem", "x1", "x2", "true_label",
                                   "pred_label_cla", "pred_label_reg"});
            for (std::size_t i = 0; i < grid.size(); ++i)
                write_csv_row(points,
                              {problem_name, format_double(grid[i][0]),
                               format_double(grid[i][1]),
                               std::to_string(true_cla[i]),
                               std::to_string(pred_cla[i]),
                               std::to_string(pred_reg[i])});
        }

        const auto cla_stats = mean_std(acc_cla);
        const auto reg_stats = mean_std(acc_reg);
        table.rows.push_back(
            {problem_name, 2, "cla", cla_stats.mean, cla_stats.std_dev, 0.0,
             "", false});
        table.rows.push_back(
            {problem_name, 2, "reg", reg_stats.mean, reg_stats.std_dev, 0.0,
             "", false});
        digest[problem_name] = {
            {"cla", {{"mean", cla_stats.mean}, {"std", cla_stats.std_dev},
                     {"per_seed", acc_cla}}},
            {"reg", {{"mean", reg_stats.mean}, {"std", reg_stats.std_dev},
                     {"per_seed", acc_reg}}},
        };
    }

    auto summary = out.open("summary.csv");
    write_summary_csv(table, summary);
    outcome.files = out.files();
    outcome.summary = std::move(digest);
    return outcome;
}

}  // namespace laea::harness
