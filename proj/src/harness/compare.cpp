#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/harness/experiments.hpp"
#include "laea/laea_run.hpp"

#include "cells.hpp"
#include "io_util.hpp"

namespace laea::harness {

namespace {

LaeaVariant variant_of(const std::string& algorithm) {
    if (algorithm == "laea") return LaeaVariant::RegCla;
    if (algorithm == "laea-reg") return LaeaVariant::RegOnly;
    throw ConfigError("compare arm algorithm must be laea or laea-reg, got: " +
                      algorithm);
}

}  // namespace

/// Budgeted comparison of LAEA variants across arms x problems x dims x
/// seeds, reported Table-2 style (mean, std, per-cell ranks, rank-sum
/// symbols against the reference arm, mean ranks).
ExperimentOutcome run_compare(const ExperimentConfig& cfg) {
    if (cfg.arms.empty()) throw ConfigError("compare needs an 'arms' list");
    for (const auto& arm : cfg.arms) variant_of(arm.algorithm);

    ExperimentOutcome outcome;
    outcome.out_dir = cfg.out_dir;
    OutputDir out(cfg.out_dir);

    struct Cell {
        std::size_t arm;
        std::string problem;
        int dim;
        std::size_t seed_index;
    };
    std::vector<Cell> cells;
    for (std::size_t a = 0; a < cfg.arms.size(); ++a)
        for (const auto& problem : cfg.problems)
            for (int dim : cfg.dims)
                for (std::size_t s = 0; s < cfg.seeds.size(); ++s)
                    cells.push_back({a, problem, dim, s});

    std::vector<RunResult> results(cells.size());
    run_cells(cells.size(), cfg.jobs, [&](std::size_t i) {
        const Cell& cell = cells[i];
        const auto& arm = cfg.arms[cell.arm];
        const auto problem = make_problem(cell.problem, cell.dim);
        auto built = make_predictor(arm.predictor, problem,
                                    cfg.seeds[cell.seed_index]);
        LaeaConfig run_cfg;
        run_cfg.population_size = cfg.population_size;
        run_cfg.window_size = cfg.window_size;
        run_cfg.max_evaluations = cfg.budget;
        run_cfg.variant = variant_of(arm.algorithm);
        run_cfg.label_ratio = cfg.label_ratio;
        run_cfg.seed = cfg.seeds[cell.seed_index];
        results[i] = laea_run(problem, *built.predictor, run_cfg);
    });

    auto results_csv = out.open("results.csv");
    write_csv_row(results_csv, {"arm", "problem", "dim", "seed", "best_f"});
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& cell = cells[i];
        outcome.prediction_failures += results[i].prediction_failures;
        write_csv_row(results_csv,
                      {cfg.arms[cell.arm].name, cell.problem,
                       std::to_string(cell.dim),
                       std::to_string(cfg.seeds[cell.seed_index]),
                       format_double(objective_of(results[i].best))});
        if (cfg.emit_runs) {
            const std::string stem = "runs/" + cfg.arms[cell.arm].name + "_" +
                                     cell.problem + "_" +
                                     std::to_string(cell.dim) + "_seed" +
                                     std::to_string(cfg.seeds[cell.seed_index]);
            auto trace = out.open(stem + "_trace.csv");
            write_trace_csv(results[i], trace);
            auto run_json = out.open(stem + ".json");
            run_json << run_result_to_json(results[i]).dump(2) << '\n';
        }
    }

    std::vector<std::string> arm_names;
    for (const auto& arm : cfg.arms) arm_names.push_back(arm.name);
    std::vector<CellValues> table_cells;
    std::size_t index = 0;
    // cells iterate arm-major; regroup them (problem, dim)-major
    for (const auto& problem : cfg.problems)
        for (int dim : cfg.dims) {
            CellValues cell{problem, dim, {}};
            cell.per_arm.resize(cfg.arms.size());
            table_cells.push_back(cell);
        }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& cell = cells[i];
        index = 0;
        for (std::size_t p = 0; p < cfg.problems.size(); ++p)
            for (std::size_t d = 0; d < cfg.dims.size(); ++d) {
                if (cfg.problems[p] == cell.problem &&
                    cfg.dims[d] == cell.dim)
                    index = p * cfg.dims.size() + d;
            }
        table_cells[index].per_arm[cell.arm].push_back(
            objective_of(results[i].best));
    }

    const auto table =
        build_comparison_table(arm_names, cfg.reference_arm, table_cells);
    auto summary = out.open("summary.csv");
    write_summary_csv(table, summary);
    auto ranks = out.open("ranks.csv");
    write_ranks_csv(table, ranks);

    nlohmann::json digest;
    for (const auto& arm : table.arm_summary)
        digest["mean_rank"][arm.arm] = arm.mean_rank;
    for (const auto& row : table.rows)
        digest["cells"][row.problem + "/" + std::to_string(row.dim)]
              [row.arm] = {{"mean", row.mean},
                           {"std", row.std_dev},
                           {"rank", row.rank},
                           {"symbol", row.symbol}};
    outcome.files = out.files();
    outcome.summary = std::move(digest);
    return outcome;
}

}  // namespace laea::harness
