#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/harness/experiments.hpp"
#include "laea/preselect.hpp"

#include "cells.hpp"
#include "io_util.hpp"

namespace laea::harness {

namespace {

PreselectStrategy strategy_of(const std::string& algorithm) {
    if (algorithm == "random") return PreselectStrategy::Random;
    if (algorithm == "reg") return PreselectStrategy::Reg;
    if (algorithm == "cla") return PreselectStrategy::Cla;
    throw ConfigError(
        "preselect arm algorithm must be random, reg or cla, got: " +
        algorithm);
}

}  // namespace

/// Pre-selection study on the composite-DE loop, Table-4 style: the random
/// arm is the baseline, predictor arms reduce each parent's three trials
/// to one before evaluation.
ExperimentOutcome run_preselect(const ExperimentConfig& cfg) {
    if (cfg.arms.empty()) throw ConfigError("preselect needs an 'arms' list");
    for (const auto& arm : cfg.arms) strategy_of(arm.algorithm);

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
        const auto strategy = strategy_of(arm.algorithm);
        const auto problem = make_problem(cell.problem, cell.dim);

        PreselectConfig run_cfg;
        run_cfg.population_size = cfg.population_size;
        run_cfg.max_evaluations = cfg.budget;
        run_cfg.label_ratio = cfg.label_ratio;
        run_cfg.seed = cfg.seeds[cell.seed_index];

        // The random arm must stay bit-identical no matter which predictor
        // the config mentions, so it never even builds one.
        if (strategy == PreselectStrategy::Random) {
            results[i] =
                code_preselect_run(problem, nullptr, strategy, run_cfg);
        } else {
            auto built = make_predictor(arm.predictor, problem,
                                        cfg.seeds[cell.seed_index]);
            results[i] = code_preselect_run(problem, built.predictor.get(),
                                            strategy, run_cfg);
        }
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
        }
    }

    std::vector<std::string> arm_names;
    for (const auto& arm : cfg.arms) arm_names.push_back(arm.name);
    std::vector<CellValues> table_cells;
    for (const auto& problem : cfg.problems)
        for (int dim : cfg.dims) {
            CellValues cell{problem, dim, {}};
            cell.per_arm.resize(cfg.arms.size());
            table_cells.push_back(cell);
        }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& cell = cells[i];
        for (std::size_t p = 0; p < cfg.problems.size(); ++p)
            for (std::size_t d = 0; d < cfg.dims.size(); ++d)
                if (cfg.problems[p] == cell.problem && cfg.dims[d] == cell.dim)
                    table_cells[p * cfg.dims.size() + d]
                        .per_arm[cell.arm]
                        .push_back(objective_of(results[i].best));
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
    outcome.files = out.files();
    outcome.summary = std::move(digest);
    return outcome;
}

}  // namespace laea::harness
