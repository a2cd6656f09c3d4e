#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "laea/harness/config.hpp"

namespace laea::harness {

struct MeanStd {
    double mean = 0.0;
    double std_dev = 0.0;  // sample standard deviation
};

MeanStd mean_std(const std::vector<double>& values);

/// Table-2-shaped rows; arms stay in config order.
struct ResultRow {
    std::string problem;
    int dim = 0;
    std::string arm;
    double mean = 0.0;
    double std_dev = 0.0;
    double rank = 0.0;           // midrank of the arm mean within the cell
    std::string symbol;          // "+", "-", UTF-8 approx, or empty
    bool has_rank = false;
};

struct ArmSummary {
    std::string arm;
    double mean_rank = 0.0;
    int plus = 0;
    int minus = 0;
    int approx = 0;
};

struct ResultTable {
    std::vector<ResultRow> rows;
    std::vector<ArmSummary> arm_summary;
};

void write_summary_csv(const ResultTable& table, std::ostream& out);
void write_ranks_csv(const ResultTable& table, std::ostream& out);

/// One best-objective sample per (arm, problem, dim, seed). Builds the
/// Table-2-shaped summary: mean(std), per-cell midranks of arm means,
/// rank-sum symbols against the reference arm, and mean ranks with
/// +/-/approx tallies.
struct CellValues {
    std::string problem;
    int dim = 0;
    std::vector<std::vector<double>> per_arm;  // arm-indexed, seed-ordered
};

ResultTable build_comparison_table(const std::vector<std::string>& arms,
                                   const std::string& reference_arm,
                                   const std::vector<CellValues>& cells);

struct ExperimentOutcome {
    std::string out_dir;
    std::vector<std::string> files;  // relative to out_dir
    int prediction_failures = 0;
    nlohmann::json summary;  // machine-readable digest (also used by tests)
};

ExperimentOutcome run_case2d(const ExperimentConfig& cfg);
ExperimentOutcome run_select_acc(const ExperimentConfig& cfg);
ExperimentOutcome run_compare(const ExperimentConfig& cfg);
ExperimentOutcome run_preselect(const ExperimentConfig& cfg);
ExperimentOutcome run_timing(const ExperimentConfig& cfg);

/// Dispatches on cfg.experiment, then writes manifest.json (config echo,
/// revision string, failure tally, file list).
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

/// Pretty-prints the known CSV outputs found in a results directory.
int print_tables(const std::string& results_dir, std::ostream& out);

/// Byte-compares the canonical example prompts against the golden files in
/// <fixtures_dir>/prompts; `update` rewrites them instead. Returns the
/// number of mismatching files.
int validate_prompt_fixtures(const std::string& fixtures_dir, bool update,
                             std::ostream& out);

}  // namespace laea::harness
