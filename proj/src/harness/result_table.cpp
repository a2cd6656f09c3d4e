#include <cmath>
#include <map>

#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/harness/experiments.hpp"
#include "laea/metrics.hpp"

namespace laea::harness {

MeanStd mean_std(const std::vector<double>& values) {
    if (values.empty()) throw InvalidInput("mean_std: empty sample");
    MeanStd out;
    for (double v : values) out.mean += v;
    out.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return out;
}

void write_summary_csv(const ResultTable& table, std::ostream& out) {
    write_csv_row(out, {"problem", "dim", "arm", "mean", "std", "rank",
                        "symbol"});
    for (const auto& row : table.rows)
        write_csv_row(out,
                      {row.problem, std::to_string(row.dim), row.arm,
                       format_double(row.mean), format_double(row.std_dev),
                       row.has_rank ? format_double(row.rank) : std::string(),
                       row.symbol});
}

void write_ranks_csv(const ResultTable& table, std::ostream& out) {
    write_csv_row(out, {"arm", "mean_rank", "plus", "minus", "approx"});
    for (const auto& arm : table.arm_summary)
        write_csv_row(out, {arm.arm, format_double(arm.mean_rank),
                            std::to_string(arm.plus),
                            std::to_string(arm.minus),
                            std::to_string(arm.approx)});
}

ResultTable build_comparison_table(const std::vector<std::string>& arms,
                                   const std::string& reference_arm,
                                   const std::vector<CellValues>& cells) {
    std::size_t reference = arms.size();
    for (std::size_t i = 0; i < arms.size(); ++i)
        if (arms[i] == reference_arm) reference = i;
    if (reference == arms.size())
        throw InvalidInput("reference arm not present: " + reference_arm);

    ResultTable table;
    std::vector<std::vector<double>> rank_rows;
    std::vector<ArmSummary> summary(arms.size());
    for (std::size_t a = 0; a < arms.size(); ++a) summary[a].arm = arms[a];

    for (const auto& cell : cells) {
        if (cell.per_arm.size() != arms.size())
            throw InvalidInput("cell arm count mismatch");
        std::vector<double> means(arms.size());
        for (std::size_t a = 0; a < arms.size(); ++a)
            means[a] = mean_std(cell.per_arm[a]).mean;
        const auto ranks = rank_ascending(means);
        rank_rows.push_back(ranks);

        for (std::size_t a = 0; a < arms.size(); ++a) {
            const auto stats = mean_std(cell.per_arm[a]);
            ResultRow row;
            row.problem = cell.problem;
            row.dim = cell.dim;
            row.arm = arms[a];
            row.mean = stats.mean;
            row.std_dev = stats.std_dev;
            row.rank = ranks[a];
            row.has_rank = true;
            if (a != reference) {
                const auto outcome = wilcoxon_rank_sum(cell.per_arm[a],
                                                       cell.per_arm[reference]);
                row.symbol = significance_symbol(outcome.symbol);
                switch (outcome.symbol) {
                    case Significance::Plus: ++summary[a].plus; break;
                    case Significance::Minus: ++summary[a].minus; break;
                    case Significance::Approx: ++summary[a].approx; break;
                }
            }
            table.rows.push_back(std::move(row));
        }
    }

    const auto averaged = mean_rank(rank_rows);
    for (std::size_t a = 0; a < arms.size(); ++a)
        summary[a].mean_rank = averaged[a];
    table.arm_summary = std::move(summary);
    return table;
}

}  // namespace laea::harness
