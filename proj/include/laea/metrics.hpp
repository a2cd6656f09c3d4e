#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace laea {

/// Mean of the indicator of label agreement.
double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& actual);

struct ConfusionCounts {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    long tn = 0;
};

ConfusionCounts confusion(const std::vector<int>& predicted,
                          const std::vector<int>& actual);

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// P = TP/(TP+FP), R = TP/(TP+FN), F1 = 2PR/(P+R); a zero denominator
/// yields 0 rather than NaN.
Prf precision_recall_f1(const ConfusionCounts& counts);

enum class Significance { Plus, Minus, Approx };

std::string significance_symbol(Significance s);

struct StatOutcome {
    double p_value = 1.0;
    Significance symbol = Significance::Approx;
};

/// Two-sided rank-sum test with midrank ties. Exact enumeration when
/// |a|+|b| <= 16; a moment-matched corrected normal approximation beyond.
/// Plus means `a` is significantly better (lower values, minimization).
StatOutcome wilcoxon_rank_sum(const std::vector<double>& a,
                              const std::vector<double>& b,
                              double alpha = 0.05);

/// Ascending ranks starting at 1; tied values share their average rank.
std::vector<double> rank_ascending(const std::vector<double>& values);

/// rows = problems, columns = algorithms. Ranks each row ascending
/// (1 = best, midrank ties), then averages per algorithm across rows.
std::vector<double> mean_rank(const std::vector<std::vector<double>>& per_problem_means);

namespace detail {

/// Exact permutation p (two-sided, doubled smaller tail) of the rank sum
/// `w` of an na-subset drawn from `pooled_ranks`.
double wilcoxon_exact_p(const std::vector<double>& pooled_ranks, std::size_t na,
                        double w);

/// Tie-corrected, continuity-corrected normal approximation with
/// Edgeworth skewness/kurtosis terms from the exact sampling moments.
double wilcoxon_approx_p(const std::vector<double>& pooled_ranks,
                         std::size_t na, double w);

}  // namespace detail

}  // namespace laea
