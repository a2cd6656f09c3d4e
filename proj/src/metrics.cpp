#include "laea/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "laea/errors.hpp"

namespace laea {

double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& actual) {
    if (predicted.empty() || predicted.size() != actual.size())
        throw InvalidInput("accuracy: label lists must be nonempty and equal");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        if (predicted[i] == actual[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

ConfusionCounts confusion(const std::vector<int>& predicted,
                          const std::vector<int>& actual) {
    if (predicted.size() != actual.size())
        throw InvalidInput("confusion: label lists must have equal length");
    ConfusionCounts c;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] == 1 && actual[i] == 1) ++c.tp;
        if (predicted[i] == 1 && actual[i] == 0) ++c.fp;
        if (predicted[i] == 0 && actual[i] == 1) ++c.fn;
        if (predicted[i] == 0 && actual[i] == 0) ++c.tn;
    }
    return c;
}

Prf precision_recall_f1(const ConfusionCounts& counts) {
    Prf out;
    const double tp = static_cast<double>(counts.tp);
    if (counts.tp + counts.fp > 0) out.precision = tp / (counts.tp + counts.fp);
    if (counts.tp + counts.fn > 0) out.recall = tp / (counts.tp + counts.fn);
    if (out.precision + out.recall > 0.0)
        out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
    return out;
}

std::string significance_symbol(Significance s) {
    switch (s) {
        case Significance::Plus: return "+";
        case Significance::Minus: return "-";
        case Significance::Approx: return "≈";
    }
    return "?";
}

std::vector<double> rank_ascending(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return values[a] < values[b];
                     });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // Average rank over the tied block [i, j].
        const double rank = 0.5 * (static_cast<double>(i + 1) +
                                   static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> mean_rank(
    const std::vector<std::vector<double>>& per_problem_means) {
    if (per_problem_means.empty())
        throw InvalidInput("mean_rank: no problems given");
    const std::size_t algorithms = per_problem_means.front().size();
    std::vector<double> totals(algorithms, 0.0);
    for (const auto& row : per_problem_means) {
        if (row.size() != algorithms)
            throw InvalidInput("mean_rank: ragged input");
        const auto ranks = rank_ascending(row);
        for (std::size_t k = 0; k < algorithms; ++k) totals[k] += ranks[k];
    }
    for (double& t : totals) t /= static_cast<double>(per_problem_means.size());
    return totals;
}

namespace detail {

namespace {

constexpr double kRankEps = 1e-9;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi_v<double>);
}

double two_sided(double p_low, double p_high) {
    const double p = 2.0 * std::min(p_low, p_high);
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double wilcoxon_exact_p(const std::vector<double>& pooled_ranks, std::size_t na,
                        double w) {
    const std::size_t n = pooled_ranks.size();
    // Iterate all na-combinations with the classic odometer.
    std::vector<std::size_t> idx(na);
    std::iota(idx.begin(), idx.end(), 0);
    long total = 0;
    long at_most = 0;
    long at_least = 0;
    while (true) {
        double sum = 0.0;
        for (std::size_t i : idx) sum += pooled_ranks[i];
        ++total;
        if (sum <= w + kRankEps) ++at_most;
        if (sum >= w - kRankEps) ++at_least;

        std::size_t k = na;
        while (k > 0) {
            --k;
            if (idx[k] != k + n - na) break;
            if (k == 0) {
                const double p_low = static_cast<double>(at_most) / total;
                const double p_high = static_cast<double>(at_least) / total;
                return two_sided(p_low, p_high);
            }
        }
        ++idx[k];
        for (std::size_t j = k + 1; j < na; ++j) idx[j] = idx[j - 1] + 1;
    }
}

double wilcoxon_approx_p(const std::vector<double>& pooled_ranks,
                         std::size_t na, double w) {
    const std::size_t n = pooled_ranks.size();
    const double mean =
        std::accumulate(pooled_ranks.begin(), pooled_ranks.end(), 0.0) / n;

    // Central power sums of the pooled (midrank) population; ties enter the
    // approximation through these, which is the tie correction.
    double p2 = 0.0, p3 = 0.0, p4 = 0.0, p5 = 0.0, p6 = 0.0;
    for (double r : pooled_ranks) {
        const double d = r - mean;
        const double d2 = d * d;
        p2 += d2;
        p3 += d2 * d;
        p4 += d2 * d2;
        p5 += d2 * d2 * d;
        p6 += d2 * d2 * d2;
    }

    // Exact central moments of a without-replacement sample sum. q_b is the
    // probability that b specific distinct members all land in the sample.
    const double u = static_cast<double>(na);
    const double N = static_cast<double>(n);
    auto falling = [](double x, int b) {
        double r = 1.0;
        for (int i = 0; i < b; ++i) r *= x - i;
        return r;
    };
    const double q1 = falling(u, 1) / falling(N, 1);
    const double q2 = falling(u, 2) / falling(N, 2);
    const double q3 = falling(u, 3) / falling(N, 3);
    const double q4 = falling(u, 4) / falling(N, 4);
    const double q5 = falling(u, 5) / falling(N, 5);
    const double q6 = falling(u, 6) / falling(N, 6);

    const double mu = u * mean;
    const double var = p2 * (q1 - q2);
    if (var <= 0.0) return 1.0;
    const double mu3 = p3 * (q1 - 3 * q2 + 2 * q3);
    const double mu4 = p4 * (q1 - 7 * q2 + 12 * q3 - 6 * q4) +
                       3 * p2 * p2 * (q2 - 2 * q3 + q4);
    const double mu5 = p5 * q1 + (10 * p3 * p2 - 15 * p5) * q2 +
                       (50 * p5 - 40 * p3 * p2) * q3 +
                       (50 * p3 * p2 - 60 * p5) * q4 +
                       (24 * p5 - 20 * p3 * p2) * q5;
    const double p2cb = p2 * p2 * p2;
    const double mu6 =
        p6 * q1 + (15 * p4 * p2 + 10 * p3 * p3 - 31 * p6) * q2 +
        (180 * p6 - 120 * p4 * p2 - 60 * p3 * p3 + 15 * p2cb) * q3 +
        (285 * p4 * p2 + 130 * p3 * p3 - 45 * p2cb - 390 * p6) * q4 +
        (360 * p6 + 45 * p2cb - 270 * p4 * p2 - 120 * p3 * p3) * q5 +
        (90 * p4 * p2 + 40 * p3 * p3 - 15 * p2cb - 120 * p6) * q6;

    const double sigma = std::sqrt(var);
    const double k4 = mu4 - 3 * var * var;
    const double k5 = mu5 - 10 * mu3 * var;
    const double k6 = mu6 - 15 * mu4 * var - 10 * mu3 * mu3 +
                      30 * var * var * var;
    const double l3 = mu3 / (var * sigma);
    const double l4 = k4 / (var * var);
    const double l5 = k5 / (var * var * sigma);
    const double l6 = k6 / (var * var * var);

    // Rank sums live on an integer lattice, or a half-integer one under
    // midrank ties.
    bool integral = true;
    for (double r : pooled_ranks)
        if (r != std::floor(r)) integral = false;
    const double step = integral ? 1.0 : 0.5;

    // Continuity-corrected Edgeworth expansion through the 6th cumulant.
    auto edgeworth_cdf = [&](double x) {
        const double z = (x - mu) / sigma;
        const double z2 = z * z;
        const double z3 = z2 * z, z4 = z3 * z, z5 = z4 * z, z6 = z5 * z,
                     z7 = z6 * z, z8 = z7 * z;
        const double he2 = z2 - 1;
        const double he3 = z3 - 3 * z;
        const double he4 = z4 - 6 * z2 + 3;
        const double he5 = z5 - 10 * z3 + 15 * z;
        const double he6 = z6 - 15 * z4 + 45 * z2 - 15;
        const double he7 = z7 - 21 * z5 + 105 * z3 - 105 * z;
        const double he8 = z8 - 28 * z6 + 210 * z4 - 420 * z2 + 105;
        const double correction =
            l3 / 6 * he2 + (l4 / 24 * he3 + l3 * l3 / 72 * he5) +
            (l5 / 120 * he4 + l3 * l4 / 144 * he6 +
             l3 * l3 * l3 / 1296 * he8) +
            (l6 / 720 * he5 + l4 * l4 / 1152 * he7);
        return std::clamp(normal_cdf(z) - normal_pdf(z) * correction, 0.0, 1.0);
    };

    const double p_low = edgeworth_cdf(w + 0.5 * step);
    const double p_high = 1.0 - edgeworth_cdf(w - 0.5 * step);
    return two_sided(p_low, p_high);
}

}  // namespace detail

StatOutcome wilcoxon_rank_sum(const std::vector<double>& a,
                              const std::vector<double>& b, double alpha) {
    if (a.size() < 3 || b.size() < 3)
        throw InvalidInput("wilcoxon_rank_sum: need at least 3 values per side");

    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto [lo, hi] = std::minmax_element(pooled.begin(), pooled.end());
    if (*lo == *hi) return {1.0, Significance::Approx};

    const auto ranks = rank_ascending(pooled);
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) w += ranks[i];
    const double mu =
        static_cast<double>(a.size()) * (pooled.size() + 1) / 2.0;

    const double p = pooled.size() <= 16
                         ? detail::wilcoxon_exact_p(ranks, a.size(), w)
                         : detail::wilcoxon_approx_p(ranks, a.size(), w);

    StatOutcome out{p, Significance::Approx};
    if (p < alpha && w != mu)
        out.symbol = w < mu ? Significance::Plus : Significance::Minus;
    return out;
}

}  // namespace laea
