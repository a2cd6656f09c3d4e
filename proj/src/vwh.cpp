#include "laea/vwh.hpp"

#include <algorithm>
#include <cmath>

#include "laea/errors.hpp"

namespace laea {

VwhModel vwh_fit(const Matrix& coords, const BenchmarkProblem& problem,
                 int bins) {
    if (coords.size() < 2)
        throw InvalidInput("vwh_fit: need at least 2 population members");
    if (bins < 3) throw InvalidInput("vwh_fit: need at least 3 bins");

    const int dim = problem.dim;
    VwhModel model;
    model.bins = bins;
    model.lower = problem.lower;
    model.upper = problem.upper;
    model.edges.assign(dim, std::vector<double>(bins + 1));
    model.probabilities.assign(dim, std::vector<double>(bins, 0.0));

    for (int d = 0; d < dim; ++d) {
        const double lower = problem.lower[d];
        const double upper = problem.upper[d];
        const double span = upper - lower;

        double lo = coords.front()[d];
        double hi = lo;
        for (const auto& row : coords) {
            lo = std::min(lo, row[d]);
            hi = std::max(hi, row[d]);
        }
        // Degenerate dimension: widen so the interior keeps positive width.
        if (hi - lo == 0.0) {
            lo -= 1e-6 * span;
            hi += 1e-6 * span;
        }
        // Keep lower < lo < hi < upper so all edges stay strictly increasing
        // even when the population touches the box bounds.
        const double margin = 1e-9 * span;
        lo = std::clamp(lo, lower + margin, upper - 2.0 * margin);
        hi = std::clamp(hi, lo + margin, upper - margin);

        auto& edges = model.edges[d];
        edges[0] = lower;
        const int interior = bins - 2;
        for (int j = 0; j <= interior; ++j)
            edges[1 + j] = lo + (hi - lo) * j / interior;
        edges[bins - 1] = hi;
        edges[bins] = upper;

        auto& mass = model.probabilities[d];
        for (const auto& row : coords) {
            const double v = row[d];
            int bin;
            if (v < lo) {
                bin = 0;
            } else if (v >= hi) {
                // The top boundary bin is (hi, upper]; the population
                // maximum itself belongs to the last interior bin.
                bin = v > hi ? bins - 1 : bins - 2;
            } else {
                const auto it =
                    std::upper_bound(edges.begin() + 1, edges.begin() + bins, v);
                bin = static_cast<int>(it - edges.begin()) - 1;
            }
            mass[bin] += 1.0;
        }
        mass[0] += kVwhBoundaryPseudoCount;
        mass[bins - 1] += kVwhBoundaryPseudoCount;

        const double total =
            static_cast<double>(coords.size()) + 2.0 * kVwhBoundaryPseudoCount;
        for (double& m : mass) m /= total;
    }
    return model;
}

VwhModel vwh_fit(const Population& population, const BenchmarkProblem& problem,
                 int bins) {
    Matrix coords;
    coords.reserve(population.size());
    for (const auto& s : population) coords.push_back(s.x);
    return vwh_fit(coords, problem, bins);
}

Matrix vwh_sample(const VwhModel& model, int count, Rng& rng) {
    if (count < 1) throw InvalidInput("vwh_sample: count must be positive");
    const int dim = static_cast<int>(model.edges.size());
    Matrix samples(count, DecisionVector(dim));
    for (int i = 0; i < count; ++i) {
        for (int d = 0; d < dim; ++d) {
            const auto& probs = model.probabilities[d];
            const auto& edges = model.edges[d];
            const double r = rng.next_double();
            double cumulative = 0.0;
            int bin = model.bins - 1;
            for (int j = 0; j < model.bins; ++j) {
                cumulative += probs[j];
                if (r < cumulative) {
                    bin = j;
                    break;
                }
            }
            const double v =
                edges[bin] + rng.next_double() * (edges[bin + 1] - edges[bin]);
            samples[i][d] = std::clamp(v, model.lower[d], model.upper[d]);
        }
    }
    return samples;
}

}  // namespace laea
