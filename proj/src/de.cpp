#include "laea/de.hpp"

#include <algorithm>

#include "laea/errors.hpp"

namespace laea {

namespace {

struct DeSetting {
    double scale;      // F
    double crossover;  // CR
};

constexpr DeSetting kSettingPool[3] = {{1.0, 0.1}, {1.0, 0.9}, {0.8, 0.2}};

/// `count` donor indices, mutually distinct and distinct from the parent.
std::vector<std::size_t> draw_donors(std::size_t parent, std::size_t pop_size,
                                     std::size_t count, Rng& rng) {
    std::vector<std::size_t> candidates;
    candidates.reserve(pop_size - 1);
    for (std::size_t i = 0; i < pop_size; ++i)
        if (i != parent) candidates.push_back(i);
    // Partial Fisher-Yates: the first `count` entries are the draw.
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.next_below(candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(count);
    return candidates;
}

void binomial_crossover(DecisionVector& trial, const DecisionVector& parent,
                        double cr, Rng& rng) {
    const std::size_t dim = trial.size();
    const std::size_t forced = rng.next_below(dim);
    for (std::size_t k = 0; k < dim; ++k)
        if (k != forced && rng.next_double() >= cr) trial[k] = parent[k];
}

void repair_reflect_clip(DecisionVector& x, const BenchmarkProblem& problem) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < problem.lower[k]) x[k] = 2.0 * problem.lower[k] - x[k];
        if (x[k] > problem.upper[k]) x[k] = 2.0 * problem.upper[k] - x[k];
        x[k] = std::clamp(x[k], problem.lower[k], problem.upper[k]);
    }
}

}  // namespace

std::array<DecisionVector, 3> code_generate_trials(std::size_t parent_index,
                                                   const Population& population,
                                                   const BenchmarkProblem& problem,
                                                   Rng& rng) {
    if (population.size() < 6)
        throw InvalidInput(
            "code_generate_trials: need at least 6 members for rand/2 donors");
    if (parent_index >= population.size())
        throw InvalidInput("code_generate_trials: parent index out of range");

    const DecisionVector& parent = population[parent_index].x;
    const std::size_t dim = parent.size();
    std::array<DecisionVector, 3> trials;

    auto coords = [&](std::size_t i) -> const DecisionVector& {
        return population[i].x;
    };

    // rand/1/bin
    {
        const DeSetting s = kSettingPool[rng.next_below(3)];
        const auto r = draw_donors(parent_index, population.size(), 3, rng);
        DecisionVector v(dim);
        for (std::size_t k = 0; k < dim; ++k)
            v[k] = coords(r[0])[k] +
                   s.scale * (coords(r[1])[k] - coords(r[2])[k]);
        binomial_crossover(v, parent, s.crossover, rng);
        repair_reflect_clip(v, problem);
        trials[0] = std::move(v);
    }
    // rand/2/bin
    {
        const DeSetting s = kSettingPool[rng.next_below(3)];
        const auto r = draw_donors(parent_index, population.size(), 5, rng);
        DecisionVector v(dim);
        for (std::size_t k = 0; k < dim; ++k)
            v[k] = coords(r[0])[k] +
                   s.scale * (coords(r[1])[k] - coords(r[2])[k]) +
                   s.scale * (coords(r[3])[k] - coords(r[4])[k]);
        binomial_crossover(v, parent, s.crossover, rng);
        repair_reflect_clip(v, problem);
        trials[1] = std::move(v);
    }
    // current-to-rand/1 (no binomial crossover: rotation invariant)
    {
        const DeSetting s = kSettingPool[rng.next_below(3)];
        const auto r = draw_donors(parent_index, population.size(), 3, rng);
        const double blend = rng.next_double();
        DecisionVector v(dim);
        for (std::size_t k = 0; k < dim; ++k)
            v[k] = parent[k] + blend * (coords(r[0])[k] - parent[k]) +
                   s.scale * (coords(r[1])[k] - coords(r[2])[k]);
        repair_reflect_clip(v, problem);
        trials[2] = std::move(v);
    }
    return trials;
}

}  // namespace laea
