#include "laea/ga.hpp"

#include <algorithm>
#include <cmath>

#include "laea/errors.hpp"

namespace laea {

namespace {

std::size_t tournament(const Population& pop, Rng& rng) {
    const std::size_t a = rng.next_below(pop.size());
    const std::size_t b = rng.next_below(pop.size());
    return objective_of(pop[b]) < objective_of(pop[a]) ? b : a;
}

void sbx_crossover(DecisionVector& c1, DecisionVector& c2, double eta,
                   Rng& rng) {
    for (std::size_t k = 0; k < c1.size(); ++k) {
        if (rng.next_double() >= 0.5) continue;
        const double u = rng.next_double();
        const double beta =
            u <= 0.5 ? std::pow(2.0 * u, 1.0 / (eta + 1.0))
                     : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
        const double x1 = c1[k];
        const double x2 = c2[k];
        c1[k] = 0.5 * ((1.0 + beta) * x1 + (1.0 - beta) * x2);
        c2[k] = 0.5 * ((1.0 - beta) * x1 + (1.0 + beta) * x2);
    }
}

void polynomial_mutation(DecisionVector& x, const BenchmarkProblem& problem,
                         double prob, double eta, Rng& rng) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (rng.next_double() >= prob) continue;
        const double u = rng.next_double();
        const double delta =
            u < 0.5 ? std::pow(2.0 * u, 1.0 / (eta + 1.0)) - 1.0
                    : 1.0 - std::pow(2.0 * (1.0 - u), 1.0 / (eta + 1.0));
        x[k] += delta * (problem.upper[k] - problem.lower[k]);
    }
}

void clip_to_bounds(DecisionVector& x, const BenchmarkProblem& problem) {
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = std::clamp(x[k], problem.lower[k], problem.upper[k]);
}

}  // namespace

Population ga_step(const Population& population, const BenchmarkProblem& problem,
                   const GaConfig& cfg, Rng& rng) {
    if (population.empty()) throw InvalidInput("ga_step: empty population");
    for (const auto& s : population)
        if (!s.evaluated)
            throw InvalidInput("ga_step: all parents must be evaluated");

    const double mutation_prob =
        cfg.mutation_prob < 0.0 ? 1.0 / problem.dim : cfg.mutation_prob;
    const std::size_t n = population.size();

    Population offspring;
    offspring.reserve(n);
    while (offspring.size() < n) {
        DecisionVector c1 = population[tournament(population, rng)].x;
        DecisionVector c2 = population[tournament(population, rng)].x;
        if (rng.next_double() < cfg.crossover_prob)
            sbx_crossover(c1, c2, cfg.crossover_eta, rng);
        polynomial_mutation(c1, problem, mutation_prob, cfg.mutation_eta, rng);
        polynomial_mutation(c2, problem, mutation_prob, cfg.mutation_eta, rng);
        clip_to_bounds(c1, problem);
        clip_to_bounds(c2, problem);
        offspring.emplace_back(std::move(c1));
        if (offspring.size() < n) offspring.emplace_back(std::move(c2));
    }
    return offspring;
}

}  // namespace laea
