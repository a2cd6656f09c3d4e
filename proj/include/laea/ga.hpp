#pragma once

#include "laea/problems.hpp"
#include "laea/rng.hpp"
#include "laea/solution.hpp"

namespace laea {

struct GaConfig {
    double crossover_prob = 0.9;
    double crossover_eta = 15.0;   // SBX distribution index
    double mutation_prob = -1.0;   // < 0 means 1/dim
    double mutation_eta = 20.0;    // polynomial mutation index
};

/// One generation of offspring: binary tournament selection, simulated
/// binary crossover, polynomial mutation, coordinates clipped to bounds.
/// Parents must all be evaluated. Offspring come back unevaluated.
Population ga_step(const Population& population, const BenchmarkProblem& problem,
                   const GaConfig& cfg, Rng& rng);

}  // namespace laea
