#pragma once

#include <array>

#include "laea/problems.hpp"
#include "laea/rng.hpp"
#include "laea/solution.hpp"

namespace laea {

/// Three trial vectors for one parent, one per strategy of the composite
/// DE pool (rand/1/bin, rand/2/bin, current-to-rand/1), each paired with a
/// randomly drawn (F, CR) setting from {(1.0,0.1), (1.0,0.9), (0.8,0.2)}.
/// Out-of-bounds coordinates are reflected back, then clipped.
/// Needs at least 6 members so rand/2 can draw 5 distinct donors.
std::array<DecisionVector, 3> code_generate_trials(std::size_t parent_index,
                                                   const Population& population,
                                                   const BenchmarkProblem& problem,
                                                   Rng& rng);

}  // namespace laea
