#pragma once

#include "laea/problems.hpp"
#include "laea/rng.hpp"
#include "laea/solution.hpp"

namespace laea {

/// Per-dimension variable-width histogram: the interior bins split the
/// population's range evenly, the two boundary bins stretch to the box
/// bounds and carry a small pseudo-count so the sampler never goes fully
/// blind outside the current population.
struct VwhModel {
    int bins = 0;                    // M
    Matrix edges;                    // dim rows of M+1 strictly increasing edges
    Matrix probabilities;            // dim rows of M nonnegative, sum 1
    std::vector<double> lower;       // box bounds (== edges front/back)
    std::vector<double> upper;
};

inline constexpr double kVwhBoundaryPseudoCount = 0.1;

VwhModel vwh_fit(const Matrix& coords, const BenchmarkProblem& problem,
                 int bins = 15);
VwhModel vwh_fit(const Population& population, const BenchmarkProblem& problem,
                 int bins = 15);

/// Per dimension independently: pick a bin by probability, then uniform
/// within it. All samples stay inside the box bounds.
Matrix vwh_sample(const VwhModel& model, int count, Rng& rng);

}  // namespace laea
