#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace laea {

using DecisionVector = std::vector<double>;
using Matrix = std::vector<DecisionVector>;

enum class ProblemName { Ellipsoid, Rosenbrock, Ackley, Griewank };

ProblemName problem_from_string(const std::string& name);
std::string to_string(ProblemName name);

/// Box-bounded benchmark objective. Bounds live on the instance, not in
/// globals, so experiments can instantiate the same function at several
/// dimensions side by side.
struct BenchmarkProblem {
    ProblemName name;
    int dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Canonical bounds: Ellipsoid +-5.12, Rosenbrock +-2.048,
/// Ackley +-32.768, Griewank +-600.
BenchmarkProblem make_problem(ProblemName name, int dim);
BenchmarkProblem make_problem(const std::string& name, int dim);

/// Global minimizer (origin, except Rosenbrock's all-ones point).
DecisionVector optimum_of(const BenchmarkProblem& problem);

/// Exact objective value. Does not clamp or repair out-of-bounds inputs;
/// bound handling is an operator-level concern.
double evaluate(const BenchmarkProblem& problem, const DecisionVector& x);

/// Latin hypercube sample: per dimension, each of the `count` equal-width
/// strata receives exactly one point. Deterministic under `seed`.
std::vector<DecisionVector> lhs_sample(int count, const BenchmarkProblem& problem,
                                       std::uint64_t seed);

/// Full 2-D grid of points_per_dim evenly spaced values per axis,
/// endpoints included. Only defined for dim == 2.
std::vector<DecisionVector> grid_sample(int points_per_dim,
                                        const BenchmarkProblem& problem);

}  // namespace laea
