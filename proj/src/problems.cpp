#include "laea/problems.hpp"

#include <cmath>
#include <numbers>

#include "laea/errors.hpp"
#include "laea/rng.hpp"

namespace laea {

ProblemName problem_from_string(const std::string& name) {
    if (name == "ellipsoid") return ProblemName::Ellipsoid;
    if (name == "rosenbrock") return ProblemName::Rosenbrock;
    if (name == "ackley") return ProblemName::Ackley;
    if (name == "griewank") return ProblemName::Griewank;
    throw InvalidInput("unknown problem name: " + name);
}

std::string to_string(ProblemName name) {
    switch (name) {
        case ProblemName::Ellipsoid: return "ellipsoid";
        case ProblemName::Rosenbrock: return "rosenbrock";
        case ProblemName::Ackley: return "ackley";
        case ProblemName::Griewank: return "griewank";
    }
    throw InvalidInput("unknown problem enum value");
}

BenchmarkProblem make_problem(ProblemName name, int dim) {
    if (dim < 1) throw InvalidInput("problem dimension must be positive");
    double bound = 0.0;
    switch (name) {
        case ProblemName::Ellipsoid: bound = 5.12; break;
        case ProblemName::Rosenbrock: bound = 2.048; break;
        case ProblemName::Ackley: bound = 32.768; break;
        case ProblemName::Griewank: bound = 600.0; break;
    }
    BenchmarkProblem p;
    p.name = name;
    p.dim = dim;
    p.lower.assign(dim, -bound);
    p.upper.assign(dim, bound);
    return p;
}

BenchmarkProblem make_problem(const std::string& name, int dim) {
    return make_problem(problem_from_string(name), dim);
}

DecisionVector optimum_of(const BenchmarkProblem& problem) {
    if (problem.name == ProblemName::Rosenbrock)
        return DecisionVector(problem.dim, 1.0);
    return DecisionVector(problem.dim, 0.0);
}

double evaluate(const BenchmarkProblem& problem, const DecisionVector& x) {
    if (static_cast<int>(x.size()) != problem.dim)
        throw InvalidInput("evaluate: dimension mismatch");
    const int n = problem.dim;
    switch (problem.name) {
        case ProblemName::Ellipsoid: {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) sum += (i + 1) * x[i] * x[i];
            return sum;
        }
        case ProblemName::Rosenbrock: {
            double sum = 0.0;
            for (int i = 0; i + 1 < n; ++i) {
                const double a = x[i + 1] - x[i] * x[i];
                const double b = 1.0 - x[i];
                sum += 100.0 * a * a + b * b;
            }
            return sum;
        }
        case ProblemName::Ackley: {
            double sq = 0.0;
            double cs = 0.0;
            for (int i = 0; i < n; ++i) {
                sq += x[i] * x[i];
                cs += std::cos(2.0 * std::numbers::pi * x[i]);
            }
            return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) -
                   std::exp(cs / n) + 20.0 + std::numbers::e;
        }
        case ProblemName::Griewank: {
            double sum = 0.0;
            double prod = 1.0;
            for (int i = 0; i < n; ++i) {
                sum += x[i] * x[i];
                prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
            }
            return 1.0 + sum / 4000.0 - prod;
        }
    }
    throw InvalidInput("unknown problem enum value");
}

std::vector<DecisionVector> lhs_sample(int count, const BenchmarkProblem& problem,
                                       std::uint64_t seed) {
    if (count < 1) throw InvalidInput("lhs_sample: count must be positive");
    Rng rng(seed);
    std::vector<DecisionVector> points(count, DecisionVector(problem.dim));
    for (int d = 0; d < problem.dim; ++d) {
        const auto strata = rng.permutation(static_cast<std::size_t>(count));
        const double width = (problem.upper[d] - problem.lower[d]) / count;
        for (int i = 0; i < count; ++i) {
            const double offset = rng.next_double();  // [0,1) keeps x < upper
            points[i][d] =
                problem.lower[d] + (static_cast<double>(strata[i]) + offset) * width;
        }
    }
    return points;
}

std::vector<DecisionVector> grid_sample(int points_per_dim,
                                        const BenchmarkProblem& problem) {
    if (problem.dim != 2)
        throw InvalidInput("grid_sample: problem dimension must be 2");
    if (points_per_dim < 2)
        throw InvalidInput("grid_sample: need at least 2 points per dimension");
    const int m = points_per_dim;
    std::vector<double> axis0(m), axis1(m);
    for (int i = 0; i < m; ++i) {
        const double t = static_cast<double>(i) / (m - 1);
        axis0[i] = problem.lower[0] + t * (problem.upper[0] - problem.lower[0]);
        axis1[i] = problem.lower[1] + t * (problem.upper[1] - problem.lower[1]);
    }
    std::vector<DecisionVector> points;
    points.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) points.push_back({axis0[i], axis1[j]});
    return points;
}

}  // namespace laea
