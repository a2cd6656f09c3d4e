#pragma once

#include <optional>
#include <vector>

#include "laea/problems.hpp"

namespace laea {

struct Solution {
    DecisionVector x;
    std::optional<double> objective;  // present iff evaluated
    bool evaluated = false;

    Solution() = default;
    explicit Solution(DecisionVector coords) : x(std::move(coords)) {}
    Solution(DecisionVector coords, double value)
        : x(std::move(coords)), objective(value), evaluated(true) {}
};

using Population = std::vector<Solution>;

inline double objective_of(const Solution& s) { return *s.objective; }

}  // namespace laea
