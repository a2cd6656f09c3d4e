#pragma once

#include <cstdint>
#include <string>

#include "laea/laea_run.hpp"
#include "laea/predictor.hpp"
#include "laea/problems.hpp"

namespace laea {

enum class PreselectStrategy { Random, Reg, Cla };

std::string to_string(PreselectStrategy strategy);

struct PreselectConfig {
    int population_size = 50;
    int max_evaluations = 300;  // budget, init included
    double label_ratio = 0.3;   // Cla context labeling
    std::uint64_t seed = 0;
};

/// Composite-DE loop where each parent's three trials are reduced to one
/// before any true evaluation: Random picks uniformly (and never touches
/// the predictor), Reg keeps the smallest predicted value, Cla keeps a
/// random label-1 trial (random among all three when none is labeled 1).
/// The surviving trial is evaluated and replaces its parent when better.
RunResult code_preselect_run(const BenchmarkProblem& problem,
                             Predictor* predictor, PreselectStrategy strategy,
                             const PreselectConfig& cfg,
                             const EvalHook& on_evaluate = {});

}  // namespace laea
