#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laea/problems.hpp"

namespace laea {

/// Per-column affine map onto [0,1], fitted on the training features (and
/// optionally on the training values). Query points reuse the training
/// transform and are deliberately not clamped, so they may land slightly
/// outside [0,1].
struct ScalingTransform {
    std::vector<double> feature_min;
    std::vector<double> feature_max;
    bool has_value_range = false;
    double value_min = 0.0;
    double value_max = 0.0;
    int feature_precision = 3;
    int value_precision = 5;
};

/// Round to `places` decimals, ties to even.
double round_decimals(double value, int places);

/// Fixed-point text for an already-rounded value (what the prompts print).
std::string format_decimals(double value, int places);

ScalingTransform fit_scaling(const Matrix& features,
                             const std::vector<double>* values,
                             int feature_precision = 3,
                             int value_precision = 5);

/// (z - min) / (max - min) per column, rounded to the feature precision.
/// A degenerate column (max == min) maps to 0.5.
DecisionVector apply_scaling(const ScalingTransform& transform,
                             const DecisionVector& v);

double scale_value(const ScalingTransform& transform, double value);

/// scaled * (max - min) + min. Requires a fitted value range.
double inverse_scale_value(const ScalingTransform& transform, double scaled);

}  // namespace laea
