#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laea/problems.hpp"

namespace laea {

enum class SurrogateTask { Reg, Cla };

std::string to_string(SurrogateTask task);

/// Already-scaled training context handed to the prompt renderer.
/// `values` is used for Reg, `labels` (0/1) for Cla.
struct ScaledDataset {
    Matrix features;
    std::vector<double> values;
    std::vector<int> labels;
};

struct PromptBundle {
    SurrogateTask task;
    std::string text;
    DecisionVector candidate;
};

/// One prediction, in the units the caller asked for: Reg predictions are
/// inverse-scaled back to objective units, Cla predictions are 0/1.
struct Prediction {
    std::optional<double> value;
    std::optional<int> label;

    static Prediction of_value(double v) { return {v, std::nullopt}; }
    static Prediction of_label(int l) { return {std::nullopt, l}; }
};

/// "<0.338, 0.531, 0.363>" with fixed `precision` decimals.
std::string render_feature_list(const DecisionVector& v, int precision);

/// Renders the full task prompt: task description, Procedure, Historical
/// Examples (one line per training row, given order), New Evaluation, Note.
/// Byte-deterministic for identical inputs.
PromptBundle render_prompt(SurrogateTask task, const ScaledDataset& data,
                           const DecisionVector& candidate,
                           int feature_precision = 3, int value_precision = 5);

/// Extracts the first JSON object from a model reply. Reg reads "Value"
/// (number or numeric string); Cla reads "Class" and maps better->1,
/// worse->0 case-insensitively. Tolerates surrounding prose and
/// single-quoted keys. Throws MalformedResponse otherwise. The Reg result
/// is still in scaled units.
Prediction parse_llm_response(const std::string& text, SurrogateTask task);

}  // namespace laea
