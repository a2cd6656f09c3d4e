#pragma once

#include <vector>

namespace laea {

/// How a classification experiment turns objective values into 0/1 labels.
/// Oracle predictors replicate the same rule when labeling queries.
struct LabelingScheme {
    enum class Kind {
        /// Best max(1, floor(fraction * n)) of the training values get 1;
        /// queries are ranked against the training cutoff.
        TopFraction,
        /// 1 where the value is strictly below the training median.
        BelowMedian,
        /// The best floor(fraction * |batch|) of the query batch itself
        /// get 1 (used where ground truth is "the better half of these").
        BatchTopFraction,
    };
    Kind kind = Kind::TopFraction;
    double fraction = 0.3;

    static LabelingScheme top_fraction(double fraction) {
        return {Kind::TopFraction, fraction};
    }
    static LabelingScheme below_median() { return {Kind::BelowMedian, 0.0}; }
    static LabelingScheme batch_top_fraction(double fraction) {
        return {Kind::BatchTopFraction, fraction};
    }
};

/// Minimization labels: the max(1, floor(ratio * n)) smallest values get 1,
/// the rest 0, returned in input order. Ties at the cut go to the earlier
/// index (stable sort).
std::vector<int> assign_labels_topk(const std::vector<double>& values,
                                    double ratio);

/// 1 where value < median(values). The median of an even-length list is the
/// mean of the two central order statistics.
std::vector<int> assign_labels_median(const std::vector<double>& values);

double median(std::vector<double> values);

}  // namespace laea
