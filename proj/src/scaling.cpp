#include "laea/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "laea/errors.hpp"

namespace laea {

double round_decimals(double value, int places) {
    const double scale = std::pow(10.0, places);
    // nearbyint under the default FE_TONEAREST mode rounds ties to even.
    return std::nearbyint(value * scale) / scale;
}

std::string format_decimals(double value, int places) {
    double r = round_decimals(value, places);
    if (r == 0.0) r = 0.0;  // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, r);
    return buf;
}

ScalingTransform fit_scaling(const Matrix& features,
                             const std::vector<double>* values,
                             int feature_precision, int value_precision) {
    if (features.empty()) throw InvalidInput("fit_scaling: empty feature set");
    const std::size_t dim = features.front().size();
    ScalingTransform t;
    t.feature_precision = feature_precision;
    t.value_precision = value_precision;
    t.feature_min.assign(dim, 0.0);
    t.feature_max.assign(dim, 0.0);
    for (std::size_t d = 0; d < dim; ++d) {
        double lo = features.front()[d];
        double hi = lo;
        for (const auto& row : features) {
            if (row.size() != dim)
                throw InvalidInput("fit_scaling: ragged feature matrix");
            lo = std::min(lo, row[d]);
            hi = std::max(hi, row[d]);
        }
        t.feature_min[d] = lo;
        t.feature_max[d] = hi;
    }
    if (values != nullptr) {
        if (values->empty()) throw InvalidInput("fit_scaling: empty value list");
        const auto [lo, hi] = std::minmax_element(values->begin(), values->end());
        t.value_min = *lo;
        t.value_max = *hi;
        t.has_value_range = true;
    }
    return t;
}

namespace {

double scale_one(double v, double lo, double hi, int places) {
    const double span = hi - lo;
    const double scaled = span == 0.0 ? 0.5 : (v - lo) / span;
    return round_decimals(scaled, places);
}

}  // namespace

DecisionVector apply_scaling(const ScalingTransform& t, const DecisionVector& v) {
    if (v.size() != t.feature_min.size())
        throw InvalidInput("apply_scaling: dimension mismatch");
    DecisionVector out(v.size());
    for (std::size_t d = 0; d < v.size(); ++d)
        out[d] = scale_one(v[d], t.feature_min[d], t.feature_max[d],
                           t.feature_precision);
    return out;
}

double scale_value(const ScalingTransform& t, double value) {
    if (!t.has_value_range)
        throw InvalidState("scale_value: transform has no value range");
    return scale_one(value, t.value_min, t.value_max, t.value_precision);
}

double inverse_scale_value(const ScalingTransform& t, double scaled) {
    if (!t.has_value_range)
        throw InvalidState("inverse_scale_value: transform has no value range");
    return scaled * (t.value_max - t.value_min) + t.value_min;
}

}  // namespace laea
