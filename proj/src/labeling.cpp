#include "laea/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "laea/errors.hpp"

namespace laea {

std::vector<int> assign_labels_topk(const std::vector<double>& values,
                                    double ratio) {
    if (values.empty()) throw InvalidInput("assign_labels_topk: empty values");
    if (!(ratio > 0.0) || !(ratio < 1.0))
        throw InvalidInput("assign_labels_topk: ratio must be in (0,1)");
    const std::size_t n = values.size();
    const std::size_t k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n))));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return values[a] < values[b];
                     });
    std::vector<int> labels(n, 0);
    for (std::size_t i = 0; i < k; ++i) labels[order[i]] = 1;
    return labels;
}

std::vector<int> assign_labels_median(const std::vector<double>& values) {
    if (values.empty()) throw InvalidInput("assign_labels_median: empty values");
    const double m = median(values);
    std::vector<int> labels(values.size(), 0);
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < m) labels[i] = 1;
    return labels;
}

double median(std::vector<double> values) {
    if (values.empty()) throw InvalidInput("median: empty values");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace laea
