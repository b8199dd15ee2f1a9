#include "fuzzyrel/dataset.hpp"

#include <cmath>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
    }
    return labels;
}

void validate_dataset(const Dataset& data) {
    if (data.labels.size() != data.points.size()) {
        throw data_error("dataset has " + std::to_string(data.labels.size()) + " labels for " +
                         std::to_string(data.points.size()) + " points");
    }
    if (data.points.empty()) {
        throw data_error("dataset is empty");
    }
    const std::size_t dim = data.points.front().size();
    if (dim == 0) {
        throw data_error("dataset points have zero dimension");
    }
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        if (data.points[i].size() != dim) {
            throw data_error("point " + data.labels[i] + " has dimension " +
                             std::to_string(data.points[i].size()) + ", expected " +
                             std::to_string(dim));
        }
        for (double c : data.points[i]) {
            if (!std::isfinite(c)) {
                throw data_error("point " + data.labels[i] + " has a non-finite coordinate");
            }
        }
    }
}

}  // namespace fuzzyrel
