#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fuzzyrel {

/// An ordered list of labelled points, all of the same dimension.
struct Dataset {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
    std::size_t dimension() const { return points.empty() ? 0 : points.front().size(); }
};

/// Labels "x1".."xn".
std::vector<std::string> default_labels(std::size_t n);

/// Throws data_error unless labels and points agree in count, every point has
/// the same nonzero dimension and every coordinate is finite.
void validate_dataset(const Dataset& data);

}  // namespace fuzzyrel
