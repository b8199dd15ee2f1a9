#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzyrel/dataset.hpp"

namespace fuzzyrel {

/// Square fuzzy relation over a labelled point set, entries in [0, 1].
/// Compatibility relations and their closures are reflexive and symmetric.
struct FuzzyRelation {
    std::vector<std::string> labels;
    std::vector<double> values;  // row-major, size() x size()

    std::size_t size() const { return labels.size(); }
    double at(std::size_t i, std::size_t k) const { return values[i * size() + k]; }
    double& at(std::size_t i, std::size_t k) { return values[i * size() + k]; }

    /// Builds a relation from explicit rows; throws data_error if the rows do
    /// not form a square matrix matching the label count.
    static FuzzyRelation from_rows(std::vector<std::string> labels,
                                   const std::vector<std::vector<double>>& rows);

    bool operator==(const FuzzyRelation&) const = default;
};

/// Distance exponent q and the normaliser delta = 1 / (largest pairwise
/// distance in the dataset).
struct DistanceParams {
    double q = 2.0;
    double delta = 0.0;
};

struct RelationResult {
    FuzzyRelation relation;
    DistanceParams params;
};

/// (sum_j |a_j - b_j|^q)^(1/q). Requires q > 0 and equal dimensions.
double minkowski_distance(std::span<const double> a, std::span<const double> b, double q);

/// 1 / max pairwise Minkowski-q distance. Throws data_error when the dataset
/// has fewer than two points or zero diameter.
double compute_delta(const Dataset& data, double q);

/// Membership matrix R(x_i, x_k) = 1 - delta * d_q(x_i, x_k), clamped to
/// [0, 1]. The diagonal is exactly 1 and every pair at maximum distance is
/// exactly 0.
RelationResult compatibility_relation(const Dataset& data, double q);

}  // namespace fuzzyrel
