#include "fuzzyrel/relation.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

FuzzyRelation FuzzyRelation::from_rows(std::vector<std::string> labels,
                                       const std::vector<std::vector<double>>& rows) {
    const std::size_t n = labels.size();
    if (rows.size() != n) {
        throw data_error("matrix has " + std::to_string(rows.size()) + " rows for " +
                         std::to_string(n) + " labels");
    }
    FuzzyRelation rel;
    rel.labels = std::move(labels);
    rel.values.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw data_error("matrix is not square");
        }
        rel.values.insert(rel.values.end(), row.begin(), row.end());
    }
    return rel;
}

double minkowski_distance(std::span<const double> a, std::span<const double> b, double q) {
    if (a.size() != b.size()) {
        throw data_error("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    }
    if (!(q > 0.0)) {
        throw config_error("q must be > 0");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        sum += std::pow(std::fabs(a[j] - b[j]), q);
    }
    return std::pow(sum, 1.0 / q);
}

namespace {

// Upper-triangular pairwise distances, row-major full matrix for convenience.
std::vector<double> pairwise_distances(const Dataset& data, double q) {
    const std::size_t n = data.size();
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const double d = minkowski_distance(data.points[i], data.points[k], q);
            dist[i * n + k] = d;
            dist[k * n + i] = d;
        }
    }
    return dist;
}

double max_distance(const Dataset& data, double q, const std::vector<double>& dist) {
    if (data.size() < 2) {
        throw data_error("relation needs at least 2 points, got " + std::to_string(data.size()));
    }
    const double d_max = *std::max_element(dist.begin(), dist.end());
    if (d_max == 0.0) {
        throw data_error("degenerate dataset: zero diameter");
    }
    (void)q;
    return d_max;
}

}  // namespace

double compute_delta(const Dataset& data, double q) {
    validate_dataset(data);
    const auto dist = pairwise_distances(data, q);
    return 1.0 / max_distance(data, q, dist);
}

RelationResult compatibility_relation(const Dataset& data, double q) {
    validate_dataset(data);
    const std::size_t n = data.size();
    const auto dist = pairwise_distances(data, q);
    const double d_max = max_distance(data, q, dist);

    FuzzyRelation rel;
    rel.labels = data.labels;
    rel.values.assign(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            // Dividing by d_max (rather than multiplying by its reciprocal)
            // makes the diameter pair land on exactly 0.
            double v = 1.0 - dist[i * n + k] / d_max;
            v = std::clamp(v, 0.0, 1.0);
            rel.at(i, k) = v;
            rel.at(k, i) = v;
        }
    }
    return {std::move(rel), DistanceParams{q, 1.0 / d_max}};
}

}  // namespace fuzzyrel
