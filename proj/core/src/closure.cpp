#include "fuzzyrel/closure.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

namespace {

void require_same_shape(const FuzzyRelation& r, const FuzzyRelation& s) {
    if (r.size() != s.size()) {
        throw data_error("size mismatch: " + std::to_string(r.size()) + " vs " +
                         std::to_string(s.size()));
    }
    if (r.labels != s.labels) {
        throw data_error("label mismatch between relations");
    }
}

void require_reflexive_symmetric(const FuzzyRelation& r) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (r.at(i, i) != 1.0) {
            throw data_error("relation must be reflexive (diagonal entries = 1)");
        }
        for (std::size_t k = i + 1; k < n; ++k) {
            if (r.at(i, k) != r.at(k, i)) {
                throw data_error("relation must be symmetric");
            }
        }
    }
}

bool approx_equal(const FuzzyRelation& a, const FuzzyRelation& b, double tol) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (std::fabs(a.values[i] - b.values[i]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

FuzzyRelation max_min_compose(const FuzzyRelation& r, const FuzzyRelation& s) {
    require_same_shape(r, s);
    const std::size_t n = r.size();
    FuzzyRelation t;
    t.labels = r.labels;
    t.values.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            double best = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                best = std::max(best, std::min(r.at(i, j), s.at(j, k)));
            }
            t.at(i, k) = best;
        }
    }
    return t;
}

FuzzyRelation fuzzy_union(const FuzzyRelation& r, const FuzzyRelation& s) {
    require_same_shape(r, s);
    FuzzyRelation t = r;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        t.values[i] = std::max(t.values[i], s.values[i]);
    }
    return t;
}

ClosureResult transitive_closure(const FuzzyRelation& r) {
    require_reflexive_symmetric(r);
    // Max-min only ever selects existing entries, so the loop stabilises
    // exactly; the tolerance is a safety contract, not a crutch.
    constexpr double kFixpointTol = 1e-12;
    FuzzyRelation current = r;
    int iterations = 0;
    for (;;) {
        ++iterations;
        FuzzyRelation next = fuzzy_union(current, max_min_compose(current, current));
        const bool done = approx_equal(next, current, kFixpointTol);
        current = std::move(next);
        if (done) {
            break;
        }
    }
    return {std::move(current), iterations};
}

FuzzyRelation path_strength_enumerate(const FuzzyRelation& r) {
    const std::size_t n = r.size();
    if (n > 10) {
        throw config_error("oracle limit: path enumeration supports at most 10 points, got " +
                           std::to_string(n));
    }
    FuzzyRelation best;
    best.labels = r.labels;
    best.values.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        best.at(i, i) = r.at(i, i);
    }

    std::vector<bool> visited(n, false);
    // Exhaustive depth-first walk over all simple paths out of `start`,
    // carrying the weakest edge seen so far.
    auto dfs = [&](auto&& self, std::size_t start, std::size_t current, double strength) -> void {
        for (std::size_t next = 0; next < n; ++next) {
            if (visited[next]) {
                continue;
            }
            const double s = std::min(strength, r.at(current, next));
            if (s == 0.0) {
                continue;  // zero-strength paths never contribute
            }
            best.at(start, next) = std::max(best.at(start, next), s);
            visited[next] = true;
            self(self, start, next, s);
            visited[next] = false;
        }
    };
    for (std::size_t start = 0; start < n; ++start) {
        std::fill(visited.begin(), visited.end(), false);
        visited[start] = true;
        dfs(dfs, start, start, 1.0);
    }
    return best;
}

FuzzyRelation path_strength_incremental(const FuzzyRelation& r) {
    const std::size_t n = r.size();
    FuzzyRelation w = r;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                w.at(i, k) = std::max(w.at(i, k), std::min(w.at(i, j), w.at(j, k)));
            }
        }
    }
    return w;
}

}  // namespace fuzzyrel
