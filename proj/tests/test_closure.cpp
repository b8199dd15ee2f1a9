#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "fuzzyrel/closure.hpp"
#include "fuzzyrel/error.hpp"
#include "fuzzyrel/relation.hpp"
#include "test_support.hpp"

using namespace fuzzyrel;
using namespace testsupport;

namespace {

// Test-local composition check: plain triple loop over the raw rows.
double compose_entry(const FuzzyRelation& r, const FuzzyRelation& s, std::size_t i,
                     std::size_t k) {
    double best = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        best = std::max(best, std::min(r.at(i, j), s.at(j, k)));
    }
    return best;
}

FuzzyRelation crisp_two_blocks() {
    // Equivalence relation with blocks {x1,x2} and {x3}.
    return FuzzyRelation::from_rows(default_labels(3),
                                    {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}

FuzzyRelation identity_relation(std::size_t n) {
    FuzzyRelation m;
    m.labels = default_labels(n);
    m.values.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m.values[i * n + i] = 1.0;
    }
    return m;
}

}  // namespace

TEST_CASE("composing with the crisp equality relation returns the operand") {
    const auto rel = reference_relation_q2();
    auto identity = identity_relation(6);
    CHECK(max_min_compose(identity, rel) == rel);
    CHECK(max_min_compose(rel, identity) == rel);
}

TEST_CASE("a transitive matrix is a fixed point of composition") {
    const auto closure = reference_closure_q2();
    CHECK(max_min_compose(closure, closure) == closure);
}

TEST_CASE("composition routes around weak direct links") {
    const auto rel = reference_relation_q2();
    const auto composed = max_min_compose(rel, rel);
    // x1 to x4 through x2 or x3 beats the direct 0.28 entry.
    CHECK(composed.at(0, 3) == doctest::Approx(0.552786404500042).epsilon(1e-12));
    CHECK(composed.at(0, 3) == compose_entry(rel, rel, 0, 3));
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t k = 0; k < 6; ++k) {
            CHECK(composed.at(i, k) == compose_entry(rel, rel, i, k));
        }
    }
}

TEST_CASE("union is idempotent and dominated by a reflexive operand") {
    const auto rel = reference_relation_q2();
    CHECK(fuzzy_union(rel, rel) == rel);
    CHECK(fuzzy_union(rel, identity_relation(6)) == rel);
}

TEST_CASE("the first closure iterate is the union of the relation and its square") {
    const auto rel = reference_relation_q2();
    const auto first = fuzzy_union(rel, max_min_compose(rel, rel));
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t k = 0; k < 6; ++k) {
            CHECK(first.at(i, k) == std::max(rel.at(i, k), compose_entry(rel, rel, i, k)));
        }
    }
}

TEST_CASE("size and label mismatches are errors") {
    const auto rel = reference_relation_q2();
    CHECK_THROWS_AS(max_min_compose(rel, identity_relation(3)), data_error);
    CHECK_THROWS_AS(fuzzy_union(rel, identity_relation(3)), data_error);
    auto relabeled = rel;
    relabeled.labels[0] = "y1";
    CHECK_THROWS_AS(max_min_compose(rel, relabeled), data_error);
}

TEST_CASE("closure of the q=2 reference relation") {
    const auto [closure, iterations] = transitive_closure(reference_relation_q2());
    const auto expected = reference_closure_q2();
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t k = 0; k < 6; ++k) {
            CHECK(closure.at(i, k) == doctest::Approx(expected.at(i, k)).epsilon(1e-15));
            const double published = i == k ? 1.0 : (((i == 1 && k == 2) || (i == 2 && k == 1))
                                                         ? 0.8
                                                         : 0.72);
            CHECK(std::fabs(closure.at(i, k) - published) <= 0.005);
        }
    }
    CHECK(iterations <= 4);  // ceil(log2(6)) + 1
}

TEST_CASE("closure of the q=1 reference relation") {
    const auto [closure, iterations] = transitive_closure(reference_relation_q1());
    const auto expected = reference_closure_q1();
    for (std::size_t i = 0; i < 36; ++i) {
        CHECK(closure.values[i] == doctest::Approx(expected.values[i]).epsilon(1e-15));
    }
    CHECK(iterations <= 4);
}

TEST_CASE("a crisp equivalence relation is already closed") {
    const auto rel = crisp_two_blocks();
    const auto [closure, iterations] = transitive_closure(rel);
    CHECK(closure == rel);
    CHECK(iterations == 1);
}

TEST_CASE("closure requires a reflexive symmetric input") {
    auto not_reflexive = identity_relation(3);
    not_reflexive.at(1, 1) = 0.5;
    CHECK_THROWS_AS(transitive_closure(not_reflexive), data_error);
    auto not_symmetric = identity_relation(3);
    not_symmetric.at(0, 1) = 0.5;
    CHECK_THROWS_AS(transitive_closure(not_symmetric), data_error);
}

TEST_CASE("closure properties on random relations") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rel = random_reflexive_symmetric(rng, size(rng));
        const auto [closure, iterations] = transitive_closure(rel);
        const std::size_t n = closure.size();

        const std::size_t log2n = static_cast<std::size_t>(std::ceil(std::log2(double(n))));
        CHECK(static_cast<std::size_t>(iterations) <= log2n + 1);

        std::set<double> input_values(rel.values.begin(), rel.values.end());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(closure.at(i, i) == 1.0);
            for (std::size_t k = 0; k < n; ++k) {
                CHECK(closure.at(i, k) == closure.at(k, i));
                CHECK(closure.at(i, k) >= rel.at(i, k));
                CHECK(input_values.count(closure.at(i, k)) == 1);
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(closure.at(i, k) >=
                          std::min(closure.at(i, j), closure.at(j, k)) - 1e-12);
                }
            }
        }

        const auto again = transitive_closure(closure);
        CHECK(again.relation == closure);
        CHECK(again.iterations == 1);
    }
}

TEST_CASE("closure equals both path-strength formulations") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<std::size_t> size(2, 7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rel = random_reflexive_symmetric(rng, size(rng));
        const auto closure = transitive_closure(rel).relation;
        const auto enumerated = path_strength_enumerate(rel);
        const auto incremental = path_strength_incremental(rel);
        for (std::size_t i = 0; i < closure.values.size(); ++i) {
            CHECK(std::fabs(closure.values[i] - enumerated.values[i]) <= 1e-9);
            CHECK(closure.values[i] == incremental.values[i]);
        }
    }
}

TEST_CASE("path enumeration on the reference matrices") {
    CHECK(path_strength_enumerate(reference_relation_q2()) == reference_closure_q2());
    CHECK(path_strength_enumerate(reference_relation_q1()) == reference_closure_q1());
}

TEST_CASE("a 2x2 relation is its own path-strength matrix") {
    const auto rel = FuzzyRelation::from_rows(default_labels(2), {{1, 0.4}, {0.4, 1}});
    CHECK(path_strength_enumerate(rel) == rel);
}

TEST_CASE("the enumerating oracle refuses more than 10 points") {
    std::mt19937 rng(47);
    const auto rel = random_reflexive_symmetric(rng, 11);
    CHECK_THROWS_WITH_AS(path_strength_enumerate(rel),
                         "oracle limit: path enumeration supports at most 10 points, got 11",
                         config_error);
    CHECK_NOTHROW(path_strength_incremental(rel));
}
