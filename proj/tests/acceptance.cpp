// Acceptance suite: end-to-end checks of the published worked example and the
// property contracts, one pass/fail line per criterion.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzyrel/closure.hpp"
#include "fuzzyrel/partition.hpp"
#include "fuzzyrel/relation.hpp"
#include "fuzzyrel/text_ingest.hpp"
#include "test_support.hpp"

using namespace fuzzyrel;
using namespace testsupport;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw check_failure(message);
    }
}

std::string describe(double value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

constexpr int kMatrixTrials = 200;
constexpr int kDatasetTrials = 100;
constexpr unsigned kMatrixSeed = 20240809;
constexpr unsigned kDatasetSeed = 20240810;

std::vector<FuzzyRelation> acceptance_matrices() {
    std::mt19937 rng(kMatrixSeed);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::vector<FuzzyRelation> out;
    out.reserve(kMatrixTrials);
    for (int i = 0; i < kMatrixTrials; ++i) {
        out.push_back(random_reflexive_symmetric(rng, size(rng)));
    }
    return out;
}

std::vector<Dataset> acceptance_datasets() {
    std::mt19937 rng(kDatasetSeed);
    std::uniform_int_distribution<std::size_t> size(2, 10), dims(1, 5);
    std::vector<Dataset> out;
    out.reserve(kDatasetTrials);
    for (int i = 0; i < kDatasetTrials; ++i) {
        out.push_back(random_dataset(rng, size(rng), dims(rng)));
    }
    return out;
}

// --- criterion 1: occurrence ingest reproduces the six reference points ----

void criterion_reference_points() {
    const auto corpus = std::filesystem::path(fixtures_dir()) / "corpus";
    const auto docs = load_documents(corpus, StopWordSet::default_set());
    require(docs.size() == 4, "fixture corpus must hold 4 documents");

    const auto table = build_keyword_table(docs, 1);
    const std::vector<std::string> expected_keywords = {"cluster", "web", "document", "fuzzy",
                                                        "outlier"};
    require(table.keywords() == expected_keywords, "keyword table mismatch");

    const auto occ = occurrence_points(docs, table);
    const std::vector<std::vector<double>> expected_points = {{0, 0}, {1, 1}, {1, 2},
                                                              {2, 3}, {2, 0}, {3, 4}};
    require(occ.dataset.labels == default_labels(6), "labels must be x1..x6");
    require(occ.dataset.points.size() == 6, "expected six points");
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            require(occ.dataset.points[i][j] == expected_points[i][j],
                    "point " + occ.dataset.labels[i] + " coordinate mismatch");
        }
    }
}

// --- criterion 2: membership matrix at q=2, delta exactly 0.20 -------------

void criterion_relation_q2() {
    const auto [rel, params] = compatibility_relation(reference_dataset(), 2.0);
    require(params.delta == 0.2, "delta must equal 0.20 exactly, got " +
                                     describe(params.delta));
    for (int i = 0; i < 6; ++i) {
        for (int k = 0; k < 6; ++k) {
            require(std::fabs(rel.at(i, k) - kRefMatrixQ2[i][k]) <= 0.005,
                    "entry (" + std::to_string(i) + "," + std::to_string(k) +
                        ") off by more than 0.005");
        }
    }
}

// --- criterion 3: transitive closure at q=2 --------------------------------

void criterion_closure_q2() {
    const auto rel = compatibility_relation(reference_dataset(), 2.0).relation;
    const auto closure = transitive_closure(rel).relation;
    for (int i = 0; i < 6; ++i) {
        for (int k = 0; k < 6; ++k) {
            const double expected =
                i == k ? 1.0 : (((i == 1 && k == 2) || (i == 2 && k == 1)) ? 0.8 : 0.72);
            require(std::fabs(closure.at(i, k) - expected) <= 0.005,
                    "closure entry (" + std::to_string(i) + "," + std::to_string(k) +
                        ") expected near " + describe(expected));
        }
    }
}

// --- criterion 4: alpha-cut schedule at q=2 --------------------------------

void criterion_schedule_q2() {
    const auto rel = compatibility_relation(reference_dataset(), 2.0).relation;
    const auto schedule = partition_schedule(transitive_closure(rel).relation);
    require(schedule.rows.size() == 3, "schedule must have exactly 3 rows");
    require(schedule.rows[0].partition == all_six(), "first row must hold all six points");
    require(schedule.rows[1].partition == pair_23_rest_singletons(),
            "second row must isolate {x2,x3}");
    require(schedule.rows[2].partition == six_singletons(), "last row must be singletons");
    require(std::fabs(schedule.rows[0].upper - 0.72) <= 0.005, "first threshold near 0.72");
    require(std::fabs(schedule.rows[1].upper - 0.8) <= 0.005, "second threshold near 0.8");
}

// --- criterion 5: the same three checks at q=1 ------------------------------

void criterion_pipeline_q1() {
    const auto [rel, params] = compatibility_relation(reference_dataset(), 1.0);
    require(std::fabs(params.delta - 0.14) <= 0.003, "delta must be within 0.003 of 0.14");
    for (int i = 0; i < 6; ++i) {
        for (int k = 0; k < 6; ++k) {
            require(std::fabs(rel.at(i, k) - kRefMatrixQ1[i][k]) <= 0.005,
                    "q=1 entry (" + std::to_string(i) + "," + std::to_string(k) +
                        ") off by more than 0.005");
        }
    }

    const auto closure = transitive_closure(rel).relation;
    for (int i = 0; i < 6; ++i) {
        for (int k = 0; k < 6; ++k) {
            const double expected =
                i == k ? 1.0 : (((i == 1 && k == 2) || (i == 2 && k == 1)) ? 0.86 : 0.71);
            require(std::fabs(closure.at(i, k) - expected) <= 0.005,
                    "q=1 closure entry (" + std::to_string(i) + "," + std::to_string(k) +
                        ") expected near " + describe(expected));
        }
    }

    const auto schedule = partition_schedule(closure);
    require(schedule.rows.size() == 3, "q=1 schedule must have exactly 3 rows");
    require(schedule.rows[0].partition == all_six(), "q=1 first row must hold all six");
    require(schedule.rows[1].partition == pair_23_rest_singletons(),
            "q=1 second row must isolate {x2,x3}");
    require(schedule.rows[2].partition == six_singletons(), "q=1 last row singletons");
    require(std::fabs(schedule.rows[0].upper - 0.71) <= 0.005, "q=1 threshold near 0.71");
    require(std::fabs(schedule.rows[1].upper - 0.86) <= 0.005, "q=1 threshold near 0.86");
}

// --- criterion 6: q-robustness of the partition sequence -------------------

void criterion_q_robustness() {
    const auto data = reference_dataset();
    const auto rows_of = [&](double q) {
        const auto rel = compatibility_relation(data, q).relation;
        return partition_schedule(transitive_closure(rel).relation).rows;
    };
    const auto rows_q2 = rows_of(2.0);
    const auto rows_q1 = rows_of(1.0);
    require(rows_q2.size() == rows_q1.size(), "partition sequences differ in length");
    for (std::size_t r = 0; r < rows_q2.size(); ++r) {
        require(rows_q2[r].partition == rows_q1[r].partition,
                "partition sequences differ at level " + std::to_string(r));
    }
}

// --- criterion 7: closure axioms on random relations -----------------------

void criterion_closure_axioms() {
    for (const auto& rel : acceptance_matrices()) {
        const auto result = transitive_closure(rel);
        const auto& closure = result.relation;
        const std::size_t n = closure.size();
        for (std::size_t i = 0; i < n; ++i) {
            require(closure.at(i, i) == 1.0, "closure diagonal must be 1");
            for (std::size_t k = 0; k < n; ++k) {
                require(closure.at(i, k) == closure.at(k, i), "closure must be symmetric");
                require(closure.at(i, k) >= rel.at(i, k), "closure must dominate its input");
                for (std::size_t j = 0; j < n; ++j) {
                    require(closure.at(i, k) >=
                                std::min(closure.at(i, j), closure.at(j, k)) - 1e-12,
                            "closure must be max-min transitive");
                }
            }
        }
        const auto again = transitive_closure(closure);
        require(again.relation == closure, "closure must be idempotent");
        require(again.iterations == 1, "re-closing must converge in one round");
    }
}

// --- criterion 8: oracle equivalence ----------------------------------------

void criterion_oracle_equivalence() {
    for (const auto& rel : acceptance_matrices()) {
        if (rel.size() > 7) {
            continue;
        }
        const auto closure = transitive_closure(rel).relation;
        const auto enumerated = path_strength_enumerate(rel);
        for (std::size_t i = 0; i < closure.values.size(); ++i) {
            require(std::fabs(closure.values[i] - enumerated.values[i]) <= 1e-9,
                    "closure must match the path enumeration oracle");
        }
        const std::set<double> distinct(closure.values.begin(), closure.values.end());
        for (const double alpha : distinct) {
            require(alpha_cut(closure, alpha) == connected_components_oracle(rel, alpha),
                    "alpha cut must match the connected-components oracle at alpha = " +
                        describe(alpha));
        }
    }
}

// --- criterion 9: geometry invariances --------------------------------------

void criterion_geometry_invariances() {
    std::mt19937 rng(kDatasetSeed + 1);
    std::uniform_real_distribution<double> shift(-10.0, 10.0), scale(0.5, 4.0);
    int trial = 0;
    for (const auto& data : acceptance_datasets()) {
        const double q = trial++ % 2 == 0 ? 2.0 : 1.0;
        const auto base = compatibility_relation(data, q).relation;
        const std::size_t n = base.size();

        double min_off = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            require(base.at(i, i) == 1.0, "diagonal must be exactly 1");
            for (std::size_t k = 0; k < n; ++k) {
                if (i != k) {
                    min_off = std::min(min_off, base.at(i, k));
                }
            }
        }
        require(min_off == 0.0, "minimum off-diagonal entry must be exactly 0");

        Dataset translated = data;
        std::vector<double> offset(data.dimension());
        for (auto& c : offset) {
            c = shift(rng);
        }
        for (auto& point : translated.points) {
            for (std::size_t j = 0; j < point.size(); ++j) {
                point[j] += offset[j];
            }
        }
        const auto moved = compatibility_relation(translated, q).relation;

        Dataset scaled = data;
        const double c = scale(rng);
        for (auto& point : scaled.points) {
            for (auto& coordinate : point) {
                coordinate *= c;
            }
        }
        const auto stretched = compatibility_relation(scaled, q).relation;

        for (std::size_t i = 0; i < base.values.size(); ++i) {
            require(std::fabs(base.values[i] - moved.values[i]) <= 1e-12,
                    "relation must be invariant to translation");
            require(std::fabs(base.values[i] - stretched.values[i]) <= 1e-12,
                    "relation must be invariant to positive scaling");
        }
    }
}

// --- criterion 10: dendrogram round trip ------------------------------------

void criterion_dendrogram_round_trip() {
    int trial = 0;
    for (const auto& data : acceptance_datasets()) {
        const double q = trial++ % 2 == 0 ? 2.0 : 1.0;
        const auto rel = compatibility_relation(data, q).relation;
        const auto schedule = partition_schedule(transitive_closure(rel).relation);
        const auto tree = build_dendrogram(schedule);
        for (const auto& row : schedule.rows) {
            require(cut_dendrogram(tree, row.upper) == row.partition,
                    "cutting at the row upper endpoint must reproduce the row partition");
        }
    }
}

struct Criterion {
    const char* name;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"occurrence ingest reproduces the six reference points", criterion_reference_points},
        {"membership matrix at q=2 within 0.005, delta exactly 0.20", criterion_relation_q2},
        {"transitive closure at q=2 within 0.005 of 0.72/0.8", criterion_closure_q2},
        {"schedule at q=2: three rows with the published partitions", criterion_schedule_q2},
        {"q=1 matrix, closure and schedule match the published values",
         criterion_pipeline_q1},
        {"partition sequences identical for q=1 and q=2", criterion_q_robustness},
        {"closure axioms hold on 200 random relations", criterion_closure_axioms},
        {"closure and cuts match the independent oracles", criterion_oracle_equivalence},
        {"relation geometry invariances on 100 random datasets",
         criterion_geometry_invariances},
        {"dendrogram cuts reproduce every schedule row", criterion_dendrogram_round_trip},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i].run();
            std::printf("PASS %2zu  %s\n", i + 1, criteria[i].name);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL %2zu  %s\n         %s\n", i + 1, criteria[i].name, e.what());
        }
    }
    if (failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    }
    return failures;
}
