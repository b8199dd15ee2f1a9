#pragma once

#include <string>
#include <vector>

#include "fuzzyrel/relation.hpp"

namespace fuzzyrel {

/// Disjoint label blocks covering the whole label set, in canonical order:
/// blocks sorted by their smallest member's dataset index, members sorted by
/// dataset index. Canonical form makes partitions comparable with ==.
struct Partition {
    std::vector<std::vector<std::string>> blocks;

    bool operator==(const Partition&) const = default;
};

/// One threshold interval of the schedule: alpha in (lower, upper] (or
/// [lower, upper] for the first row) yields `partition`.
struct ScheduleRow {
    double lower = 0.0;
    double upper = 1.0;
    bool lower_open = false;
    Partition partition;
};

/// The full partition hierarchy: one row per distinct value of the closure,
/// intervals tiling [0, 1], partitions refining as thresholds increase.
struct AlphaCutSchedule {
    std::vector<ScheduleRow> rows;
};

/// Merge tree. Internal nodes carry the membership level at which their
/// subtrees fuse; leaves are point labels and sit at height 1. Heights
/// strictly decrease from the leaves toward the root, and nodes may have more
/// than two children when several blocks fuse at one level.
struct DendrogramNode {
    double height = 1.0;
    std::string label;  // leaves only
    std::vector<DendrogramNode> children;

    bool is_leaf() const { return children.empty(); }
};

struct Dendrogram {
    DendrogramNode root;
    std::vector<std::string> labels;  // leaf universe in dataset order
};

/// Partition of the labels where i and k share a block iff rt[i][k] >= alpha.
/// rt must be a fuzzy equivalence relation (transitive closure output) for the
/// blocks to be well defined. alpha outside [0, 1] is an error.
Partition alpha_cut(const FuzzyRelation& rt, double alpha);

/// One row per distinct value v1 < ... < vm of rt (values within 1e-9
/// merged): [0, v1], (v1, v2], ..., (v_{m-1}, vm], each with the partition of
/// alpha_cut at the row's value.
AlphaCutSchedule partition_schedule(const FuzzyRelation& rt);

/// Builds the merge tree from a nested schedule: every coarse block that is a
/// union of two or more finer blocks becomes an internal node at the coarse
/// row's threshold. Throws data_error("schedule is not a hierarchy") when the
/// rows do not nest.
Dendrogram build_dendrogram(const AlphaCutSchedule& schedule);

/// Partition obtained by cutting the tree at height alpha: blocks are the
/// maximal subtrees whose height is >= alpha.
Partition cut_dendrogram(const Dendrogram& tree, double alpha);

/// Connected components of the graph with an edge wherever r[i][k] >= alpha.
/// Applied to the pre-closure relation this must agree with
/// alpha_cut(transitive_closure(r), alpha); used as an independent check.
Partition connected_components_oracle(const FuzzyRelation& r, double alpha);

}  // namespace fuzzyrel
