#include "fuzzyrel/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

namespace {

void require_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw config_error("alpha must be in [0, 1]");
    }
}

Partition blocks_from_indices(const FuzzyRelation& r,
                              const std::vector<std::vector<std::size_t>>& index_blocks) {
    Partition p;
    p.blocks.reserve(index_blocks.size());
    for (const auto& block : index_blocks) {
        std::vector<std::string> labels;
        labels.reserve(block.size());
        for (std::size_t i : block) {
            labels.push_back(r.labels[i]);
        }
        p.blocks.push_back(std::move(labels));
    }
    return p;
}

}  // namespace

Partition alpha_cut(const FuzzyRelation& rt, double alpha) {
    require_alpha(alpha);
    const std::size_t n = rt.size();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::size_t>> blocks;
    // For a transitive closure each row at or above the threshold is exactly
    // one equivalence class, so the first unassigned point claims its row.
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i]) {
            continue;
        }
        std::vector<std::size_t> block;
        for (std::size_t k = i; k < n; ++k) {
            if (!assigned[k] && rt.at(i, k) >= alpha) {
                assigned[k] = true;
                block.push_back(k);
            }
        }
        blocks.push_back(std::move(block));
    }
    return blocks_from_indices(rt, blocks);
}

Partition connected_components_oracle(const FuzzyRelation& r, double alpha) {
    require_alpha(alpha);
    const std::size_t n = r.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) {
            continue;
        }
        // Breadth-first search over edges with value >= alpha.
        std::vector<std::size_t> component;
        std::vector<std::size_t> queue{i};
        seen[i] = true;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.erase(queue.begin());
            component.push_back(v);
            for (std::size_t k = 0; k < n; ++k) {
                if (!seen[k] && r.at(v, k) >= alpha) {
                    seen[k] = true;
                    queue.push_back(k);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks_from_indices(r, components);
}

AlphaCutSchedule partition_schedule(const FuzzyRelation& rt) {
    // Distinct values of the closure, ascending; values within 1e-9 collapse
    // into one level represented by the group's smallest member so that the
    // cut keeps every near-duplicate pair together.
    constexpr double kGroupTol = 1e-9;
    std::vector<double> values = rt.values;
    std::sort(values.begin(), values.end());
    std::vector<double> levels;
    double group_max = 0.0;
    for (double v : values) {
        if (levels.empty() || v - levels.back() > kGroupTol) {
            levels.push_back(v);
        }
        group_max = v;
    }

    AlphaCutSchedule schedule;
    schedule.rows.reserve(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        ScheduleRow row;
        row.lower = k == 0 ? 0.0 : levels[k - 1];
        row.lower_open = k > 0;
        row.upper = k + 1 == levels.size() ? group_max : levels[k];
        row.partition = alpha_cut(rt, levels[k]);
        schedule.rows.push_back(std::move(row));
    }
    return schedule;
}

namespace {

std::vector<std::string> collect_leaves(const DendrogramNode& node) {
    if (node.is_leaf()) {
        return {node.label};
    }
    std::vector<std::string> leaves;
    for (const auto& child : node.children) {
        auto sub = collect_leaves(child);
        leaves.insert(leaves.end(), sub.begin(), sub.end());
    }
    return leaves;
}

}  // namespace

Dendrogram build_dendrogram(const AlphaCutSchedule& schedule) {
    if (schedule.rows.empty()) {
        throw data_error("schedule is empty");
    }
    const auto& finest = schedule.rows.back();

    // Nodes for the finest partition; blocks of near-identical points (closure
    // value 1 off the diagonal) merge at the top level.
    std::vector<DendrogramNode> nodes;
    std::unordered_map<std::string, std::size_t> node_of_label;
    for (const auto& block : finest.partition.blocks) {
        DendrogramNode node;
        if (block.size() == 1) {
            node.label = block.front();
        } else {
            node.height = finest.upper;
            for (const auto& label : block) {
                DendrogramNode leaf;
                leaf.label = label;
                node.children.push_back(std::move(leaf));
            }
        }
        for (const auto& label : block) {
            node_of_label.emplace(label, nodes.size());
        }
        nodes.push_back(std::move(node));
    }

    // Walk toward the coarse end, fusing every block that is a union of two
    // or more current nodes at the row's threshold.
    for (std::size_t r = schedule.rows.size() - 1; r-- > 0;) {
        const auto& row = schedule.rows[r];
        std::vector<DendrogramNode> merged;
        std::unordered_map<std::string, std::size_t> merged_index;
        std::vector<bool> used(nodes.size(), false);
        for (const auto& block : row.partition.blocks) {
            std::vector<std::size_t> members;
            for (const auto& label : block) {
                const auto it = node_of_label.find(label);
                if (it == node_of_label.end()) {
                    throw data_error("schedule is not a hierarchy");
                }
                if (!used[it->second]) {
                    used[it->second] = true;
                    members.push_back(it->second);
                }
            }
            DendrogramNode node;
            if (members.size() == 1) {
                node = std::move(nodes[members.front()]);
            } else {
                node.height = row.upper;
                for (std::size_t m : members) {
                    node.children.push_back(std::move(nodes[m]));
                }
            }
            // A finer block straddling two coarse blocks leaves stale label
            // entries behind; detect that by re-checking the block size.
            std::size_t covered = 0;
            for (const auto& child_leaf : collect_leaves(node)) {
                if (std::find(block.begin(), block.end(), child_leaf) == block.end()) {
                    throw data_error("schedule is not a hierarchy");
                }
                ++covered;
            }
            if (covered != block.size()) {
                throw data_error("schedule is not a hierarchy");
            }
            for (const auto& label : block) {
                merged_index[label] = merged.size();
            }
            merged.push_back(std::move(node));
        }
        if (!std::all_of(used.begin(), used.end(), [](bool u) { return u; })) {
            throw data_error("schedule is not a hierarchy");
        }
        nodes = std::move(merged);
        node_of_label = std::move(merged_index);
    }

    if (nodes.size() != 1) {
        throw data_error("schedule is not a hierarchy");
    }
    // The coarsest row is a single block with members in dataset order; keep
    // it as the label universe so cuts can be put back into canonical form.
    return Dendrogram{std::move(nodes.front()), schedule.rows.front().partition.blocks.front()};
}

Partition cut_dendrogram(const Dendrogram& tree, double alpha) {
    require_alpha(alpha);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < tree.labels.size(); ++i) {
        index.emplace(tree.labels[i], i);
    }
    // Blocks are the maximal subtrees at or above the cut height.
    std::vector<std::vector<std::size_t>> blocks;
    auto walk = [&](auto&& self, const DendrogramNode& node) -> void {
        if (node.is_leaf() || node.height >= alpha) {
            std::vector<std::size_t> block;
            for (const auto& leaf : collect_leaves(node)) {
                block.push_back(index.at(leaf));
            }
            std::sort(block.begin(), block.end());
            blocks.push_back(std::move(block));
            return;
        }
        for (const auto& child : node.children) {
            self(self, child);
        }
    };
    walk(walk, tree.root);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    Partition p;
    p.blocks.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::vector<std::string> labels;
        labels.reserve(block.size());
        for (std::size_t i : block) {
            labels.push_back(tree.labels[i]);
        }
        p.blocks.push_back(std::move(labels));
    }
    return p;
}

}  // namespace fuzzyrel
