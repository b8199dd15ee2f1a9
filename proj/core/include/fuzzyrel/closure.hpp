#pragma once

#include "fuzzyrel/relation.hpp"

namespace fuzzyrel {

/// Max-min composition: T[i][k] = max_j min(R[i][j], S[j][k]).
/// Requires identical size and labels.
FuzzyRelation max_min_compose(const FuzzyRelation& r, const FuzzyRelation& s);

/// Entrywise maximum. Requires identical size and labels.
FuzzyRelation fuzzy_union(const FuzzyRelation& r, const FuzzyRelation& s);

struct ClosureResult {
    FuzzyRelation relation;
    int iterations = 0;  // composition rounds performed
};

/// Max-min transitive closure of a reflexive symmetric relation, computed by
/// iterating R <- R | (R o R) to a fixpoint. Each round doubles the covered
/// path length, so at most ceil(log2(n)) + 1 rounds are performed. The result
/// is the smallest max-min transitive relation dominating the input; only
/// values already present in the input can appear in it.
ClosureResult transitive_closure(const FuzzyRelation& r);

/// Strength of the best simple path between every pair: entry (i, k) is the
/// maximum over simple paths from i to k of the minimum edge value along the
/// path. Exhaustive enumeration, limited to 10 points; equals the transitive
/// closure and serves as its independent check.
FuzzyRelation path_strength_enumerate(const FuzzyRelation& r);

/// Same quantity via incremental relaxation over allowed intermediate points
/// (Floyd-Warshall scheme with max/min in place of plus/min). Any size.
FuzzyRelation path_strength_incremental(const FuzzyRelation& r);

}  // namespace fuzzyrel
