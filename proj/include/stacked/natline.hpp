#pragma once

#include "stacked/complex.hpp"

#include <vector>

namespace stacked {

// Partition of the integer prefix [1..n], blocks ascending, ordered by first
// element.
struct PrefixPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const PrefixPartition&, const PrefixPartition&) = default;
};

// Validates and canonicalizes. Throws Error{NotAPartition} unless the blocks
// are non-empty, disjoint and cover [1..n].
PrefixPartition make_prefix_partition(int n, std::vector<std::vector<int>> blocks);

// Largest s such that every block has consecutive gaps >= s; n when every
// block is a singleton.
int prefix_scatter(const PrefixPartition& P);

// Line graph with n edges: vertices "1".."n+1", edge i = {i, i+1}. Edge i is
// facet id i-1 and vertex i is vertex id i-1.
SimplicialComplex line_graph(int n);

// Edge partition of L_n -> vertex partition of L_n on [1..n+1]: one more
// block, scatter one higher.
PrefixPartition refine_once(const PrefixPartition& P);

// t-fold refine_once.
PrefixPartition refine_iter(const PrefixPartition& P, int steps);

// Blocks intersected with [1..m], empties dropped.
PrefixPartition restrict_prefix(const PrefixPartition& P, int m);

// For P over [1..n+1]: refine(restrict(P, n)) equals restrict(refine(P), n+1).
// Throws Error{OutOfRange} when P covers fewer than two integers.
bool check_colimit_compatibility(const PrefixPartition& P);

} // namespace stacked
