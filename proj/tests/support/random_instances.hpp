#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ehcert/cotree.hpp"
#include "ehcert/family.hpp"
#include "ehcert/graph.hpp"

namespace ehcert::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

/// Random tree on n vertices with every degree at most max_degree.
Tree random_tree(Rng& rng, int n, int max_degree);

/// Random tree with max degree 3 and exactly k >= 2 leaves on n vertices
/// (n is raised to the smallest size that can hold k leaves).
Tree random_tree_with_leaves(Rng& rng, int k, int n);

/// Connected vertex set grown from a random start, size 1..max_size.
Subtree random_subtree(Rng& rng, const Tree& t, int max_size);

/// Members get ids 0..count-1. With `parts`, a random ceil/floor split.
SubtreeFamily random_subtree_family(Rng& rng, const Tree& t, int count, int max_size, bool parts);

/// Integer or p/q endpoints inside [0, range].
IntervalFamily random_intervals(Rng& rng, int count, int range, bool parts, bool rational = false);

/// Random cotree on leaves 0..leaves-1.
Cotree random_cotree(Rng& rng, int leaves);

/// Random balanced labelling of the ids.
Partition random_partition(Rng& rng, const std::vector<Id>& ids);

Graph random_graph(Rng& rng, int n, double p);

/// Bipartite graph with sides 0..m-1 and m..m+r-1.
Graph random_bipartite(Rng& rng, int m, int r, double p);

}  // namespace ehcert::testing
