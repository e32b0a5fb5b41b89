#pragma once

#include <cstddef>
#include <vector>

#include "ehcert/graph.hpp"

namespace ehcert::testing {

/// Largest t over every pair of disjoint vertex sets (A, B) with |A| = |B| = t
/// that are complete (or, with `empty`, anticomplete) to each other. With
/// `part`, A must lie in part 1 and B in part 2. Plain 3^n enumeration.
std::size_t naive_max_side(const Graph& g, bool empty, const std::vector<int>* part = nullptr);

/// 2 * max over both kinds.
std::size_t naive_biclique_size(const Graph& g, const std::vector<int>* part = nullptr);

}  // namespace ehcert::testing
