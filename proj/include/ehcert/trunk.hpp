#pragma once

#include <vector>

#include "ehcert/tree.hpp"

namespace ehcert {

/// Leaf branches of an ambient tree and the subtree spanned by their anchors.
///
/// For leaf v_i (ascending), r_i is the nearest vertex of degree >= 3 and s_i
/// its neighbour on the way back to v_i. branch_paths[i] lists v_i .. s_i.
struct TrunkData {
  std::vector<int> trunk;  // sorted vertex set of Tree_T(r_1..r_k)
  std::vector<int> leaves;
  std::vector<int> anchors;
  std::vector<int> gates;
  std::vector<std::vector<int>> branch_paths;
};

/// Throws InputError when T has fewer than 3 leaves.
TrunkData trunk(const Tree& t);

/// Leaf count of the trunk as a tree of its own (0 for a single vertex).
int trunk_leaf_count(const Tree& t, const TrunkData& data);

}  // namespace ehcert
