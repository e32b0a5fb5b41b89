#include "ehcert/trunk.hpp"

#include <string>

#include "ehcert/errors.hpp"

namespace ehcert {

TrunkData trunk(const Tree& t) {
  TrunkData data;
  data.leaves = t.leaves();
  if (data.leaves.size() < 3) {
    throw InputError("trunk needs at least 3 leaves, got " + std::to_string(data.leaves.size()));
  }
  for (int leaf : data.leaves) {
    std::vector<int> path{leaf};
    int prev = -1, cur = leaf;
    while (t.degree(cur) < 3) {
      int next = -1;
      for (int nb : t.neighbors(cur)) {
        if (nb != prev) next = nb;
      }
      if (next < 0) throw InvariantViolation("leaf walk fell off the tree");
      prev = cur;
      cur = next;
      if (t.degree(cur) < 3) path.push_back(cur);
    }
    data.anchors.push_back(cur);
    data.gates.push_back(prev);
    data.branch_paths.push_back(std::move(path));
  }
  data.trunk = t.spanning_subtree(data.anchors);
  return data;
}

int trunk_leaf_count(const Tree& t, const TrunkData& data) {
  if (data.trunk.size() <= 1) return 0;
  return induced_tree(t, data.trunk).leaf_count();
}

}  // namespace ehcert
