#include "naive_oracle.hpp"

#include <algorithm>

namespace ehcert::testing {

std::size_t naive_max_side(const Graph& g, bool empty, const std::vector<int>* part) {
  const int n = g.size();
  std::vector<int> a, b;
  std::size_t best = 0;
  auto related = [&](int u, int v) { return g.has_edge(u, v) != empty; };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      best = std::max(best, std::min(a.size(), b.size()));
      return;
    }
    self(self, v + 1);
    if ((!part || (*part)[v] == 1) && std::all_of(b.begin(), b.end(), [&](int w) { return related(v, w); })) {
      a.push_back(v);
      self(self, v + 1);
      a.pop_back();
    }
    if ((!part || (*part)[v] == 2) && std::all_of(a.begin(), a.end(), [&](int w) { return related(v, w); })) {
      b.push_back(v);
      self(self, v + 1);
      b.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

std::size_t naive_biclique_size(const Graph& g, const std::vector<int>* part) {
  return 2 * std::max(naive_max_side(g, false, part), naive_max_side(g, true, part));
}

}  // namespace ehcert::testing
