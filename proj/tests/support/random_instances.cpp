#include "random_instances.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ehcert::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Tree random_tree(Rng& rng, int n, int max_degree) {
  std::vector<Edge> edges;
  std::vector<int> degree(n, 0);
  std::vector<int> open{0};
  for (int v = 1; v < n; ++v) {
    int idx = uniform(rng, 0, static_cast<int>(open.size()) - 1);
    int u = open[idx];
    edges.emplace_back(u, v);
    if (++degree[u] >= max_degree) {
      open[idx] = open.back();
      open.pop_back();
    }
    ++degree[v];
    if (degree[v] < max_degree) open.push_back(v);
  }
  return Tree(n, edges);
}

Tree random_tree_with_leaves(Rng& rng, int k, int n) {
  // Start from one edge; each new leaf hangs off a fresh subdivision vertex.
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  for (int leaf = 2; leaf < k; ++leaf) {
    auto [u, v] = edges[uniform(rng, 0, static_cast<int>(edges.size()) - 1)];
    edges.erase(std::find(edges.begin(), edges.end(), Edge{u, v}));
    int mid = next++, tip = next++;
    edges.emplace_back(u, mid);
    edges.emplace_back(mid, v);
    edges.emplace_back(mid, tip);
  }
  while (next < n) {
    std::size_t pick = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(edges.size()) - 1));
    auto [u, v] = edges[pick];
    edges[pick] = {u, next};
    edges.emplace_back(next, v);
    ++next;
  }
  return Tree(next, edges);
}

Subtree random_subtree(Rng& rng, const Tree& t, int max_size) {
  int target = uniform(rng, 1, std::max(1, std::min(max_size, t.size())));
  std::set<int> in{uniform(rng, 0, t.size() - 1)};
  std::vector<int> frontier;
  auto grow = [&](int v) {
    for (int w : t.neighbors(v)) {
      if (!in.count(w)) frontier.push_back(w);
    }
  };
  grow(*in.begin());
  while (static_cast<int>(in.size()) < target && !frontier.empty()) {
    std::size_t idx = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(frontier.size()) - 1));
    int v = frontier[idx];
    frontier[idx] = frontier.back();
    frontier.pop_back();
    if (!in.insert(v).second) continue;
    grow(v);
  }
  return Subtree(std::vector<int>(in.begin(), in.end()));
}

namespace {

std::vector<int> balanced_labels(Rng& rng, int count) {
  std::vector<int> labels(count, 2);
  for (int i = 0; i < (count + 1) / 2; ++i) labels[i] = 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

}  // namespace

SubtreeFamily random_subtree_family(Rng& rng, const Tree& t, int count, int max_size, bool parts) {
  std::vector<int> labels = parts ? balanced_labels(rng, count) : std::vector<int>{};
  std::vector<SubtreeMember> members;
  for (int i = 0; i < count; ++i) {
    SubtreeMember m{i, std::nullopt, random_subtree(rng, t, max_size)};
    if (parts) m.part = labels[i];
    members.push_back(std::move(m));
  }
  return SubtreeFamily(t, std::move(members));
}

IntervalFamily random_intervals(Rng& rng, int count, int range, bool parts, bool rational) {
  std::vector<int> labels = parts ? balanced_labels(rng, count) : std::vector<int>{};
  std::vector<IntervalMember> members;
  const int den = rational ? 7 : 1;
  for (int i = 0; i < count; ++i) {
    int x = uniform(rng, 0, range * den), y = uniform(rng, 0, range * den);
    if (x > y) std::swap(x, y);
    IntervalMember m{i, std::nullopt, Rational(x, den), Rational(y, den)};
    if (parts) m.part = labels[i];
    members.push_back(m);
  }
  return IntervalFamily(std::move(members));
}

namespace {

Cotree build_cotree(Rng& rng, std::vector<Id> leaves) {
  if (leaves.size() == 1) return Cotree::leaf(leaves.front());
  int parts = uniform(rng, 2, static_cast<int>(std::min<std::size_t>(4, leaves.size())));
  std::shuffle(leaves.begin(), leaves.end(), rng);
  // Random composition of leaves.size() into `parts` positive pieces.
  std::vector<int> cuts;
  std::vector<int> all(leaves.size() - 1);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
  std::shuffle(all.begin(), all.end(), rng);
  cuts.assign(all.begin(), all.begin() + (parts - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(static_cast<int>(leaves.size()));
  std::vector<Cotree> children;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    std::vector<Id> piece(leaves.begin() + cuts[i], leaves.begin() + cuts[i + 1]);
    Cotree child = build_cotree(rng, std::move(piece));
    children.push_back(uniform(rng, 0, 1) ? Cotree::complement(std::move(child)) : std::move(child));
  }
  return Cotree::disjoint_union(std::move(children));
}

}  // namespace

Cotree random_cotree(Rng& rng, int leaves) {
  std::vector<Id> ids(leaves);
  for (int i = 0; i < leaves; ++i) ids[i] = i;
  Cotree ct = build_cotree(rng, std::move(ids));
  return uniform(rng, 0, 1) ? Cotree::complement(std::move(ct)) : ct;
}

Partition random_partition(Rng& rng, const std::vector<Id>& ids) {
  std::vector<int> labels = balanced_labels(rng, static_cast<int>(ids.size()));
  std::map<Id, int> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = labels[i];
  return Partition(std::move(out));
}

Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_bipartite(Rng& rng, int m, int r, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int x = 0; x < r; ++x) {
      if (coin(rng)) edges.emplace_back(i, m + x);
    }
  }
  return Graph(m + r, edges);
}

}  // namespace ehcert::testing
