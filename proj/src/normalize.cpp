#include "ehcert/normalize.hpp"

#include <algorithm>
#include <tuple>

#include "ehcert/errors.hpp"

namespace ehcert {
namespace {

/// Mutable working copy of an ambient tree plus member vertex sets.
struct Workspace {
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> sets;  // sorted

  explicit Workspace(const SubtreeFamily& fam) : adj(fam.ambient().size()) {
    for (int v = 0; v < fam.ambient().size(); ++v) {
      auto nb = fam.ambient().neighbors(v);
      adj[v].assign(nb.begin(), nb.end());
    }
    for (const auto& m : fam.members()) {
      auto vs = m.subtree.vertices();
      sets.emplace_back(vs.begin(), vs.end());
    }
  }

  int add_vertex() {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
  }

  void link(int u, int v) {
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
  }

  void unlink(int u, int v) {
    adj[u].erase(std::lower_bound(adj[u].begin(), adj[u].end(), v));
    adj[v].erase(std::lower_bound(adj[v].begin(), adj[v].end(), u));
  }

  static bool has(const std::vector<int>& set, int v) { return std::binary_search(set.begin(), set.end(), v); }

  static void insert(std::vector<int>& set, int v) {
    auto it = std::lower_bound(set.begin(), set.end(), v);
    if (it == set.end() || *it != v) set.insert(it, v);
  }

  /// Replaces edge uv by u-w-v; members holding both ends also get w.
  int subdivide(int u, int v) {
    int w = add_vertex();
    unlink(u, v);
    link(u, w);
    link(w, v);
    for (auto& set : sets) {
      if (has(set, u) && has(set, v)) insert(set, w);
    }
    return w;
  }

  std::vector<int> leaves_of(std::size_t member) const {
    std::vector<int> out;
    const auto& set = sets[member];
    for (int v : set) {
      int inside = 0;
      for (int w : adj[v]) inside += has(set, w);
      if (inside <= 1) out.push_back(v);
    }
    return out;
  }

  SubtreeFamily build(const SubtreeFamily& original) const {
    std::vector<Edge> edges;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      for (int v : adj[u]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    std::vector<SubtreeMember> members;
    auto orig = original.members();
    for (std::size_t i = 0; i < orig.size(); ++i) {
      members.push_back({orig[i].id, orig[i].part, Subtree(sets[i])});
    }
    return SubtreeFamily(Tree(static_cast<int>(adj.size()), edges), std::move(members));
  }
};

}  // namespace

SubtreeFamily reduce_degree(const SubtreeFamily& fam) {
  Workspace ws(fam);
  const int original = fam.ambient().size();
  bool changed = false;
  for (int v = 0; v < original; ++v) {
    if (ws.adj[v].size() < 4) continue;
    changed = true;
    std::vector<int> nbrs = ws.adj[v];
    std::vector<int> path{v};
    for (std::size_t i = 1; i < nbrs.size(); ++i) path.push_back(ws.add_vertex());
    for (int u : nbrs) ws.unlink(v, u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      ws.link(nbrs[i], path[i]);
      if (i > 0) ws.link(path[i - 1], path[i]);
    }
    for (auto& set : ws.sets) {
      if (Workspace::has(set, v)) {
        for (std::size_t i = 1; i < path.size(); ++i) Workspace::insert(set, path[i]);
      }
    }
  }
  if (!changed) return fam;
  return ws.build(fam);
}

SubtreeFamily separate_leaves(const SubtreeFamily& fam) {
  Workspace ws(fam);
  std::vector<int> leaf_count(ws.adj.size(), 0);
  std::vector<std::vector<int>> leaves(ws.sets.size());
  for (std::size_t i = 0; i < ws.sets.size(); ++i) {
    leaves[i] = ws.leaves_of(i);
    for (int v : leaves[i]) ++leaf_count[v];
  }
  bool changed = false;
  // Only member i changes when it is repaired, and every vertex it gains is a
  // fresh, unshared leaf, so earlier members never need revisiting.
  for (std::size_t i = 0; i < ws.sets.size(); ++i) {
    while (true) {
      auto shared = std::find_if(leaves[i].begin(), leaves[i].end(), [&](int v) { return leaf_count[v] >= 2; });
      if (shared == leaves[i].end()) break;
      changed = true;
      const int v = *shared;
      auto& set = ws.sets[i];
      int inside = 0;
      for (int w : ws.adj[v]) inside += Workspace::has(set, w);
      const int needed = inside == 0 ? 2 : 1;
      // A leaf of the ambient tree has no free neighbour; hang a pendant on it.
      while (static_cast<int>(ws.adj[v].size()) - inside < needed) {
        int p = ws.add_vertex();
        ws.link(v, p);
      }
      std::vector<int> outside;
      for (int w : ws.adj[v]) {
        if (!Workspace::has(set, w)) outside.push_back(w);
      }
      for (int k = 0; k < needed; ++k) {
        int w = ws.subdivide(outside[k], v);
        Workspace::insert(set, w);
      }
      leaf_count.resize(ws.adj.size(), 0);
      for (int u : leaves[i]) --leaf_count[u];
      leaves[i] = ws.leaves_of(i);
      for (int u : leaves[i]) ++leaf_count[u];
    }
  }
  if (!changed) return fam;
  return ws.build(fam);
}

SubtreeFamily normalize_subtrees(const SubtreeFamily& fam) {
  SubtreeFamily out = separate_leaves(reduce_degree(fam));
  if (out.ambient().max_degree() > 3) {
    throw InvariantViolation("normalized ambient tree still has a vertex of degree > 3");
  }
  return out;
}

IntervalFamily perturb_intervals(const IntervalFamily& fam) {
  auto members = fam.members();
  // (coordinate, 0 = left / 1 = right, id, member index)
  std::vector<std::tuple<Rational, int, Id, std::size_t>> events;
  for (std::size_t i = 0; i < members.size(); ++i) {
    events.emplace_back(members[i].left, 0, members[i].id, i);
    events.emplace_back(members[i].right, 1, members[i].id, i);
  }
  std::sort(events.begin(), events.end());
  std::vector<IntervalMember> out(members.begin(), members.end());
  for (std::size_t pos = 0; pos < events.size(); ++pos) {
    const auto& [coord, type, id, idx] = events[pos];
    (type == 0 ? out[idx].left : out[idx].right) = Rational(static_cast<std::int64_t>(pos));
  }
  return IntervalFamily(std::move(out));
}

IntervalFamily path_family_as_intervals(const SubtreeFamily& fam) {
  const Tree& t = fam.ambient();
  if (!t.is_path()) throw InvariantViolation("ambient tree is not a path");
  std::vector<int> position(t.size(), 0);
  if (t.size() > 1) {
    int prev = -1;
    int cur = t.leaves().front();
    for (int pos = 0; pos < t.size(); ++pos) {
      position[cur] = pos;
      int next = -1;
      for (int w : t.neighbors(cur)) {
        if (w != prev) next = w;
      }
      prev = cur;
      cur = next;
    }
  }
  std::vector<IntervalMember> out;
  for (const auto& m : fam.members()) {
    int lo = t.size(), hi = -1;
    for (int v : m.subtree.vertices()) {
      lo = std::min(lo, position[v]);
      hi = std::max(hi, position[v]);
    }
    out.push_back({m.id, m.part, Rational(lo), Rational(hi)});
  }
  return IntervalFamily(std::move(out));
}

}  // namespace ehcert
