#include "ehcert/tree.hpp"

#include <algorithm>
#include <string>

#include "ehcert/errors.hpp"

namespace ehcert {

Tree::Tree(int n, std::span<const Edge> edges) {
  if (n < 1) throw InputError("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1) {
    throw InputError("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                     " edges, got " + std::to_string(edges.size()));
  }
  graph_ = Graph(n, edges);
  if (connected_components(graph_).size() != 1) throw InputError("tree edges are not connected");
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

int Tree::leaf_count() const {
  int count = 0;
  for (int v = 0; v < size(); ++v) count += degree(v) == 1;
  return count;
}

int Tree::max_degree() const {
  int best = 0;
  for (int v = 0; v < size(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Tree::is_connected_subset(std::span<const int> vertices) const {
  if (vertices.empty()) return false;
  std::vector<char> in(size(), 0), seen(size(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= size()) return false;
    in[v] = 1;
  }
  std::vector<int> stack{vertices.front()};
  seen[vertices.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == vertices.size();
}

std::vector<int> Tree::path(int u, int v) const {
  std::vector<int> parent(size(), -1);
  std::vector<int> stack{u};
  parent[u] = u;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) break;
    for (int w : neighbors(x)) {
      if (parent[w] < 0) {
        parent[w] = x;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int x = v; x != u; x = parent[x]) out.push_back(x);
  out.push_back(u);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> Tree::spanning_subtree(std::span<const int> vertices) const {
  if (vertices.empty()) return {};
  // Prune leaves outside the terminal set until none remain.
  std::vector<char> terminal(size(), 0), removed(size(), 0);
  for (int v : vertices) terminal[v] = 1;
  std::vector<int> deg(size());
  std::vector<int> queue;
  for (int v = 0; v < size(); ++v) {
    deg[v] = degree(v);
    if (deg[v] <= 1 && !terminal[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (int w : neighbors(v)) {
      if (removed[w]) continue;
      if (--deg[w] <= 1 && !terminal[w]) queue.push_back(w);
    }
  }
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (!removed[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> Tree::components_without(int v) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(size(), 0);
  seen[v] = 1;
  for (int start : neighbors(v)) {
    std::vector<int> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

Tree induced_tree(const Tree& t, std::span<const int> vertices) {
  std::vector<int> index(t.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : t.neighbors(vertices[i])) {
      if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[w]);
    }
  }
  return Tree(static_cast<int>(vertices.size()), edges);
}

}  // namespace ehcert
