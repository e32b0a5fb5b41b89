#include "ehcert/graph.hpp"

#include <algorithm>
#include <string>

#include "ehcert/errors.hpp"

namespace ehcert {

Graph::Graph(int n, std::span<const Edge> edges) : adj_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& list = adj_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("parallel edge at vertex " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(int u, int v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < size(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(size());
  for (int u = 0; u < size(); ++u) {
    auto it = adj_[u].begin();
    for (int v = 0; v < size(); ++v) {
      if (it != adj_[u].end() && *it == v) {
        ++it;
        continue;
      }
      if (v != u) out.adj_[u].push_back(v);
    }
    out.edge_count_ += out.adj_[u].size();
  }
  out.edge_count_ /= 2;
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> index(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : adj_[vertices[i]]) {
      int j = index[w];
      if (j > static_cast<int>(i)) sub.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vertices.size()), sub);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : g.neighbors(members[head])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace ehcert
