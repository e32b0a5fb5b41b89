#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ehcert {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}
  /// Throws InputError on loops, out-of-range endpoints, or parallel edges.
  Graph(int n, std::span<const Edge> edges);

  int size() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  Graph complement() const;
  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace ehcert
