#pragma once

#include <span>
#include <vector>

#include "ehcert/graph.hpp"

namespace ehcert {

/// Ambient tree on vertices 0..n-1.
///
/// Construction checks that there are exactly n-1 edges and that they connect
/// all vertices. Everything else (degrees, leaves, paths) is derived on demand.
class Tree {
 public:
  Tree() : Tree(1, {}) {}
  Tree(int n, std::span<const Edge> edges);

  int size() const { return graph_.size(); }
  int degree(int v) const { return graph_.degree(v); }
  std::span<const int> neighbors(int v) const { return graph_.neighbors(v); }
  bool adjacent(int u, int v) const { return graph_.has_edge(u, v); }
  std::vector<Edge> edges() const { return graph_.edges(); }
  const Graph& graph() const { return graph_; }

  /// Vertices of degree exactly 1, ascending.
  std::vector<int> leaves() const;
  int leaf_count() const;
  int max_degree() const;
  bool is_path() const { return max_degree() <= 2; }

  /// True iff `vertices` (sorted, unique) is nonempty and induces a connected subgraph.
  bool is_connected_subset(std::span<const int> vertices) const;
  /// Vertices of P_T(u, v) in order from u to v.
  std::vector<int> path(int u, int v) const;
  /// Vertex set of the inclusion-minimal subtree containing `vertices`, sorted.
  std::vector<int> spanning_subtree(std::span<const int> vertices) const;
  /// Vertex sets of the components of T - v, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> components_without(int v) const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.graph_ == b.graph_; }

 private:
  Graph graph_;
};

/// Tree induced on a connected vertex set; vertex i of the result is vertices[i].
Tree induced_tree(const Tree& t, std::span<const int> vertices);

}  // namespace ehcert
