#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ehcert/certificate.hpp"
#include "ehcert/family.hpp"
#include "ehcert/graph.hpp"

namespace ehcert {

/// Complement / disjoint-union expression tree of a cograph.
///
/// Nodes live in an arena; node 0 is not special, use root(). The builders
/// keep the tree normalized: unions have at least two children, leaf ids are
/// distinct, and a complement never wraps a complement or a leaf.
class Cotree {
 public:
  enum class Kind { leaf, disjoint_union, complement };

  struct Node {
    Kind kind = Kind::leaf;
    Id leaf = -1;
    std::vector<int> children;
  };

  static Cotree leaf(Id id);
  static Cotree disjoint_union(std::vector<Cotree> parts);
  static Cotree complement(Cotree inner);

  int root() const { return root_; }
  const Node& node(int index) const { return nodes_[static_cast<std::size_t>(index)]; }
  std::size_t node_count() const { return nodes_.size(); }

  /// All leaf ids, ascending.
  std::vector<Id> leaves() const;
  /// Leaf ids below `index`, ascending.
  std::vector<Id> leaves_under(int index) const;
  std::size_t leaf_count() const;
  int index_of_leaf(Id id) const;

  /// Canonical s-expression, e.g. "(U (C (U 0 1 2)) 3)".
  std::string str() const;

  bool adjacent(Id a, Id b) const;

 private:
  int graft(const Cotree& other);
  void check_distinct_leaves() const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<Id> sorted_leaves_;
};

/// Parses `expr := <id> | (U expr expr+) | (C expr)`. Throws InputError with
/// the offending offset on syntax errors and on duplicate leaf ids.
Cotree parse_cotree(std::string_view text);

/// Graph of the cotree; vertex i is the i-th smallest leaf id.
Graph cotree_to_graph(const Cotree& ct);

/// Induced P4 a-b-c-d, as vertex numbers of the input graph.
struct P4Witness {
  std::array<int, 4> path{};
};

/// Returns a cotree whose graph equals `g` (leaf ids = vertex numbers), or
/// four vertices inducing a P4.
std::variant<Cotree, P4Witness> recognize_cograph(const Graph& g);

/// One step of the descent G_i -> (G_{i+1}, H_{i+1}).
struct DescentStep {
  std::size_t u_in_g = 0;  ///< |U ∩ V(G_{i+1})|
  std::size_t u_in_h = 0;  ///< |U ∩ V(H_{i+1})|
  std::vector<Id> g_vertices;
  std::vector<Id> h_vertices;
};

struct ConformingResult {
  std::vector<Id> w;
  std::vector<DescentStep> steps;
};

/// Set W with |U|/4 <= |U ∩ W| <= max(|U|/2, 1) that conforms to every vertex
/// outside it. Throws InputError for an empty U or ids that are not leaves.
ConformingResult conforming_subset(const Cotree& ct, const std::vector<Id>& u);

VerifyReport verify_certificate(const Cotree& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition = nullptr);

}  // namespace ehcert
