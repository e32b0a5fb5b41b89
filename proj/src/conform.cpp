#include <algorithm>
#include <set>

#include "ehcert/cotree.hpp"
#include "ehcert/errors.hpp"

namespace ehcert {
namespace {

// A vertex set of the descent: either a whole node, or a union node restricted
// to some of its children.
struct Piece {
  int node = -1;
  std::vector<int> children;  // empty = the whole node
};

class Descent {
 public:
  Descent(const Cotree& ct, const std::set<Id>& u) : ct_(ct), count_(ct.node_count(), 0), min_leaf_(ct.node_count()) {
    tally(ct.root(), u);
  }

  std::size_t count(const Piece& p) const {
    if (p.children.empty()) return count_[p.node];
    std::size_t total = 0;
    for (int c : p.children) total += count_[c];
    return total;
  }

  std::vector<Id> vertices(const Piece& p) const {
    if (p.children.empty()) return ct_.leaves_under(p.node);
    std::vector<Id> out;
    for (int c : p.children) {
      auto part = ct_.leaves_under(c);
      out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Splits G_i into (G_{i+1}, H_{i+1}); returns false once G_i is a single vertex.
  bool split(const Piece& g, Piece& next_g, Piece& next_h) const {
    const auto& n = ct_.node(g.node);
    if (n.kind == Cotree::Kind::leaf) return false;
    int union_node = g.node;
    std::vector<int> parts = g.children;
    if (parts.empty()) {
      if (n.kind == Cotree::Kind::complement) union_node = n.children.front();
      parts = ct_.node(union_node).children;
    }
    // Heaviest child, ties to the smallest leaf id; the rest stay grouped.
    auto best = std::min_element(parts.begin(), parts.end(), [&](int a, int b) {
      if (count_[a] != count_[b]) return count_[a] > count_[b];
      return min_leaf_[a] < min_leaf_[b];
    });
    Piece chosen{*best, {}};
    std::vector<int> rest_children;
    for (int c : parts) {
      if (c != *best) rest_children.push_back(c);
    }
    Piece rest = rest_children.size() == 1 ? Piece{rest_children.front(), {}} : Piece{union_node, rest_children};
    if (count(chosen) >= count(rest)) {
      next_g = std::move(chosen);
      next_h = std::move(rest);
    } else {
      next_g = std::move(rest);
      next_h = std::move(chosen);
    }
    return true;
  }

 private:
  void tally(int x, const std::set<Id>& u) {
    const auto& n = ct_.node(x);
    if (n.kind == Cotree::Kind::leaf) {
      count_[x] = u.count(n.leaf);
      min_leaf_[x] = n.leaf;
      return;
    }
    min_leaf_[x] = -1;
    for (int c : n.children) {
      tally(c, u);
      count_[x] += count_[c];
      if (min_leaf_[x] < 0 || min_leaf_[c] < min_leaf_[x]) min_leaf_[x] = min_leaf_[c];
    }
  }

  const Cotree& ct_;
  std::vector<std::size_t> count_;
  std::vector<Id> min_leaf_;
};

}  // namespace

ConformingResult conforming_subset(const Cotree& ct, const std::vector<Id>& u_ids) {
  if (u_ids.empty()) throw InputError("conforming_subset needs a nonempty U");
  std::set<Id> u(u_ids.begin(), u_ids.end());
  for (Id id : u) {
    if (ct.index_of_leaf(id) < 0) throw InputError("id " + std::to_string(id) + " is not a cotree leaf");
  }
  Descent descent(ct, u);
  ConformingResult result;
  std::vector<Piece> g_chain{Piece{ct.root(), {}}};
  std::vector<Piece> h_chain{Piece{}};  // H_1 does not exist
  while (true) {
    Piece next_g, next_h;
    if (!descent.split(g_chain.back(), next_g, next_h)) break;
    DescentStep step;
    step.u_in_g = descent.count(next_g);
    step.u_in_h = descent.count(next_h);
    step.g_vertices = descent.vertices(next_g);
    step.h_vertices = descent.vertices(next_h);
    result.steps.push_back(std::move(step));
    g_chain.push_back(std::move(next_g));
    h_chain.push_back(std::move(next_h));
  }

  const std::size_t size = u.size();
  if (size == 1) {
    result.w = ct.leaves();
    return result;
  }
  // All comparisons against |U|/4 and |U|/2 are done in integers.
  for (const auto& step : result.steps) {
    if (4 * step.u_in_h >= size && 2 * step.u_in_h <= size) {
      result.w = step.h_vertices;
      return result;
    }
  }
  std::size_t u_in_current = size;
  for (const auto& step : result.steps) {
    if (2 * u_in_current > size && 2 * step.u_in_g <= size) {
      result.w = step.g_vertices;
      return result;
    }
    u_in_current = step.u_in_g;
  }
  throw InvariantViolation("cotree descent found no conforming subset");
}

}  // namespace ehcert
