#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ehcert/graph.hpp"
#include "ehcert/rational.hpp"
#include "ehcert/tree.hpp"

namespace ehcert {

/// Opaque member identifier, preserved through every transformation.
using Id = std::int64_t;

/// Connected vertex subset of an ambient tree, stored sorted.
class Subtree {
 public:
  Subtree() = default;
  explicit Subtree(std::vector<int> vertices);

  std::span<const int> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(int v) const;
  /// Vertices of degree <= 1 inside the subtree (its leaves as a tree).
  std::vector<int> leaves(const Tree& ambient) const;

  friend bool operator==(const Subtree&, const Subtree&) = default;

 private:
  std::vector<int> vertices_;
};

bool intersects(const Subtree& a, const Subtree& b);

struct SubtreeMember {
  Id id = 0;
  std::optional<int> part;
  Subtree subtree;
};

/// Subtrees of one ambient tree; members are kept in ascending id order.
class SubtreeFamily {
 public:
  SubtreeFamily() = default;
  /// Validates ids, connectivity and labels; throws InputError.
  SubtreeFamily(Tree ambient, std::vector<SubtreeMember> members);

  const Tree& ambient() const { return ambient_; }
  std::span<const SubtreeMember> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool has_parts() const { return !members_.empty() && members_.front().part.has_value(); }
  /// Index into members() or -1.
  int index_of(Id id) const;
  bool adjacent(Id a, Id b) const;

 private:
  Tree ambient_;
  std::vector<SubtreeMember> members_;
};

struct IntervalMember {
  Id id = 0;
  std::optional<int> part;
  Rational left;
  Rational right;
};

/// Closed intervals on the line; members are kept in ascending id order.
class IntervalFamily {
 public:
  IntervalFamily() = default;
  IntervalFamily(std::vector<IntervalMember> members);  // NOLINT(implicit)

  std::span<const IntervalMember> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool has_parts() const { return !members_.empty() && members_.front().part.has_value(); }
  int index_of(Id id) const;
  bool adjacent(Id a, Id b) const;

 private:
  std::vector<IntervalMember> members_;
};

inline bool intersects(const IntervalMember& a, const IntervalMember& b) {
  return a.left <= b.right && b.left <= a.right;
}

[[noreturn]] void throw_missing_labels();

/// Total assignment id -> {1, 2}.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::map<Id, int> assignment);

  template <class Family>
  static Partition from_labels(const Family& fam);

  std::optional<int> part_of(Id id) const;
  std::vector<Id> ids(int part) const;
  std::size_t count(int part) const;
  std::size_t size() const { return assignment_.size(); }
  bool balanced() const;
  const std::map<Id, int>& assignment() const { return assignment_; }

 private:
  std::map<Id, int> assignment_;
};

template <class Family>
Partition Partition::from_labels(const Family& fam) {
  std::map<Id, int> out;
  for (const auto& m : fam.members()) {
    if (!m.part) throw_missing_labels();
    out.emplace(m.id, *m.part);
  }
  return Partition(std::move(out));
}


/// Vertex i is the member with the i-th smallest id.
Graph intersection_graph(const SubtreeFamily& fam);
Graph intersection_graph(const IntervalFamily& fam);

}  // namespace ehcert
