#include "ehcert/family.hpp"

#include <algorithm>
#include <string>

#include "ehcert/errors.hpp"

namespace ehcert {
namespace {

template <class Member>
void check_ids_and_parts(std::vector<Member>& members, const char* what) {
  std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    if (m.id < 0) throw InputError(std::string(what) + " id " + std::to_string(m.id) + " is negative");
    if (i > 0 && members[i - 1].id == m.id) {
      throw InputError(std::string("duplicate ") + what + " id " + std::to_string(m.id));
    }
    if (m.part && *m.part != 1 && *m.part != 2) {
      throw InputError(std::string(what) + " " + std::to_string(m.id) + ": part must be 1 or 2");
    }
    if (m.part.has_value() != members.front().part.has_value()) {
      throw InputError(std::string(what) + " " + std::to_string(m.id) +
                       ": part labels must be given for all members or none");
    }
  }
}

template <class Member>
int find_index(const std::vector<Member>& members, Id id) {
  auto it = std::lower_bound(members.begin(), members.end(), id,
                             [](const Member& m, Id key) { return m.id < key; });
  if (it == members.end() || it->id != id) return -1;
  return static_cast<int>(it - members.begin());
}

}  // namespace

Subtree::Subtree(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Subtree::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::vector<int> Subtree::leaves(const Tree& ambient) const {
  std::vector<int> out;
  for (int v : vertices_) {
    int inside = 0;
    for (int w : ambient.neighbors(v)) inside += contains(w);
    if (inside <= 1) out.push_back(v);
  }
  return out;
}

bool intersects(const Subtree& a, const Subtree& b) {
  auto x = a.vertices();
  auto y = b.vertices();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return true;
    if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

SubtreeFamily::SubtreeFamily(Tree ambient, std::vector<SubtreeMember> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  check_ids_and_parts(members_, "subtree");
  for (const auto& m : members_) {
    if (!ambient_.is_connected_subset(m.subtree.vertices())) {
      throw InputError("subtree " + std::to_string(m.id) + " is empty or not a connected subset of the ambient tree");
    }
  }
}

int SubtreeFamily::index_of(Id id) const { return find_index(members_, id); }

bool SubtreeFamily::adjacent(Id a, Id b) const {
  return intersects(members_[index_of(a)].subtree, members_[index_of(b)].subtree);
}

IntervalFamily::IntervalFamily(std::vector<IntervalMember> members) : members_(std::move(members)) {
  check_ids_and_parts(members_, "interval");
  for (const auto& m : members_) {
    if (m.right < m.left) throw InputError("interval " + std::to_string(m.id) + " has left > right");
  }
}

int IntervalFamily::index_of(Id id) const { return find_index(members_, id); }

bool IntervalFamily::adjacent(Id a, Id b) const {
  return intersects(members_[index_of(a)], members_[index_of(b)]);
}

void throw_missing_labels() { throw InputError("instance has no part labels"); }

Partition::Partition(std::map<Id, int> assignment) : assignment_(std::move(assignment)) {
  for (auto [id, part] : assignment_) {
    if (part != 1 && part != 2) throw InputError("id " + std::to_string(id) + ": part must be 1 or 2");
  }
}

std::optional<int> Partition::part_of(Id id) const {
  auto it = assignment_.find(id);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

std::vector<Id> Partition::ids(int part) const {
  std::vector<Id> out;
  for (auto [id, p] : assignment_) {
    if (p == part) out.push_back(id);
  }
  return out;
}

std::size_t Partition::count(int part) const {
  std::size_t c = 0;
  for (const auto& entry : assignment_) c += entry.second == part;
  return c;
}

bool Partition::balanced() const {
  auto a = count(1), b = count(2);
  return (a > b ? a - b : b - a) <= 1;
}

Graph intersection_graph(const SubtreeFamily& fam) {
  auto members = fam.members();
  // Bucket members by vertex so only pairs sharing a vertex are compared.
  std::vector<std::vector<int>> at(fam.ambient().size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int v : members[i].subtree.vertices()) at[v].push_back(static_cast<int>(i));
  }
  std::vector<Edge> edges;
  std::vector<int> mark(members.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int v : members[i].subtree.vertices()) {
      for (int j : at[v]) {
        if (j > static_cast<int>(i) && mark[j] != static_cast<int>(i)) {
          mark[j] = static_cast<int>(i);
          edges.emplace_back(static_cast<int>(i), j);
        }
      }
    }
  }
  return Graph(static_cast<int>(members.size()), edges);
}

Graph intersection_graph(const IntervalFamily& fam) {
  auto members = fam.members();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (intersects(members[i], members[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph(static_cast<int>(members.size()), edges);
}

}  // namespace ehcert
