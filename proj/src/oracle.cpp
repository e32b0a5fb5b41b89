#include "ehcert/oracle.hpp"

#include <bit>
#include <string>

#include "ehcert/errors.hpp"

namespace ehcert {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

Mask above(int v) { return v >= 63 ? 0 : ~Mask{0} << (v + 1); }

std::vector<Id> first_ids(Mask m, std::size_t count) {
  std::vector<Id> out;
  while (m && out.size() < count) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// A ranges over `left`, B over the common neighbourhood of A inside `right`.
class Search {
 public:
  Search(std::vector<Mask> adj, Mask left, Mask right) : adj_(std::move(adj)), left_(left), right_(right) {}

  void run() { dfs(0, 0, 0, right_); }

  std::size_t best() const { return best_; }
  Mask best_a() const { return best_a_; }
  Mask best_b() const { return best_b_; }

 private:
  void dfs(int start, Mask a, std::size_t a_size, Mask common) {
    for (int v = start; v < static_cast<int>(adj_.size()); ++v) {
      if (!(left_ & bit(v))) continue;
      Mask next = common & adj_[v];
      auto cnt = static_cast<std::size_t>(std::popcount(next));
      if (cnt <= best_) continue;
      std::size_t size = a_size + 1;
      if (std::min(size, cnt) > best_) {
        best_ = std::min(size, cnt);
        best_a_ = a | bit(v);
        best_b_ = next;
      }
      auto rest = static_cast<std::size_t>(std::popcount(left_ & above(v)));
      if (std::min(size + rest, cnt) > best_) dfs(v + 1, a | bit(v), size, next);
    }
  }

  std::vector<Mask> adj_;
  Mask left_, right_;
  std::size_t best_ = 0;
  Mask best_a_ = 0, best_b_ = 0;
};

void check_cap(const Graph& g, int cap) {
  if (cap < 1 || cap > 64) throw InputError("oracle cap must lie in 1..64, got " + std::to_string(cap));
  if (g.size() > cap) {
    throw InputError("graph has " + std::to_string(g.size()) + " vertices, above the oracle cap of " +
                     std::to_string(cap));
  }
}

std::vector<Mask> masks(const Graph& g, bool complement) {
  const int n = g.size();
  std::vector<Mask> out(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) out[v] |= bit(w);
    if (complement) out[v] = ~out[v] & ~bit(v) & (n == 64 ? ~Mask{0} : bit(n) - 1);
  }
  return out;
}

OracleResult result(const Search& s, BicliqueKind kind) {
  OracleResult out;
  out.size = 2 * s.best();
  out.cert.kind = kind;
  out.cert.side_a = first_ids(s.best_a(), s.best());
  out.cert.side_b = first_ids(s.best_b(), s.best());
  return out;
}

OracleResult best_of(const Graph& g, Mask left, Mask right) {
  Search complete(masks(g, false), left, right);
  Search empty(masks(g, true), left, right);
  complete.run();
  empty.run();
  if (complete.best() >= empty.best()) return result(complete, BicliqueKind::complete);
  return result(empty, BicliqueKind::empty);
}

Mask all_vertices(const Graph& g) { return g.size() == 64 ? ~Mask{0} : bit(g.size()) - 1; }

}  // namespace

OracleResult max_balanced_biclique(const Graph& g, int cap) {
  check_cap(g, cap);
  return best_of(g, all_vertices(g), all_vertices(g));
}

OracleResult max_biclique_of_kind(const Graph& g, BicliqueKind kind, int cap) {
  check_cap(g, cap);
  Search s(masks(g, kind == BicliqueKind::empty), all_vertices(g), all_vertices(g));
  s.run();
  return result(s, kind);
}

OracleResult max_colorful_biclique(const Graph& g, const std::vector<int>& part, int cap) {
  check_cap(g, cap);
  if (part.size() != static_cast<std::size_t>(g.size())) throw InputError("partition does not cover every vertex");
  Mask left = 0, right = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (part[v] == 1) {
      left |= bit(v);
    } else if (part[v] == 2) {
      right |= bit(v);
    } else {
      throw InputError("vertex " + std::to_string(v) + " has part " + std::to_string(part[v]));
    }
  }
  return best_of(g, left, right);
}

bool check_no_kab(const Graph& g, int k, int a, int b, std::uint64_t max_subsets) {
  const int n = g.size();
  if (k < 0 || k > n) throw InputError("side 1 size out of range");
  if (n - k > 64) throw InputError("side 2 has more than 64 vertices");
  if (a < 0 || b < 0) throw InputError("a and b must be non-negative");
  if (a > k || b > n - k) return true;
  // C(k, a) with early exit past the limit.
  unsigned __int128 subsets = 1;
  for (int i = 1; i <= a; ++i) {
    subsets = subsets * static_cast<unsigned>(k - a + i) / static_cast<unsigned>(i);
    if (subsets > max_subsets) throw InputError("C(k, a) exceeds the enumeration cap");
  }
  const Mask side2 = (n - k == 64) ? ~Mask{0} : bit(n - k) - 1;
  std::vector<Mask> nb(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int w : g.neighbors(i)) {
      if (w >= k) nb[i] |= bit(w - k);
    }
  }
  auto found = [&](const std::vector<Mask>& adj) {
    auto rec = [&](auto&& self, int start, int left, Mask common) -> bool {
      if (std::popcount(common) < b) return false;
      if (left == 0) return true;
      for (int i = start; i <= k - left; ++i) {
        if (self(self, i + 1, left - 1, common & adj[i])) return true;
      }
      return false;
    };
    return rec(rec, 0, a, side2);
  };
  std::vector<Mask> co(k);
  for (int i = 0; i < k; ++i) co[i] = ~nb[i] & side2;
  return !found(nb) && !found(co);
}

}  // namespace ehcert
