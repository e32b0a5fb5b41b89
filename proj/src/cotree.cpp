#include "ehcert/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "ehcert/errors.hpp"

namespace ehcert {

Cotree Cotree::leaf(Id id) {
  if (id < 0) throw InputError("cotree leaf id " + std::to_string(id) + " is negative");
  Cotree out;
  out.nodes_.push_back({Kind::leaf, id, {}});
  out.root_ = 0;
  out.sorted_leaves_ = {id};
  return out;
}

Cotree Cotree::disjoint_union(std::vector<Cotree> parts) {
  if (parts.size() < 2) throw InputError("a union needs at least two operands");
  Cotree out;
  Node u{Kind::disjoint_union, -1, {}};
  for (const auto& p : parts) u.children.push_back(out.graft(p));
  out.nodes_.push_back(std::move(u));
  out.root_ = static_cast<int>(out.nodes_.size()) - 1;
  for (const auto& p : parts) {
    out.sorted_leaves_.insert(out.sorted_leaves_.end(), p.sorted_leaves_.begin(), p.sorted_leaves_.end());
  }
  std::sort(out.sorted_leaves_.begin(), out.sorted_leaves_.end());
  out.check_distinct_leaves();
  return out;
}

Cotree Cotree::complement(Cotree inner) {
  const Node& r = inner.node(inner.root());
  if (r.kind == Kind::leaf) return inner;
  Cotree out;
  if (r.kind == Kind::complement) {
    // Re-root at the grandchild: double complements cancel.
    Cotree sub;
    sub.nodes_ = inner.nodes_;
    sub.root_ = r.children.front();
    out.root_ = out.graft(sub);
  } else {
    int child = out.graft(inner);
    out.nodes_.push_back({Kind::complement, -1, {child}});
    out.root_ = static_cast<int>(out.nodes_.size()) - 1;
  }
  out.sorted_leaves_ = std::move(inner.sorted_leaves_);
  return out;
}

int Cotree::graft(const Cotree& other) {
  // Copy the subtree reachable from other's root, children before parents.
  std::vector<int> order;
  std::vector<int> stack{other.root_};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int c : other.nodes_[x].children) stack.push_back(c);
  }
  std::vector<int> remap(other.nodes_.size(), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node copy = other.nodes_[*it];
    for (int& c : copy.children) c = remap[c];
    nodes_.push_back(std::move(copy));
    remap[*it] = static_cast<int>(nodes_.size()) - 1;
  }
  return remap[other.root_];
}

void Cotree::check_distinct_leaves() const {
  auto dup = std::adjacent_find(sorted_leaves_.begin(), sorted_leaves_.end());
  if (dup != sorted_leaves_.end()) throw InputError("duplicate cotree leaf id " + std::to_string(*dup));
}

std::vector<Id> Cotree::leaves() const { return sorted_leaves_; }

std::size_t Cotree::leaf_count() const { return sorted_leaves_.size(); }

std::vector<Id> Cotree::leaves_under(int index) const {
  std::vector<Id> out;
  std::vector<int> stack{index};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (nodes_[x].kind == Kind::leaf) out.push_back(nodes_[x].leaf);
    for (int c : nodes_[x].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Cotree::index_of_leaf(Id id) const {
  auto it = std::lower_bound(sorted_leaves_.begin(), sorted_leaves_.end(), id);
  if (it == sorted_leaves_.end() || *it != id) return -1;
  return static_cast<int>(it - sorted_leaves_.begin());
}

std::string Cotree::str() const {
  std::string out;
  auto emit = [&](auto&& self, int x) -> void {
    const Node& n = nodes_[x];
    if (n.kind == Kind::leaf) {
      out += std::to_string(n.leaf);
      return;
    }
    out += n.kind == Kind::complement ? "(C" : "(U";
    for (int c : n.children) {
      out += ' ';
      self(self, c);
    }
    out += ')';
  };
  emit(emit, root_);
  return out;
}

bool Cotree::adjacent(Id a, Id b) const {
  if (a == b) return false;
  std::vector<int> parent(nodes_.size(), -1);
  int leaf_a = -1, leaf_b = -1;
  for (std::size_t x = 0; x < nodes_.size(); ++x) {
    for (int c : nodes_[x].children) parent[c] = static_cast<int>(x);
    if (nodes_[x].kind == Kind::leaf) {
      if (nodes_[x].leaf == a) leaf_a = static_cast<int>(x);
      if (nodes_[x].leaf == b) leaf_b = static_cast<int>(x);
    }
  }
  if (leaf_a < 0 || leaf_b < 0) throw InputError("unknown cotree leaf");
  std::vector<char> above_a(nodes_.size(), 0);
  for (int x = leaf_a; x >= 0; x = parent[x]) above_a[x] = 1;
  int lca = leaf_b;
  while (!above_a[lca]) lca = parent[lca];
  int flips = 0;
  for (int x = parent[lca]; x >= 0; x = parent[x]) flips += nodes_[x].kind == Kind::complement;
  return flips % 2 == 1;
}

namespace {

class CotreeParser {
 public:
  explicit CotreeParser(std::string_view text) : text_(text) {}

  Cotree parse_all() {
    Cotree out = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cotree syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Cotree parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      skip_space();
      if (pos_ >= text_.size()) fail("unexpected end of input");
      char op = text_[pos_++];
      if (op != 'U' && op != 'C') fail(std::string("expected U or C, got '") + op + "'");
      std::vector<Cotree> parts;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') break;
        parts.push_back(parse_expr());
      }
      std::size_t close = pos_++;
      if (op == 'C') {
        if (parts.size() != 1) {
          pos_ = close;
          fail("C takes exactly one operand");
        }
        return Cotree::complement(std::move(parts.front()));
      }
      if (parts.size() < 2) {
        pos_ = close;
        fail("U takes at least two operands");
      }
      return Cotree::disjoint_union(std::move(parts));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("unexpected character '") + text_[pos_] + "'");
    Id id = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, id);
    if (ec != std::errc()) fail("leaf id out of range");
    try {
      return Cotree::leaf(id);
    } catch (const InputError&) {
      fail("bad leaf id");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cotree parse_cotree(std::string_view text) { return CotreeParser(text).parse_all(); }

Graph cotree_to_graph(const Cotree& ct) {
  std::vector<Edge> edges;
  // Leaves in different children of a union are adjacent iff an odd number of
  // complements sit above that union.
  auto walk = [&](auto&& self, int x, int flips) -> std::vector<int> {
    const auto& n = ct.node(x);
    if (n.kind == Cotree::Kind::leaf) return {ct.index_of_leaf(n.leaf)};
    if (n.kind == Cotree::Kind::complement) return self(self, n.children.front(), flips + 1);
    std::vector<std::vector<int>> parts;
    for (int c : n.children) parts.push_back(self(self, c, flips));
    if (flips % 2 == 1) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          for (int a : parts[i]) {
            for (int b : parts[j]) edges.emplace_back(std::min(a, b), std::max(a, b));
          }
        }
      }
    }
    std::vector<int> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
  };
  walk(walk, ct.root(), 0);
  return Graph(static_cast<int>(ct.leaf_count()), edges);
}

namespace {

struct FoundP4 {
  P4Witness witness;
};

std::vector<std::vector<int>> components_in(const Graph& g, const std::vector<int>& subset, bool complemented) {
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (int v : subset) in[v] = 1;
  std::vector<std::vector<int>> out;
  for (int s : subset) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      int x = comp[head];
      if (!complemented) {
        for (int w : g.neighbors(x)) {
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      } else {
        for (int w : subset) {
          if (!seen[w] && w != x && !g.has_edge(x, w)) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<P4Witness> find_p4(const Graph& g, const std::vector<int>& subset) {
  std::vector<char> in(g.size(), 0);
  for (int v : subset) in[v] = 1;
  for (int b : subset) {
    for (int c : g.neighbors(b)) {
      if (!in[c] || c == b) continue;
      std::vector<int> ends_a, ends_d;
      for (int a : g.neighbors(b)) {
        if (in[a] && a != c && !g.has_edge(a, c)) ends_a.push_back(a);
      }
      for (int d : g.neighbors(c)) {
        if (in[d] && d != b && !g.has_edge(d, b)) ends_d.push_back(d);
      }
      for (int a : ends_a) {
        for (int d : ends_d) {
          if (a != d && !g.has_edge(a, d)) return P4Witness{{a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

Cotree recognize_subset(const Graph& g, const std::vector<int>& subset) {
  if (subset.size() == 1) return Cotree::leaf(subset.front());
  auto comps = components_in(g, subset, false);
  if (comps.size() > 1) {
    std::vector<Cotree> parts;
    for (const auto& c : comps) parts.push_back(recognize_subset(g, c));
    return Cotree::disjoint_union(std::move(parts));
  }
  auto cocomps = components_in(g, subset, true);
  if (cocomps.size() > 1) {
    std::vector<Cotree> parts;
    for (const auto& c : cocomps) parts.push_back(Cotree::complement(recognize_subset(g, c)));
    return Cotree::complement(Cotree::disjoint_union(std::move(parts)));
  }
  auto p4 = find_p4(g, subset);
  if (!p4) throw InvariantViolation("connected and co-connected vertex set without an induced P4");
  throw FoundP4{*p4};
}

}  // namespace

std::variant<Cotree, P4Witness> recognize_cograph(const Graph& g) {
  if (g.size() == 0) throw InputError("cannot recognize the empty graph");
  std::vector<int> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  try {
    return recognize_subset(g, all);
  } catch (const FoundP4& found) {
    return found.witness;
  }
}

VerifyReport verify_certificate(const Cotree& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition) {
  Graph g = cotree_to_graph(inst);
  return verify_with([&](Id id) { return inst.index_of_leaf(id) >= 0; },
                     [&](Id a, Id b) { return g.has_edge(inst.index_of_leaf(a), inst.index_of_leaf(b)); }, cert,
                     min_side, partition);
}

}  // namespace ehcert
