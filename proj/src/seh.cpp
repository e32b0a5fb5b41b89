#include "ehcert/seh.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "ehcert/errors.hpp"
#include "ehcert/normalize.hpp"

namespace ehcert {

BicliqueCertificate seh_interval(const IntervalFamily& input) {
  const std::size_t n = input.size();
  if (n == 0) throw InputError("seh_interval needs at least one interval");
  IntervalFamily fam = perturb_intervals(input);
  const std::size_t target = seh_interval_guarantee(n);

  // Endpoints now sit at distinct integers 0..2n-1; probe x = p + 1/2.
  std::vector<int> kind_at(2 * n);  // 0 = left endpoint, 1 = right endpoint
  for (const auto& m : fam.members()) {
    kind_at[m.left.num()] = 0;
    kind_at[m.right.num()] = 1;
  }
  std::int64_t left_of = 0, right_of = static_cast<std::int64_t>(n), x0 = -1;
  for (std::size_t p = 0; p <= 2 * n; ++p) {
    if (left_of == right_of) {
      x0 = static_cast<std::int64_t>(p);  // probe point is p - 1/2
      break;
    }
    if (p == 2 * n) break;
    if (kind_at[p] == 0) {
      --right_of;
    } else {
      ++left_of;
    }
  }
  if (x0 < 0) throw InvariantViolation("no balanced sweep point");
  const Rational probe(2 * x0 - 1, 2);
  const std::size_t m = static_cast<std::size_t>(left_of);

  std::vector<Id> left, right, through;
  for (const auto& iv : fam.members()) {
    if (iv.right < probe) {
      left.push_back(iv.id);
    } else if (iv.left > probe) {
      right.push_back(iv.id);
    } else {
      through.push_back(iv.id);
    }
  }
  if (4 * m >= n) return make_certificate(BicliqueKind::empty, left, right, target);
  // Fewer than n/4 on each side: more than n/2 intervals share the probe point.
  std::size_t half = through.size() / 2;
  std::vector<Id> a(through.begin(), through.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Id> b(through.begin() + static_cast<std::ptrdiff_t>(half), through.end());
  return make_certificate(BicliqueKind::complete, a, b, target);
}

BicliqueCertificate seh_cograph(const Cotree& ct) {
  const std::size_t n = ct.leaf_count();
  auto conform = conforming_subset(ct, ct.leaves());
  Graph g = cotree_to_graph(ct);
  std::vector<char> in_w(n, 0);
  for (Id id : conform.w) in_w[ct.index_of_leaf(id)] = 1;
  std::vector<Id> all_adjacent, none_adjacent;
  for (Id v : ct.leaves()) {
    int iv = ct.index_of_leaf(v);
    if (in_w[iv]) continue;
    std::size_t hits = 0;
    for (int nb : g.neighbors(iv)) hits += in_w[nb];
    if (hits == conform.w.size()) {
      all_adjacent.push_back(v);
    } else if (hits == 0) {
      none_adjacent.push_back(v);
    } else {
      throw InvariantViolation("W does not conform to vertex " + std::to_string(v));
    }
  }
  const std::size_t target = seh_cograph_guarantee(n);
  if (all_adjacent.size() >= none_adjacent.size()) {
    return make_certificate(BicliqueKind::complete, conform.w, all_adjacent, target);
  }
  return make_certificate(BicliqueKind::empty, conform.w, none_adjacent, target);
}

namespace {

std::vector<Id> merged(std::initializer_list<const std::vector<Id>*> parts) {
  std::vector<Id> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Id> minus(const std::vector<Id>& a, const std::vector<Id>& b) {
  std::vector<Id> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Per-vertex split of the family: F_v and F_1(v) >= F_2(v) >= F_3(v).
struct VertexSplit {
  std::vector<Id> f_v;
  std::array<std::vector<Id>, 3> f;
  std::array<std::vector<int>, 3> comps;
  std::array<int, 3> gate{-1, -1, -1};  // neighbour of v inside C_i(v)
};

class ChordalSolver {
 public:
  explicit ChordalSolver(const SubtreeFamily& fam) : fam_(fam), tree_(fam.ambient()), n_(fam.size()) {
    target_ = seh_chordal_guarantee(n_);
  }

  BicliqueCertificate run(ChordalTrace* trace) {
    // Step 1: a vertex lying in at least 4n/9 members.
    for (int v = 0; v < tree_.size(); ++v) {
      std::vector<Id> fv = containing(v);
      if (9 * fv.size() >= 4 * n_) {
        exit_step_ = 1;
        std::size_t half = fv.size() / 2;
        return make_certificate(BicliqueKind::complete, {fv.begin(), fv.begin() + static_cast<std::ptrdiff_t>(half)},
                                {fv.begin() + static_cast<std::ptrdiff_t>(half), fv.end()}, target_);
      }
    }

    std::vector<VertexSplit> splits(tree_.size());
    for (int v = 0; v < tree_.size(); ++v) splits[v] = split_at(v);

    // Step 2: a degree-3 vertex whose three branch families all lie in [n/9, 2n/9].
    int center = -1;
    for (int v = 0; v < tree_.size() && center < 0; ++v) {
      if (tree_.degree(v) != 3) continue;
      bool ok = true;
      for (const auto& f : splits[v].f) ok = ok && 9 * f.size() >= n_ && 9 * f.size() <= 2 * n_;
      if (ok) center = v;
    }
    if (center < 0) return no_center(splits);

    auto cert = decompose(center, splits[center], trace);
    return cert;
  }

  int exit_step() const { return exit_step_; }

 private:
  std::vector<Id> containing(int v) const {
    std::vector<Id> out;
    for (const auto& m : fam_.members()) {
      if (m.subtree.contains(v)) out.push_back(m.id);
    }
    return out;
  }

  VertexSplit split_at(int v) const {
    VertexSplit s;
    auto comps = tree_.components_without(v);
    std::vector<int> comp_of(tree_.size(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (int x : comps[c]) comp_of[x] = static_cast<int>(c);
    }
    std::vector<std::vector<Id>> fam(comps.size());
    for (const auto& m : fam_.members()) {
      if (m.subtree.contains(v)) {
        s.f_v.push_back(m.id);
      } else {
        fam[comp_of[m.subtree.vertices().front()]].push_back(m.id);
      }
    }
    std::vector<std::size_t> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    // Largest family first; ties go to the component with the smallest vertex.
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (fam[a].size() != fam[b].size()) return fam[a].size() > fam[b].size();
      return comps[a].front() < comps[b].front();
    });
    for (std::size_t i = 0; i < order.size() && i < 3; ++i) {
      s.f[i] = std::move(fam[order[i]]);
      s.comps[i] = comps[order[i]];
      for (int nb : tree_.neighbors(v)) {
        if (comp_of[nb] == static_cast<int>(order[i])) s.gate[i] = nb;
      }
    }
    return s;
  }

  BicliqueCertificate no_center(const std::vector<VertexSplit>& splits) {
    exit_step_ = 2;
    for (const auto& s : splits) {
      if (9 * s.f[0].size() >= 2 * n_ && 9 * s.f[1].size() >= 2 * n_) {
        return checked(make_certificate(BicliqueKind::empty, s.f[0], s.f[1], target_));
      }
    }
    // Every vertex points into its heaviest component; some edge is claimed
    // by both ends (or by neither) and then the two heavy sides are disjoint.
    for (auto [u, v] : tree_.edges()) {
      bool uv = splits[u].gate[0] == v;
      bool vu = splits[v].gate[0] == u;
      if (uv == vu) {
        return checked(make_certificate(BicliqueKind::empty, splits[u].f[0], splits[v].f[0], target_));
      }
    }
    throw InvariantViolation("orientation of the ambient tree has no doubly claimed edge");
  }

  BicliqueCertificate checked(BicliqueCertificate cert) const {
    if (cert.side_a.size() < target_ || cert.side_b.size() < target_) {
      throw InvariantViolation("chordal exit " + std::to_string(exit_step_) + " produced sides below 2n/9");
    }
    return cert;
  }

  BicliqueCertificate decompose(int v, const VertexSplit& split, ChordalTrace* trace) {
    ChordalDecomposition d;
    d.center = v;
    d.f_v = split.f_v;
    for (int i = 0; i < 3; ++i) {
      d.components[i] = split.comps[i];
      d.f_branch[i] = split.f[i];
    }

    // Root the tree at v.
    std::vector<int> parent(tree_.size(), -1), order{v};
    parent[v] = v;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int w : tree_.neighbors(order[head])) {
        if (parent[w] < 0) {
          parent[w] = order[head];
          order.push_back(w);
        }
      }
    }
    std::vector<int> depth(tree_.size(), 0), min_vertex(tree_.size());
    for (int x : order) {
      if (x != v) depth[x] = depth[parent[x]] + 1;
    }
    std::iota(min_vertex.begin(), min_vertex.end(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (*it != v) min_vertex[parent[*it]] = std::min(min_vertex[parent[*it]], min_vertex[*it]);
    }
    // A member lies in the subtree below x iff its topmost vertex does.
    std::vector<int> top(fam_.size());
    for (std::size_t i = 0; i < fam_.size(); ++i) {
      auto vs = fam_.members()[i].subtree.vertices();
      top[i] = *std::min_element(vs.begin(), vs.end(), [&](int a, int b) { return depth[a] < depth[b]; });
    }
    auto below = [&](int x) {
      std::vector<Id> out;
      for (std::size_t i = 0; i < fam_.size(); ++i) {
        int y = top[i];
        while (depth[y] > depth[x]) y = parent[y];
        if (y == x) out.push_back(fam_.members()[i].id);
      }
      return out;
    };
    auto children = [&](int x) {
      std::vector<int> out;
      for (int w : tree_.neighbors(x)) {
        if (w != parent[x]) out.push_back(w);
      }
      return out;
    };

    // Walk from u_i toward heavy children until both child families drop below n/9.
    std::size_t walk_steps = 0;
    for (int i = 0; i < 3; ++i) {
      int w = split.gate[i];
      std::size_t steps = 0;
      while (true) {
        if (++steps > static_cast<std::size_t>(tree_.size())) {
          throw InvariantViolation("branch walk did not terminate");
        }
        auto kids = children(w);
        std::vector<std::pair<std::vector<Id>, int>> fams;
        for (int c : kids) fams.emplace_back(below(c), c);
        std::sort(fams.begin(), fams.end(), [&](const auto& a, const auto& b) {
          if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
          return min_vertex[a.second] < min_vertex[b.second];
        });
        while (fams.size() < 2) fams.emplace_back(std::vector<Id>{}, -1);
        if (9 * fams[0].first.size() < n_ && 9 * fams[1].first.size() < n_) {
          d.w[i] = w;
          d.f2_w[i] = fams[0].first;
          d.f3_w[i] = fams[1].first;
          break;
        }
        w = fams[0].second;
      }
      walk_steps += steps;
      d.gamma_plus[i] = below(d.w[i]);
      if (9 * d.gamma_plus[i].size() < n_) throw InvariantViolation("walk ended with |Γ⁺(w)| < n/9");

      std::vector<char> on_path(tree_.size(), 0);
      for (int x = d.w[i]; x != v; x = parent[x]) on_path[x] = 1;
      std::vector<Id> touching;
      for (Id id : d.f_branch[i]) {
        const auto& sub = fam_.members()[fam_.index_of(id)].subtree;
        auto vs = sub.vertices();
        if (std::any_of(vs.begin(), vs.end(), [&](int x) { return on_path[x] != 0; })) touching.push_back(id);
      }
      d.g[i] = touching;
      d.h[i] = minus(minus(d.f_branch[i], d.g[i]), d.gamma_plus[i]);
    }

    for (Id id : d.f_v) {
      const auto& sub = fam_.members()[fam_.index_of(id)].subtree;
      bool has[3] = {sub.contains(d.w[0]), sub.contains(d.w[1]), sub.contains(d.w[2])};
      int count = has[0] + has[1] + has[2];
      if (count == 0) {
        d.x_none.push_back(id);
      } else if (count == 1) {
        d.x[has[0] ? 0 : has[1] ? 1 : 2].push_back(id);
      }
      if (has[0] && has[1]) d.y12.push_back(id);
      if (has[0] && has[2]) d.y13.push_back(id);
      if (has[1] && has[2]) d.y23.push_back(id);
    }

    if (trace) {
      trace->decomposition = d;
      trace->claim_walk_steps = walk_steps;
    }

    // Step 4: X_∅ ∪ X_i ∪ F_i(v) misses everything below w_j and w_l.
    for (int i = 0; i < 3; ++i) {
      auto side = merged({&d.x_none, &d.x[i], &d.f_branch[i]});
      if (side.size() >= target_) {
        exit_step_ = 4;
        int j = (i + 1) % 3, l = (i + 2) % 3;
        auto other = merged({&d.gamma_plus[j], &d.gamma_plus[l]});
        return checked(make_certificate(BicliqueKind::empty, side, other, target_));
      }
    }

    // Step 5: a pair of Y-families sharing index a holds more than 2n/9 members.
    const std::array<std::vector<Id>, 3> y_pairs = {merged({&d.y12, &d.y13}), merged({&d.y12, &d.y23}),
                                                    merged({&d.y13, &d.y23})};
    int a = -1;
    for (int i = 0; i < 3 && a < 0; ++i) {
      if (9 * y_pairs[i].size() > 2 * n_) a = i;
    }
    if (a < 0) throw InvariantViolation("no Y pair exceeds 2n/9");
    std::vector<Id> y(y_pairs[a].begin(), y_pairs[a].begin() + static_cast<std::ptrdiff_t>(target_));
    auto rest = minus(d.f_v, y);
    auto other = merged({&rest, &d.g[a]});
    if (other.size() >= target_) {
      exit_step_ = 5;
      return checked(make_certificate(BicliqueKind::complete, y, other, target_));
    }

    // Step 6: five pairwise disjoint families, split greedily into two halves.
    exit_step_ = 6;
    int b = (a + 1) % 3, c = (a + 2) % 3;
    if (b > c) std::swap(b, c);
    std::vector<Id> s1 = d.f_branch[b], s2 = d.f_branch[c];
    for (const auto* extra : {&d.h[a], &d.f2_w[a], &d.f3_w[a]}) {
      auto& dst = s1.size() <= s2.size() ? s1 : s2;
      dst.insert(dst.end(), extra->begin(), extra->end());
    }
    return checked(make_certificate(BicliqueKind::empty, s1, s2, target_));
  }

  const SubtreeFamily& fam_;
  const Tree& tree_;
  std::size_t n_;
  std::size_t target_ = 0;
  int exit_step_ = -1;
};

}  // namespace

BicliqueCertificate seh_chordal(const SubtreeFamily& input, ChordalTrace* trace) {
  if (input.size() == 0) throw InputError("seh_chordal needs at least one subtree");
  SubtreeFamily fam = normalize_subtrees(input);
  if (trace) {
    *trace = ChordalTrace{};
    trace->n = fam.size();
    trace->ambient_size = static_cast<std::size_t>(fam.ambient().size());
  }
  if (fam.ambient().is_path()) {
    if (trace) trace->exit_step = 0;
    return seh_interval(path_family_as_intervals(fam));
  }
  ChordalSolver solver(fam);
  BicliqueCertificate cert = solver.run(trace);
  if (trace) trace->exit_step = solver.exit_step();
  auto report = verify_certificate(fam, cert, seh_chordal_guarantee(fam.size()));
  if (!report.valid) throw InvariantViolation("chordal certificate failed self-check: " + report.reason);
  return cert;
}

std::string ChordalTrace::table() const {
  std::ostringstream os;
  os << "# exit_step " << exit_step << "\n# n " << n << "\n# ambient_vertices " << ambient_size << "\n";
  if (!decomposition) return os.str();
  const auto& d = *decomposition;
  auto row = [&](const std::string& name, std::size_t a, std::size_t b, std::size_t c) {
    os << "# " << std::left << std::setw(10) << name << ' ' << a << ' ' << b << ' ' << c << "\n";
  };
  os << "# center " << d.center << "\n# |F_v| " << d.f_v.size() << "\n";
  os << "# family     i=1 i=2 i=3\n";
  row("F_i(v)", d.f_branch[0].size(), d.f_branch[1].size(), d.f_branch[2].size());
  row("w_i", static_cast<std::size_t>(d.w[0]), static_cast<std::size_t>(d.w[1]), static_cast<std::size_t>(d.w[2]));
  row("Gamma+", d.gamma_plus[0].size(), d.gamma_plus[1].size(), d.gamma_plus[2].size());
  row("F_2(w_i)", d.f2_w[0].size(), d.f2_w[1].size(), d.f2_w[2].size());
  row("F_3(w_i)", d.f3_w[0].size(), d.f3_w[1].size(), d.f3_w[2].size());
  row("G_i", d.g[0].size(), d.g[1].size(), d.g[2].size());
  row("H_i", d.h[0].size(), d.h[1].size(), d.h[2].size());
  row("X_i", d.x[0].size(), d.x[1].size(), d.x[2].size());
  os << "# X_none " << d.x_none.size() << "\n# Y_12 " << d.y12.size() << "\n# Y_13 " << d.y13.size()
     << "\n# Y_23 " << d.y23.size() << "\n";
  return os.str();
}

}  // namespace ehcert
