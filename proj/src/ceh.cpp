#include "ehcert/ceh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "ehcert/errors.hpp"
#include "ehcert/normalize.hpp"
#include "ehcert/trunk.hpp"

namespace ehcert {
namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

bool balanced(std::size_t n1, std::size_t n2) { return (n1 > n2 ? n1 - n2 : n2 - n1) <= 1; }

void require_parts(std::size_t n1, std::size_t n2, bool allow_unbalanced) {
  if (n1 == 0 || n2 == 0) throw InputError("both parts must be nonempty");
  if (!allow_unbalanced && !balanced(n1, n2)) {
    throw InputError("parts have sizes " + std::to_string(n1) + " and " + std::to_string(n2) +
                     "; pass allow-unbalanced to accept this");
  }
}

template <class Family>
std::pair<std::size_t, std::size_t> part_sizes(const Family& fam) {
  std::size_t n1 = 0, n2 = 0;
  for (const auto& m : fam.members()) {
    if (!m.part) throw_missing_labels();
    (*m.part == 1 ? n1 : n2)++;
  }
  return {n1, n2};
}

// Raw answer: a from part 1, b from part 2, not truncated.
struct Sides {
  BicliqueKind kind = BicliqueKind::empty;
  std::vector<Id> a, b;
};

Sides interval_sides(std::vector<IntervalMember> members, int* case_out) {
  if (members.empty()) return {};
  IntervalFamily fam = perturb_intervals(IntervalFamily(std::move(members)));
  struct Span {
    std::int64_t left, right;
    Id id;
  };
  std::vector<Span> f[2];
  for (const auto& m : fam.members()) f[*m.part - 1].push_back({m.left.num(), m.right.num(), m.id});
  if (f[0].empty() || f[1].empty()) return {};

  std::int64_t a[2], b[2];
  for (int i = 0; i < 2; ++i) {
    std::vector<std::int64_t> rights, lefts;
    for (const auto& s : f[i]) {
      rights.push_back(s.right);
      lefts.push_back(s.left);
    }
    std::sort(rights.begin(), rights.end());
    std::sort(lefts.begin(), lefts.end(), std::greater<>());
    std::size_t c = ceil_div(f[i].size(), 3);
    a[i] = rights[c - 1];
    b[i] = lefts[c - 1];
  }
  auto pick = [](const std::vector<Span>& spans, auto pred) {
    std::vector<Id> out;
    for (const auto& s : spans) {
      if (pred(s)) out.push_back(s.id);
    }
    return out;
  };
  Sides out;
  if (a[0] < b[1]) {
    if (case_out) *case_out = 1;
    out.a = pick(f[0], [&](const Span& s) { return s.right <= a[0]; });
    out.b = pick(f[1], [&](const Span& s) { return s.left >= b[1]; });
    return out;
  }
  if (a[1] < b[0]) {
    if (case_out) *case_out = 1;
    out.a = pick(f[0], [&](const Span& s) { return s.left >= b[0]; });
    out.b = pick(f[1], [&](const Span& s) { return s.right <= a[1]; });
    return out;
  }
  if (case_out) *case_out = (a[0] < b[0] || a[1] < b[1]) ? 2 : 3;
  out.kind = BicliqueKind::complete;
  out.a = pick(f[0], [&](const Span& s) { return s.right >= a[0] && s.left <= b[0]; });
  out.b = pick(f[1], [&](const Span& s) { return s.right >= a[1] && s.left <= b[1]; });
  return out;
}

std::vector<IntervalMember> members_of(const IntervalFamily& fam) {
  return {fam.members().begin(), fam.members().end()};
}

void self_check(const VerifyReport& report, const char* what) {
  if (!report.valid) throw InvariantViolation(std::string(what) + " certificate failed self-check: " + report.reason);
}

/// Family restricted to a connected vertex set; members missing it are dropped.
SubtreeFamily restrict_to(const SubtreeFamily& fam, const std::vector<int>& keep) {
  const Tree& t = fam.ambient();
  std::vector<int> index(t.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<SubtreeMember> out;
  for (const auto& m : fam.members()) {
    std::vector<int> vs;
    for (int v : m.subtree.vertices()) {
      if (index[v] >= 0) vs.push_back(index[v]);
    }
    if (!vs.empty()) out.push_back({m.id, m.part, Subtree(std::move(vs))});
  }
  return SubtreeFamily(induced_tree(t, keep), std::move(out));
}

/// Branch index and position (0 = the leaf) of every off-trunk vertex.
struct BranchMap {
  std::vector<int> branch, pos;
};

BranchMap map_branches(const Tree& t, const TrunkData& td) {
  BranchMap bm{std::vector<int>(t.size(), -1), std::vector<int>(t.size(), -1)};
  for (std::size_t j = 0; j < td.branch_paths.size(); ++j) {
    const auto& path = td.branch_paths[j];
    for (std::size_t p = 0; p < path.size(); ++p) {
      bm.branch[path[p]] = static_cast<int>(j);
      bm.pos[path[p]] = static_cast<int>(p);
    }
  }
  return bm;
}

class TkSolver {
 public:
  explicit TkSolver(TkTrace* trace) : trace_(trace) {}

  Sides solve(const SubtreeFamily& input) {
    const int k = input.ambient().leaf_count();
    auto [n1, n2] = part_sizes(input);
    TkLevel level{k, n1, n2, 0, 0, ""};
    if (n1 == 0 || n2 == 0) {
      record(level, "one part empty");
      return {};
    }
    if (k <= 2) {
      record(level, "interval");
      return interval_sides(members_of(path_family_as_intervals(input)), nullptr);
    }
    SubtreeFamily fam = normalize_subtrees(input);
    const Tree& t = fam.ambient();
    TrunkData td = trunk(t);
    std::vector<char> in_r(t.size(), 0);
    for (int v : td.trunk) in_r[v] = 1;
    std::vector<char> meets(fam.size(), 0);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto& m = fam.members()[i];
      auto vs = m.subtree.vertices();
      meets[i] = std::any_of(vs.begin(), vs.end(), [&](int v) { return in_r[v] != 0; });
      if (meets[i]) (*m.part == 1 ? level.meeting_trunk1 : level.meeting_trunk2)++;
    }
    const bool big1 = 3 * level.meeting_trunk1 >= 2 * n1;
    const bool big2 = 3 * level.meeting_trunk2 >= 2 * n2;
    if (big1 && big2) {
      record(level, "both-big");
      return solve(restrict_to(fam, td.trunk));
    }

    BranchMap bm = map_branches(t, td);
    std::vector<std::pair<int, int>> span(fam.size(), {-1, -1});  // (lo, hi) along the branch
    std::vector<int> branch_of(fam.size(), -1);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (meets[i]) continue;
      auto vs = fam.members()[i].subtree.vertices();
      int lo = t.size(), hi = -1;
      for (int v : vs) {
        if (bm.branch[v] < 0) throw InvariantViolation("off-trunk vertex outside every branch");
        lo = std::min(lo, bm.pos[v]);
        hi = std::max(hi, bm.pos[v]);
      }
      branch_of[i] = bm.branch[vs.front()];
      span[i] = {lo, hi};
    }

    if (!big1 && !big2) {
      record(level, "both-small");
      std::int64_t stride = 2;
      for (const auto& path : td.branch_paths) stride = std::max<std::int64_t>(stride, path.size() + 2);
      std::vector<IntervalMember> ivs;
      for (std::size_t i = 0; i < fam.size(); ++i) {
        if (meets[i]) continue;
        const auto& m = fam.members()[i];
        std::int64_t base = stride * branch_of[i];
        ivs.push_back({m.id, m.part, Rational(base + span[i].first), Rational(base + span[i].second)});
      }
      return interval_sides(std::move(ivs), nullptr);
    }

    const int big = big1 ? 1 : 2;
    record(level, "ladder big=" + std::to_string(big));
    return ladder(fam, td, meets, branch_of, span, big, big == 1 ? n1 : n2, big == 1 ? n2 : n1);
  }

 private:
  void record(TkLevel level, std::string action) {
    if (!trace_) return;
    level.action = std::move(action);
    trace_->levels.push_back(std::move(level));
  }

  Sides ladder(const SubtreeFamily& fam, const TrunkData& td, const std::vector<char>& meets,
               const std::vector<int>& branch_of, const std::vector<std::pair<int, int>>& span, int big,
               std::size_t n_big, std::size_t n_small) {
    const int k = static_cast<int>(td.leaves.size());
    const auto members = fam.members();
    LadderState st;
    st.big_part = big;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (meets[i] && *members[i].part == big) {
        current.push_back(i);
        st.f0.push_back(members[i].id);
      }
    }

    std::vector<std::vector<std::size_t>> h(k);
    std::vector<std::size_t> alt(k, 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (meets[i]) continue;
      ++alt[branch_of[i]];
      if (*members[i].part != big) h[branch_of[i]].push_back(i);
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return h[x].size() > h[y].size(); });

    for (int j : order) {
      LadderStage stage;
      stage.branch = j;
      stage.h_size = h[j].size();
      stage.h_alt_size = alt[j];
      if (h[j].empty()) {
        for (std::size_t i : current) stage.f.push_back(members[i].id);
        st.stages.push_back(std::move(stage));
        continue;
      }
      std::vector<int> his;
      for (std::size_t i : h[j]) his.push_back(span[i].second);
      std::sort(his.begin(), his.end());
      const int a_pos = his[ceil_div(his.size(), 2) - 1];
      const int pivot = td.branch_paths[j][a_pos];
      stage.pivot = pivot;
      for (std::size_t i : h[j]) {
        if (span[i].second != a_pos) continue;
        if (stage.witness) throw InvariantViolation("two branch members end at the same pivot");
        stage.witness = members[i].id;
      }
      std::vector<std::size_t> with, without;
      for (std::size_t i : current) (members[i].subtree.contains(pivot) ? with : without).push_back(i);
      if (2 * with.size() >= current.size()) {
        stage.flag = BicliqueKind::complete;
        current = std::move(with);
        for (std::size_t i : h[j]) {
          if (span[i].second >= a_pos) stage.h_prime.push_back(members[i].id);
        }
      } else {
        current = std::move(without);
        for (std::size_t i : h[j]) {
          if (span[i].second <= a_pos) stage.h_prime.push_back(members[i].id);
        }
      }
      for (std::size_t i : current) stage.f.push_back(members[i].id);
      st.stages.push_back(std::move(stage));
    }

    auto at = [&](int m) {
      std::vector<Id> complete, empty;
      for (int j = 0; j < m; ++j) {
        const auto& s = st.stages[j];
        auto& dst = s.flag == BicliqueKind::complete ? complete : empty;
        dst.insert(dst.end(), s.h_prime.begin(), s.h_prime.end());
      }
      Sides out;
      out.kind = complete.size() >= empty.size() ? BicliqueKind::complete : BicliqueKind::empty;
      out.b = out.kind == BicliqueKind::complete ? complete : empty;
      out.a = st.stages[m - 1].f;
      return out;
    };
    auto ratio = [&](const Sides& s) {
      return std::min(static_cast<double>(s.a.size()) / n_big, static_cast<double>(s.b.size()) / n_small);
    };

    const double lk = std::log(static_cast<double>(k));
    st.m_formula = std::clamp(static_cast<int>(std::floor(std::log2(k) - std::log2(lk))), 1, k);
    st.m_used = st.m_formula;
    Sides best = at(st.m_formula);
    const double eps = lk / (20.0 * k);
    if (ratio(best) < eps) {
      for (int m = 1; m <= k; ++m) {
        Sides cand = at(m);
        if (ratio(cand) > ratio(best)) {
          best = std::move(cand);
          st.m_used = m;
        }
      }
    }
    if (trace_) trace_->ladder = std::move(st);
    if (big == 2) std::swap(best.a, best.b);
    return best;
  }

  TkTrace* trace_;
};

Sides weak_solve(const SubtreeFamily& fam, TkTrace* trace) {
  const Tree& t = fam.ambient();
  const int k = t.leaf_count();
  auto [n1, n2] = part_sizes(fam);
  TkLevel level{k, n1, n2, 0, 0, ""};
  auto record = [&](std::string action) {
    if (!trace) return;
    level.action = std::move(action);
    trace->levels.push_back(level);
  };
  if (n1 == 0 || n2 == 0) {
    record("one part empty");
    return {};
  }
  if (k <= 2) {
    record("interval");
    return interval_sides(members_of(path_family_as_intervals(fam)), nullptr);
  }
  TrunkData td = trunk(t);
  const std::size_t n[3] = {0, n1, n2};
  const auto members = fam.members();

  auto on_path_mask = [&](std::size_t i) {
    std::vector<char> mask(t.size(), 0);
    for (int v : td.branch_paths[i]) mask[v] = 1;
    return mask;
  };
  for (std::size_t i = 0; i < td.leaves.size(); ++i) {
    auto mask = on_path_mask(i);
    std::size_t meet[3] = {0, 0, 0};
    for (const auto& m : members) {
      auto vs = m.subtree.vertices();
      if (std::any_of(vs.begin(), vs.end(), [&](int v) { return !mask[v]; })) ++meet[*m.part];
    }
    const auto k1 = static_cast<std::size_t>(k - 1), k2 = static_cast<std::size_t>(k - 2);
    if (meet[1] >= ceil_div(k2 * n1, k1) && meet[2] >= ceil_div(k2 * n2, k1)) {
      level.meeting_trunk1 = meet[1];
      level.meeting_trunk2 = meet[2];
      record("drop leaf " + std::to_string(td.leaves[i]));
      std::vector<int> rest;
      for (int v = 0; v < t.size(); ++v) {
        if (!mask[v]) rest.push_back(v);
      }
      return weak_solve(restrict_to(fam, rest), trace);
    }
  }

  auto mask = on_path_mask(0);
  std::vector<int> pos(t.size(), -1);
  for (std::size_t p = 0; p < td.branch_paths[0].size(); ++p) pos[td.branch_paths[0][p]] = static_cast<int>(p);
  auto inside = [&](const SubtreeMember& m) {
    auto vs = m.subtree.vertices();
    return std::all_of(vs.begin(), vs.end(), [&](int v) { return mask[v] != 0; });
  };
  auto outside = [&](const SubtreeMember& m) {
    auto vs = m.subtree.vertices();
    return std::none_of(vs.begin(), vs.end(), [&](int v) { return mask[v] != 0; });
  };
  std::size_t in_path[3] = {0, 0, 0};
  for (const auto& m : members) in_path[*m.part] += inside(m);
  const auto k1 = static_cast<std::size_t>(k - 1);
  int p = 0;
  if (in_path[1] >= ceil_div(n[1], k1)) {
    p = 1;
  } else if (in_path[2] >= ceil_div(n[2], k1)) {
    p = 2;
  } else {
    throw InvariantViolation("first branch holds too few members of either part");
  }
  const int q = 3 - p;
  std::vector<Id> path_p, rest_q;
  for (const auto& m : members) {
    if (*m.part == p && inside(m)) path_p.push_back(m.id);
    if (*m.part == q && outside(m)) rest_q.push_back(m.id);
  }
  if (rest_q.size() >= ceil_div(n[q], k1)) {
    record("split at leaf " + std::to_string(td.leaves[0]));
    Sides out;
    out.a = std::move(path_p);
    out.b = std::move(rest_q);
    if (p == 2) std::swap(out.a, out.b);
    return out;
  }
  record("interval on branch of leaf " + std::to_string(td.leaves[0]));
  std::vector<IntervalMember> ivs;
  for (const auto& m : members) {
    if (*m.part == p ? !inside(m) : outside(m)) continue;
    int lo = t.size(), hi = -1;
    for (int v : m.subtree.vertices()) {
      if (!mask[v]) continue;
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    ivs.push_back({m.id, m.part, Rational(lo), Rational(hi)});
  }
  return interval_sides(std::move(ivs), nullptr);
}

}  // namespace

std::size_t ceh_interval_guarantee(std::size_t n1, std::size_t n2) {
  if (balanced(n1, n2)) return (n1 + n2) / 6;
  return std::min(ceil_div(n1, 3), ceil_div(n2, 3));
}

std::size_t ceh_tk_guarantee(int k, std::size_t n) {
  if (k <= 2) return n / 6;
  const double value = std::log(static_cast<double>(k)) / (20.0 * k) * static_cast<double>(n) / 2.0;
  return static_cast<std::size_t>(std::max(0.0, std::floor(value - std::ldexp(1.0, -40))));
}

std::size_t ceh_tk_weak_guarantee(int k, std::size_t n) {
  if (k <= 2) return n / 6;
  return n / (6 * static_cast<std::size_t>(k - 1));
}

BicliqueCertificate ceh_interval(const IntervalFamily& fam, bool allow_unbalanced, int* case_out) {
  auto [n1, n2] = part_sizes(fam);
  require_parts(n1, n2, allow_unbalanced);
  Sides s = interval_sides(members_of(fam), case_out);
  const std::size_t target = ceh_interval_guarantee(n1, n2);
  auto cert = make_certificate(s.kind, s.a, s.b, target);
  Partition partition = Partition::from_labels(fam);
  self_check(verify_certificate(fam, cert, target, &partition), "interval");
  return cert;
}

BicliqueCertificate ceh_cograph(const Cotree& ct, const Partition& partition, bool allow_unbalanced) {
  const auto leaves = ct.leaves();
  std::vector<Id> v1, v2;
  for (Id id : leaves) {
    auto part = partition.part_of(id);
    if (!part) throw InputError("vertex " + std::to_string(id) + " has no part label");
    (*part == 1 ? v1 : v2).push_back(id);
  }
  if (partition.size() != leaves.size()) throw InputError("partition names ids that are not cotree leaves");
  require_parts(v1.size(), v2.size(), allow_unbalanced);

  auto conform = conforming_subset(ct, v1);
  Graph g = cotree_to_graph(ct);
  std::vector<char> in_w(leaves.size(), 0);
  for (Id id : conform.w) in_w[ct.index_of_leaf(id)] = 1;
  // 0 = in W, 1 = sees all of W, 2 = sees none of W
  auto side = [&](Id id) {
    int iv = ct.index_of_leaf(id);
    if (in_w[iv]) return 0;
    std::size_t hits = 0;
    for (int nb : g.neighbors(iv)) hits += in_w[nb];
    if (hits == conform.w.size()) return 1;
    if (hits == 0) return 2;
    throw InvariantViolation("W does not conform to vertex " + std::to_string(id));
  };
  auto split = [&](const std::vector<Id>& part, std::vector<Id> (&out)[3]) {
    for (Id id : part) out[side(id)].push_back(id);
  };
  std::vector<Id> s1[3], s2[3];
  split(v1, s1);
  split(v2, s2);

  BicliqueKind kind;
  std::vector<Id> u1, u2;
  auto larger = [&](std::vector<Id> (&s)[3], std::vector<Id>& dst) {
    kind = s[1].size() >= s[2].size() ? BicliqueKind::complete : BicliqueKind::empty;
    dst = kind == BicliqueKind::complete ? s[1] : s[2];
  };
  if (2 * s2[0].size() < v2.size()) {
    u1 = s1[0];
    larger(s2, u2);
  } else {
    u2 = s2[0];
    larger(s1, u1);
  }
  const std::size_t t1 = v1.size() / 4, t2 = v2.size() / 4;
  auto cert = make_certificate(kind, u1, u2, t1, t2);
  self_check(verify_certificate(ct, cert, 0, &partition), "cograph");
  if (cert.side_a.size() < t1 || cert.side_b.size() < t2) {
    throw InvariantViolation("cograph colorful sides fall below |V_i|/4");
  }
  return cert;
}

BicliqueCertificate ceh_tk(const SubtreeFamily& fam, bool allow_unbalanced, TkTrace* trace) {
  auto [n1, n2] = part_sizes(fam);
  require_parts(n1, n2, allow_unbalanced);
  if (trace) *trace = TkTrace{};
  const int k = fam.ambient().leaf_count();
  if (k <= 2) {
    if (trace) trace->levels.push_back({k, n1, n2, 0, 0, "interval"});
    return ceh_interval(path_family_as_intervals(fam), allow_unbalanced);
  }
  TkSolver solver(trace);
  Sides s = solver.solve(fam);
  auto cert = make_certificate(s.kind, s.a, s.b, ceh_tk_guarantee(k, fam.size()));
  Partition partition = Partition::from_labels(fam);
  self_check(verify_certificate(fam, cert, 0, &partition), "tree");
  return cert;
}

BicliqueCertificate ceh_tk_weak(const SubtreeFamily& fam, bool allow_unbalanced, TkTrace* trace) {
  auto [n1, n2] = part_sizes(fam);
  require_parts(n1, n2, allow_unbalanced);
  if (trace) *trace = TkTrace{};
  const int k = fam.ambient().leaf_count();
  if (k <= 2) {
    if (trace) trace->levels.push_back({k, n1, n2, 0, 0, "interval"});
    return ceh_interval(path_family_as_intervals(fam), allow_unbalanced);
  }
  Sides s = weak_solve(fam, trace);
  auto cert = make_certificate(s.kind, s.a, s.b, ceh_tk_weak_guarantee(k, fam.size()));
  Partition partition = Partition::from_labels(fam);
  self_check(verify_certificate(fam, cert, 0, &partition), "tree");
  return cert;
}

std::string TkTrace::table() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& l = levels[i];
    os << "# level " << i << " k=" << l.k << " parts=" << l.part1 << '/' << l.part2 << " trunk=" << l.meeting_trunk1
       << '/' << l.meeting_trunk2 << ' ' << l.action << "\n";
  }
  if (ladder) {
    os << "# ladder big_part=" << ladder->big_part << " |F0|=" << ladder->f0.size() << " m_formula=" << ladder->m_formula
       << " m_used=" << ladder->m_used << "\n";
    os << "# stage branch |H| |H_alt| pivot flag |F| |H'|\n";
    for (std::size_t j = 0; j < ladder->stages.size(); ++j) {
      const auto& s = ladder->stages[j];
      os << "# " << j + 1 << ' ' << s.branch << ' ' << s.h_size << ' ' << s.h_alt_size << ' ' << s.pivot << ' '
         << to_string(s.flag) << ' ' << s.f.size() << ' ' << s.h_prime.size() << "\n";
    }
  }
  return os.str();
}

}  // namespace ehcert
