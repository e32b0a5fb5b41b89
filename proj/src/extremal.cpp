#include "ehcert/extremal.hpp"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "ehcert/errors.hpp"

namespace ehcert {
namespace {

namespace mp = boost::multiprecision;

void require_k(int k) {
  if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
}

std::vector<IntervalMember> copies(const std::vector<std::pair<int, int>>& spans, const std::vector<int>& parts, int k) {
  std::vector<IntervalMember> out;
  for (std::size_t j = 0; j < spans.size(); ++j) {
    for (int c = 0; c < k; ++c) {
      IntervalMember m{static_cast<Id>(j) * k + c, std::nullopt, Rational(spans[j].first), Rational(spans[j].second)};
      if (!parts.empty()) m.part = parts[j];
      out.push_back(m);
    }
  }
  return out;
}

// Block of k copies of one vertex that reads as an independent set once the
// given number of complements above it has been applied.
Cotree independent_block(Id first, int k, int complements_above) {
  if (k == 1) return Cotree::leaf(first);
  std::vector<Cotree> leaves;
  for (int c = 0; c < k; ++c) leaves.push_back(Cotree::leaf(first + c));
  Cotree u = Cotree::disjoint_union(std::move(leaves));
  return complements_above % 2 == 0 ? u : Cotree::complement(std::move(u));
}

mp::cpp_int binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  mp::cpp_int out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

double log10_of(const mp::cpp_int& v) {
  std::size_t top = mp::msb(v);
  if (top < 53) return std::log10(static_cast<double>(v));
  mp::cpp_int head = v >> (top - 52);
  return std::log10(static_cast<double>(head)) + static_cast<double>(top - 52) * std::log10(2.0);
}

int ceil_guarded(double x) { return static_cast<int>(std::ceil(x - std::ldexp(1.0, -40))); }

}  // namespace

IntervalFamily gen_seh_interval(int k) {
  require_k(k);
  return IntervalFamily(copies({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {}, k));
}

Cotree gen_seh_cograph(int k) {
  require_k(k);
  auto clique = [k](Id first) {
    if (k == 1) return Cotree::leaf(first);
    std::vector<Cotree> leaves;
    for (int c = 0; c < k; ++c) leaves.push_back(Cotree::leaf(first + c));
    return Cotree::complement(Cotree::disjoint_union(std::move(leaves)));
  };
  std::vector<Cotree> three;
  for (int j = 0; j < 3; ++j) three.push_back(clique(static_cast<Id>(j) * k));
  std::vector<Cotree> top;
  top.push_back(Cotree::complement(Cotree::disjoint_union(std::move(three))));
  top.push_back(clique(static_cast<Id>(3) * k));
  return Cotree::disjoint_union(std::move(top));
}

SubtreeFamily gen_seh_chordal(int k) {
  require_k(k);
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  const std::vector<std::vector<int>> shapes{{1}, {1}, {2}, {2}, {3}, {3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
  std::vector<SubtreeMember> members;
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    for (int c = 0; c < k; ++c) members.push_back({static_cast<Id>(j) * k + c, std::nullopt, Subtree(shapes[j])});
  }
  return SubtreeFamily(Tree(4, edges), std::move(members));
}

IntervalFamily gen_ceh_interval(int k) {
  require_k(k);
  return IntervalFamily(copies({{0, 1}, {2, 3}, {4, 5}, {1, 2}, {3, 4}, {5, 6}}, {1, 1, 1, 2, 2, 2}, k));
}

CographInstance gen_ceh_cograph(int k) {
  require_k(k);
  // Block of v_i starts at (i-1)*k; the counts are the complements above v_i in G_5.
  auto v = [k](int i, int complements) { return independent_block(static_cast<Id>(i - 1) * k, k, complements); };
  auto pair = [](Cotree x, Cotree y) {
    std::vector<Cotree> parts;
    parts.push_back(std::move(x));
    parts.push_back(std::move(y));
    return Cotree::disjoint_union(std::move(parts));
  };
  Cotree g1 = pair(v(1, 2), v(5, 2));
  Cotree g2 = pair(Cotree::complement(pair(v(2, 3), v(6, 3))), Cotree::complement(pair(v(3, 3), v(7, 3))));
  Cotree g3 = pair(Cotree::complement(std::move(g1)), Cotree::complement(std::move(g2)));
  Cotree g4 = Cotree::complement(pair(v(4, 1), v(8, 1)));
  Cotree g5 = pair(Cotree::complement(std::move(g3)), std::move(g4));
  std::map<Id, int> parts;
  for (Id id = 0; id < 8 * static_cast<Id>(k); ++id) parts[id] = id < 4 * static_cast<Id>(k) ? 1 : 2;
  return {std::move(g5), Partition(std::move(parts))};
}

SubtreeFamily bipartite_to_subtrees(const Graph& g, int m) {
  if (m < 2) throw InputError("the first side needs at least 2 vertices, got " + std::to_string(m));
  if (m > g.size()) throw InputError("first side larger than the graph");
  std::vector<Edge> star;
  for (int i = 0; i < m; ++i) star.emplace_back(0, i + 1);
  std::vector<SubtreeMember> members;
  for (int i = 0; i < m; ++i) {
    for (int nb : g.neighbors(i)) {
      if (nb < m) throw InputError("edge " + std::to_string(i) + "-" + std::to_string(nb) + " lies inside side 1");
    }
    members.push_back({i, 2, Subtree({i + 1})});
  }
  for (int x = m; x < g.size(); ++x) {
    std::vector<int> vs;
    for (int nb : g.neighbors(x)) {
      if (nb >= m) throw InputError("edge " + std::to_string(x) + "-" + std::to_string(nb) + " lies inside side 2");
      vs.push_back(nb + 1);
    }
    if (vs.size() != 1) vs.insert(vs.begin(), 0);
    members.push_back({x, 1, Subtree(std::move(vs))});
  }
  return SubtreeFamily(Tree(m + 1, star), std::move(members));
}

std::pair<int, int> kab_dimensions(int k, int n) {
  const double c = 2.0 * std::log2(static_cast<double>(k)) / k;
  return {ceil_guarded(c * k), ceil_guarded(c * n)};
}

LowerBoundInstance gen_lower_bound(int k, int n, std::uint64_t seed, std::optional<int> a, std::optional<int> b) {
  if (k < 2) throw InputError("k must be at least 2");
  if (n < k) throw InputError("n must be at least k");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < n; ++x) {
      if (rng() >> 63) edges.emplace_back(i, k + x);
    }
  }
  LowerBoundInstance out;
  out.graph = Graph(k + n, edges);
  out.family = bipartite_to_subtrees(out.graph, k);
  auto dims = kab_dimensions(k, n);
  out.a = a.value_or(dims.first);
  out.b = b.value_or(dims.second);
  return out;
}

EqualizedFamily equalize_sizes(const SubtreeFamily& fam, std::uint64_t t) {
  if (t < 1) throw InputError("t must be at least 1");
  std::uint64_t n1 = 0, n2 = 0;
  for (const auto& m : fam.members()) {
    if (!m.part) throw_missing_labels();
    (*m.part == 1 ? n1 : n2)++;
  }
  std::uint64_t per_side = 0;
  constexpr std::uint64_t kLimit = 50'000'000;
  if (__builtin_mul_overflow(n1 * n2, t, &per_side) || per_side > kLimit) {
    throw InputError("equalized family would exceed " + std::to_string(kLimit) + " members per part");
  }
  EqualizedFamily out;
  std::vector<SubtreeMember> members;
  Id next = 0;
  for (int part : {1, 2}) {
    const std::uint64_t reps = (part == 1 ? n2 : n1) * t;
    for (const auto& m : fam.members()) {
      if (*m.part != part) continue;
      for (std::uint64_t r = 0; r < reps; ++r) {
        out.origin[next] = m.id;
        members.push_back({next++, part, m.subtree});
      }
    }
  }
  out.family = SubtreeFamily(fam.ambient(), std::move(members));
  return out;
}

ExpectedKab expected_kab(int k, int n, std::optional<int> a, std::optional<int> b) {
  if (k < 1 || n < 1) throw InputError("k and n must be positive");
  auto dims = kab_dimensions(std::max(k, 2), n);
  ExpectedKab out;
  out.k = k;
  out.n = n;
  out.a = a.value_or(dims.first);
  out.b = b.value_or(dims.second);
  if (out.a < 0 || out.b < 0) throw InputError("a and b must be non-negative");
  const std::int64_t exponent = 1 - static_cast<std::int64_t>(out.a) * out.b;
  mp::cpp_int count = binomial(k, out.a) * binomial(n, out.b);
  mp::cpp_int power = mp::cpp_int(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  out.exact = exponent >= 0 ? mp::cpp_rational(count * power) : mp::cpp_rational(count, power);
  out.approx = static_cast<double>(out.exact);
  return out;
}

std::string ExpectedKab::str() const {
  std::ostringstream os;
  if (exact == 0 || (std::isnormal(approx) && approx != HUGE_VAL)) {
    os << approx;
    return os.str();
  }
  const double l = log10_of(mp::numerator(exact)) - log10_of(mp::denominator(exact));
  double e = std::floor(l);
  double mantissa = std::pow(10.0, l - e);
  if (mantissa >= 9.999995) {
    mantissa /= 10.0;
    e += 1.0;
  }
  os << std::setprecision(6) << mantissa << 'e' << static_cast<long long>(e);
  return os.str();
}

}  // namespace ehcert
