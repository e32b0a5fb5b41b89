#include <gtest/gtest.h>
#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <set>

#include "ehcert/cotree.hpp"
#include "ehcert/errors.hpp"
#include "ehcert/extremal.hpp"
#include "ehcert/io.hpp"
#include "ehcert/oracle.hpp"
#include "random_instances.hpp"

using namespace ehcert;
namespace tst = ehcert::testing;

namespace {

constexpr int kCap = 64;

std::vector<int> parts_of(const SubtreeFamily& fam) {
  std::vector<int> out;
  for (const auto& m : fam.members()) out.push_back(*m.part);
  return out;
}

// C(k,a) C(n,b) 2^(1-ab) with GMP.
mpq_class gmp_expectation(int k, int n, int a, int b) {
  mpz_class ck, cn, pow2;
  mpz_bin_uiui(ck.get_mpz_t(), k, a);
  mpz_bin_uiui(cn.get_mpz_t(), n, b);
  long e = 1 - static_cast<long>(a) * b;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
  mpq_class out(ck * cn);
  if (e >= 0) {
    out *= pow2;
  } else {
    out /= pow2;
  }
  out.canonicalize();
  return out;
}

// Largest min(w1*|A|, w2*|B|) over A in part 1, B in part 2 with a uniform
// cross relation, by enumerating both subsets directly.
std::size_t weighted_colorful_optimum(const Graph& g, const std::vector<int>& part, std::size_t w1, std::size_t w2) {
  std::vector<int> p1, p2;
  for (int v = 0; v < g.size(); ++v) (part[v] == 1 ? p1 : p2).push_back(v);
  std::size_t best = 0;
  for (unsigned ma = 1; ma < (1u << p1.size()); ++ma) {
    for (unsigned mb = 1; mb < (1u << p2.size()); ++mb) {
      bool all = true, none = true;
      for (std::size_t i = 0; i < p1.size(); ++i) {
        if (!(ma >> i & 1)) continue;
        for (std::size_t j = 0; j < p2.size(); ++j) {
          if (!(mb >> j & 1)) continue;
          (g.has_edge(p1[i], p2[j]) ? none : all) = false;
        }
      }
      if (!all && !none) continue;
      best = std::max(best, std::min(w1 * std::popcount(ma), w2 * std::popcount(mb)));
    }
  }
  return 2 * best;
}

}  // namespace

TEST(GenSehInterval, ListedIntervals) {
  auto fam = gen_seh_interval(1);
  ASSERT_EQ(fam.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(fam.members()[i].left, Rational(i));
    EXPECT_EQ(fam.members()[i].right, Rational(i + 1));
  }
}

TEST(GenSehInterval, OracleOptimum) {
  EXPECT_EQ(max_balanced_biclique(intersection_graph(gen_seh_interval(1))).size, 2u);
  auto fam = gen_seh_interval(3);
  EXPECT_EQ(fam.size(), 12u);
  EXPECT_EQ(max_balanced_biclique(intersection_graph(fam)).size, 6u);
}

TEST(GenSehCograph, TriangleAndIsolatedVertex) {
  Graph g = cotree_to_graph(gen_seh_cograph(1));
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));
  EXPECT_EQ(g.degree(3), 0);
  EXPECT_EQ(max_balanced_biclique(g).size, 2u);
  EXPECT_EQ(max_balanced_biclique(cotree_to_graph(gen_seh_cograph(2))).size, 4u);
}

TEST(GenSehChordal, NineListedSubtrees) {
  auto fam = gen_seh_chordal(1);
  ASSERT_EQ(fam.size(), 9u);
  EXPECT_EQ(fam.ambient().leaf_count(), 3);
  EXPECT_EQ(fam.members()[0].subtree, fam.members()[1].subtree);
  EXPECT_EQ(fam.members()[6].subtree, Subtree(fam.ambient().path(1, 2)));
  EXPECT_EQ(fam.members()[7].subtree, Subtree(fam.ambient().path(1, 3)));
  EXPECT_EQ(fam.members()[8].subtree, Subtree(fam.ambient().path(2, 3)));
  EXPECT_EQ(max_balanced_biclique(intersection_graph(fam)).size, 4u);
  EXPECT_EQ(max_balanced_biclique(intersection_graph(gen_seh_chordal(2)), kCap).size, 8u);
}

TEST(GenCehInterval, ListedIntervalsAndOptimum) {
  auto fam = gen_ceh_interval(1);
  ASSERT_EQ(fam.size(), 6u);
  const std::array<int, 6> lefts{0, 2, 4, 1, 3, 5};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(fam.members()[i].left, Rational(lefts[i]));
    EXPECT_EQ(*fam.members()[i].part, i < 3 ? 1 : 2);
  }
  for (int k : {1, 2}) {
    auto f = gen_ceh_interval(k);
    std::vector<int> part;
    for (const auto& m : f.members()) part.push_back(*m.part);
    EXPECT_EQ(max_colorful_biclique(intersection_graph(f), part).size, 2u * k);
  }
}

TEST(GenCehCograph, CrossGraphIsTheEightVertexPattern) {
  auto inst = gen_ceh_cograph(1);
  Graph g = cotree_to_graph(inst.cotree);
  // v1v6, v1v7, v2v5, v2v6, v3v5, v3v7, v4v8 with v_i -> i-1.
  std::set<std::pair<int, int>> h{{0, 5}, {0, 6}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 7}};
  std::array<int, 4> left{0, 1, 2, 3}, right{4, 5, 6, 7};
  bool iso = false;
  do {
    std::array<int, 4> r = right;
    do {
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) {
        for (int j = 0; j < 4 && ok; ++j) {
          ok = g.has_edge(left[i], r[j]) == (h.count({i, 4 + j}) > 0);
        }
      }
      iso |= ok;
    } while (!iso && std::next_permutation(r.begin(), r.end()));
  } while (!iso && std::next_permutation(left.begin(), left.end()));
  EXPECT_TRUE(iso);
  for (int k : {1, 2}) {
    auto in = gen_ceh_cograph(k);
    std::vector<int> part;
    for (Id id : in.cotree.leaves()) part.push_back(*in.partition.part_of(id));
    EXPECT_EQ(max_colorful_biclique(cotree_to_graph(in.cotree), part).size, 2u * k);
  }
}

TEST(BipartiteToSubtrees, MatchingGivesSingleLeaves) {
  Graph g(4, std::vector<Edge>{{0, 2}, {1, 3}});
  auto fam = bipartite_to_subtrees(g, 2);
  for (const auto& m : fam.members()) EXPECT_EQ(m.subtree.size(), 1u);
  EXPECT_TRUE(fam.adjacent(0, 2));
  EXPECT_TRUE(fam.adjacent(1, 3));
  EXPECT_FALSE(fam.adjacent(0, 3));
  EXPECT_FALSE(fam.adjacent(1, 2));
}

TEST(BipartiteToSubtrees, CompleteBipartiteGivesWholeStar) {
  std::vector<Edge> e;
  for (int i = 0; i < 2; ++i) {
    for (int x = 2; x < 5; ++x) e.emplace_back(i, x);
  }
  auto fam = bipartite_to_subtrees(Graph(5, e), 2);
  for (const auto& m : fam.members()) {
    if (*m.part == 1) EXPECT_EQ(static_cast<int>(m.subtree.size()), fam.ambient().size());
  }
  for (Id i = 0; i < 2; ++i) {
    for (Id x = 2; x < 5; ++x) EXPECT_TRUE(fam.adjacent(i, x));
  }
}

TEST(BipartiteToSubtrees, RandomCrossEdgesMatch) {
  tst::Rng rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = tst::random_bipartite(rng, 4, 6, 0.5);
    auto fam = bipartite_to_subtrees(g, 4);
    EXPECT_EQ(fam.ambient().leaf_count(), 4);
    for (int i = 0; i < 4; ++i) {
      for (int x = 4; x < 10; ++x) EXPECT_EQ(fam.adjacent(i, x), g.has_edge(i, x));
    }
  }
}

TEST(BipartiteToSubtrees, Errors) {
  EXPECT_THROW(bipartite_to_subtrees(Graph(3, std::vector<Edge>{}), 1), InputError);
  EXPECT_THROW(bipartite_to_subtrees(Graph(4, std::vector<Edge>{{0, 1}}), 2), InputError);
}

TEST(LowerBound, DimensionsAndDeterminism) {
  auto inst = gen_lower_bound(4, 6, 1);
  EXPECT_EQ(inst.a, 4);
  EXPECT_EQ(inst.b, 6);
  EXPECT_EQ(kab_dimensions(4, 6), std::make_pair(4, 6));
  auto again = gen_lower_bound(4, 6, 1);
  EXPECT_TRUE(again.graph == inst.graph);
  EXPECT_EQ(write_subtrees(again.family), write_subtrees(inst.family));
  for (int i = 0; i < 4; ++i) {
    for (int x = 4; x < 10; ++x) EXPECT_EQ(inst.family.adjacent(i, x), inst.graph.has_edge(i, x));
  }
}

TEST(LowerBound, DesktopRunCompletes) {
  auto inst = gen_lower_bound(6, 12, 7);
  EXPECT_NO_THROW(check_no_kab(inst.graph, 6, inst.a, inst.b));
  EXPECT_NO_THROW(check_no_kab(inst.graph, 6, 2, 3));
}

TEST(EqualizeSizes, CopyCounts) {
  Graph g(5, std::vector<Edge>{{0, 2}, {1, 3}});
  auto fam = bipartite_to_subtrees(g, 2);
  // Part 2 holds the two singletons, part 1 the three stars.
  auto one = equalize_sizes(fam, 1);
  auto p1 = Partition::from_labels(one.family);
  EXPECT_EQ(p1.count(1), 6u);
  EXPECT_EQ(p1.count(2), 6u);
  auto two = equalize_sizes(fam, 2);
  auto p2 = Partition::from_labels(two.family);
  EXPECT_EQ(p2.count(1), 12u);
  EXPECT_EQ(p2.count(2), 12u);
  for (const auto& m : two.family.members()) {
    for (const auto& o : two.family.members()) {
      if (m.id < o.id && *m.part != *o.part) {
        EXPECT_EQ(two.family.adjacent(m.id, o.id), fam.adjacent(two.origin.at(m.id), two.origin.at(o.id)));
      }
    }
  }
}

TEST(EqualizeSizes, OptimumScalesWithMultiplicities) {
  tst::Rng rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = tst::random_bipartite(rng, 2, 3, 0.5);
    auto fam = bipartite_to_subtrees(g, 2);
    auto eq = equalize_sizes(fam, 1);
    auto p = Partition::from_labels(fam);
    std::size_t n1 = p.count(1), n2 = p.count(2);
    Graph orig = intersection_graph(fam);
    std::size_t expect = weighted_colorful_optimum(orig, parts_of(fam), n2, n1);
    EXPECT_EQ(max_colorful_biclique(intersection_graph(eq.family), parts_of(eq.family)).size, expect);
  }
}

TEST(EqualizeSizes, OverflowRejected) {
  auto fam = bipartite_to_subtrees(Graph(4, std::vector<Edge>{{0, 2}}), 2);
  EXPECT_THROW(equalize_sizes(fam, 0), InputError);
  EXPECT_THROW(equalize_sizes(fam, std::uint64_t{1} << 62), InputError);
}

TEST(ExpectedKab, HandValue) {
  auto e = expected_kab(4, 4, 2, 2);
  EXPECT_EQ(e.exact.str(), "9/2");
  EXPECT_DOUBLE_EQ(e.approx, 4.5);
  EXPECT_EQ(e.str(), "4.5");
}

TEST(ExpectedKab, ZeroExponent) {
  auto e = expected_kab(5, 7, 1, 1);
  EXPECT_EQ(e.exact.str(), "35");
}

TEST(ExpectedKab, AgreesWithGmp) {
  for (auto [k, n, a, b] : std::vector<std::array<int, 4>>{{4, 6, 4, 6}, {10, 30, 3, 7}, {17, 200, 9, 97}, {6, 6, 0, 3}}) {
    EXPECT_EQ(expected_kab(k, n, a, b).exact.str(), gmp_expectation(k, n, a, b).get_str());
  }
}

TEST(ExpectedKab, SeventeenAtTenThousandIsBelowHalf) {
  auto e = expected_kab(17, 10000);
  auto [a, b] = kab_dimensions(17, 10000);
  EXPECT_EQ(e.a, a);
  EXPECT_EQ(e.b, b);
  mpq_class ref = gmp_expectation(17, 10000, a, b);
  EXPECT_EQ(e.exact.str(), ref.get_str());
  EXPECT_LT(2 * ref, 1);
  EXPECT_FALSE(e.str().empty());
}
