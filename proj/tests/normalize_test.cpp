#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ehcert/extremal.hpp"
#include "ehcert/normalize.hpp"
#include "random_instances.hpp"

using namespace ehcert;
namespace tst = ehcert::testing;

namespace {

std::multiset<int> degree_profile(const Tree& t) {
  std::multiset<int> out;
  for (int v = 0; v < t.size(); ++v) out.insert(t.degree(v));
  return out;
}

bool member_leaves_distinct(const SubtreeFamily& fam) {
  std::set<int> seen;
  for (const auto& m : fam.members()) {
    for (int v : m.subtree.leaves(fam.ambient())) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

}  // namespace

TEST(ReduceDegree, SplitsDegreeFourCenterIntoPath) {
  Tree star(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  SubtreeFamily fam(star, {{7, std::nullopt, Subtree({0})}});
  auto out = reduce_degree(fam);
  const Tree& t = out.ambient();
  EXPECT_EQ(t.size(), 8);
  EXPECT_LE(t.max_degree(), 3);
  EXPECT_EQ(t.leaf_count(), 4);
  const auto& s = out.members()[0].subtree;
  EXPECT_EQ(out.members()[0].id, 7);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_TRUE(t.is_connected_subset(s.vertices()));
  // The spine: every spine vertex touches exactly one original leaf.
  for (int v : s.vertices()) {
    int outside = 0;
    for (int w : t.neighbors(v)) outside += !s.contains(w);
    EXPECT_EQ(outside, 1);
  }
}

TEST(ReduceDegree, SubcubicInputUnchanged) {
  auto fam = gen_seh_chordal(1);
  auto out = reduce_degree(fam);
  EXPECT_TRUE(out.ambient() == fam.ambient());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    EXPECT_EQ(out.members()[i].subtree, fam.members()[i].subtree);
  }
}

TEST(SeparateLeaves, EqualSingletonsGetDistinctLeaves) {
  Tree star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  SubtreeFamily fam(star, {{1, std::nullopt, Subtree({1})}, {2, std::nullopt, Subtree({1})}});
  auto out = separate_leaves(fam);
  EXPECT_TRUE(member_leaves_distinct(out));
  EXPECT_TRUE(out.adjacent(1, 2));
  EXPECT_EQ(out.ambient().leaf_count(), 3);
}

TEST(SeparateLeaves, DisjointSingletonsUnchanged) {
  Tree star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  SubtreeFamily fam(star, {{1, std::nullopt, Subtree({1})}, {2, std::nullopt, Subtree({2})}});
  auto out = separate_leaves(fam);
  EXPECT_TRUE(out.ambient() == star);
  EXPECT_EQ(out.members()[0].subtree, fam.members()[0].subtree);
  EXPECT_EQ(out.members()[1].subtree, fam.members()[1].subtree);
}

TEST(SeparateLeaves, RandomFamilyKeepsGraph) {
  tst::Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    Tree t = tst::random_tree(rng, 12, 3);
    auto fam = tst::random_subtree_family(rng, t, 10, 5, false);
    auto out = separate_leaves(fam);
    EXPECT_TRUE(intersection_graph(out) == intersection_graph(fam));
    EXPECT_TRUE(member_leaves_distinct(out));
    EXPECT_EQ(out.ambient().leaf_count(), t.leaf_count());
  }
}

TEST(NormalizeSubtrees, NineSubtreeInstanceKeepsGraph) {
  auto fam = gen_seh_chordal(1);
  auto out = normalize_subtrees(fam);
  EXPECT_TRUE(intersection_graph(out) == intersection_graph(fam));
  EXPECT_TRUE(member_leaves_distinct(out));
}

TEST(NormalizeSubtrees, PropertiesAndIdempotence) {
  tst::Rng rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    Tree t = tst::random_tree(rng, tst::uniform(rng, 1, 20), tst::uniform(rng, 2, 7));
    auto fam = tst::random_subtree_family(rng, t, tst::uniform(rng, 1, 15), 6, rep % 2 == 0);
    auto once = normalize_subtrees(fam);
    EXPECT_TRUE(intersection_graph(once) == intersection_graph(fam));
    EXPECT_LE(once.ambient().max_degree(), 3);
    if (t.size() > 1) EXPECT_EQ(once.ambient().leaf_count(), t.leaf_count());
    EXPECT_TRUE(member_leaves_distinct(once));
    for (std::size_t i = 0; i < fam.size(); ++i) {
      EXPECT_EQ(once.members()[i].id, fam.members()[i].id);
      EXPECT_EQ(once.members()[i].part, fam.members()[i].part);
    }
    auto twice = normalize_subtrees(once);
    EXPECT_EQ(degree_profile(twice.ambient()), degree_profile(once.ambient()));
    EXPECT_TRUE(intersection_graph(twice) == intersection_graph(once));
  }
}

TEST(PerturbIntervals, TouchingPathStaysPath) {
  auto fam = gen_seh_interval(1);
  auto out = perturb_intervals(fam);
  std::set<Rational> ends;
  for (const auto& m : out.members()) {
    ends.insert(m.left);
    ends.insert(m.right);
  }
  EXPECT_EQ(ends.size(), 8u);
  Graph g = intersection_graph(out);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g == intersection_graph(fam));
}

TEST(PerturbIntervals, DistinctEndpointsKeepOrder) {
  IntervalFamily fam({{0, std::nullopt, Rational(1, 2), Rational(3)},
                      {1, std::nullopt, Rational(1), Rational(2)},
                      {2, std::nullopt, Rational(5, 2), Rational(4)}});
  auto out = perturb_intervals(fam);
  std::vector<std::pair<Rational, int>> before, after;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    before.emplace_back(fam.members()[i].left, 2 * i);
    before.emplace_back(fam.members()[i].right, 2 * i + 1);
    after.emplace_back(out.members()[i].left, 2 * i);
    after.emplace_back(out.members()[i].right, 2 * i + 1);
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  for (std::size_t i = 0; i < before.size(); ++i) EXPECT_EQ(before[i].second, after[i].second);
}

TEST(PerturbIntervals, ManyTiesKeepGraphAndParts) {
  tst::Rng rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    auto fam = tst::random_intervals(rng, 50, 20, true);
    auto out = perturb_intervals(fam);
    EXPECT_TRUE(intersection_graph(out) == intersection_graph(fam));
    for (std::size_t i = 0; i < fam.size(); ++i) EXPECT_EQ(out.members()[i].part, fam.members()[i].part);
  }
}

TEST(PathFamilyAsIntervals, MatchesSubtreeGraph) {
  tst::Rng rng(8);
  for (int rep = 0; rep < 30; ++rep) {
    Tree t = tst::random_tree(rng, 15, 2);
    auto fam = tst::random_subtree_family(rng, t, 12, 6, false);
    EXPECT_TRUE(intersection_graph(path_family_as_intervals(fam)) == intersection_graph(fam));
  }
}
