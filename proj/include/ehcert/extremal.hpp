#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ehcert/cotree.hpp"
#include "ehcert/family.hpp"
#include "ehcert/graph.hpp"

namespace ehcert {

/// Name written into instance headers for the generator's random source.
inline constexpr const char* kPrngName = "mt19937_64";

// Copy c of template member j gets id j*k + c throughout.

/// [0,1], [1,2], [2,3], [3,4], k copies each.
IntervalFamily gen_seh_interval(int k);
/// complement(K_k + K_k + K_k) + K_k; the outer clique holds ids 3k..4k-1.
Cotree gen_seh_cograph(int k);
/// Nine subtrees of the star with center 0 and leaves 1, 2, 3: two copies of each
/// leaf, then the three leaf-to-leaf paths; k copies each.
SubtreeFamily gen_seh_chordal(int k);
/// I_1..I_3 (part 1) then J_1..J_3 (part 2), k copies each.
IntervalFamily gen_ceh_interval(int k);

struct CographInstance {
  Cotree cotree;
  Partition partition;
};
/// Eight-vertex cograph with every vertex blown up into k independent copies.
/// v_1..v_4 form part 1 (ids 0..4k-1).
CographInstance gen_ceh_cograph(int k);

/// Star realization of a bipartite graph whose first side is 0..m-1.
///
/// Side-1 vertex i becomes the singleton leaf i+1 of a star centred at 0
/// (part 2); side-2 vertex x becomes the star spanned by its neighbours
/// (part 1), or the centre alone if x is isolated. Member ids are the
/// graph's vertex numbers.
SubtreeFamily bipartite_to_subtrees(const Graph& g, int m);

/// a = ceil(2 log2 k), b = ceil(2 n log2(k) / k), both with a 2^-40 guard.
std::pair<int, int> kab_dimensions(int k, int n);

struct LowerBoundInstance {
  Graph graph;  // side 1 = 0..k-1, side 2 = k..k+n-1
  SubtreeFamily family;
  int a = 0;
  int b = 0;
};

/// Each of the k*n cross pairs is an edge with probability 1/2.
LowerBoundInstance gen_lower_bound(int k, int n, std::uint64_t seed, std::optional<int> a = std::nullopt,
                                   std::optional<int> b = std::nullopt);

struct EqualizedFamily {
  SubtreeFamily family;
  std::map<Id, Id> origin;  // new id -> id it copies
};

/// |F_2|*t copies of every part-1 member and |F_1|*t of every part-2 member,
/// renumbered 0, 1, ... (part 1 first, in id order).
EqualizedFamily equalize_sizes(const SubtreeFamily& fam, std::uint64_t t);

struct ExpectedKab {
  int k = 0, n = 0, a = 0, b = 0;
  boost::multiprecision::cpp_rational exact;
  double approx = 0.0;

  /// Decimal rendering: plain for normal doubles, mantissa/exponent from
  /// exact logarithms when the value underflows or overflows.
  std::string str() const;
};

/// C(k,a) * C(n,b) * 2^(1-ab), with (a, b) from kab_dimensions unless given.
ExpectedKab expected_kab(int k, int n, std::optional<int> a = std::nullopt, std::optional<int> b = std::nullopt);

}  // namespace ehcert
