#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ehcert/certificate.hpp"
#include "ehcert/graph.hpp"

namespace ehcert {

inline constexpr int kDefaultOracleCap = 24;

/// Optimum found by an exhaustive search. `size` counts both sides (2t); the
/// certificate uses vertex numbers as ids.
struct OracleResult {
  std::size_t size = 0;
  BicliqueCertificate cert;
};

/// Largest t with disjoint A, B of size t, complete between them in g or in
/// its complement. Ties between the two go to g. Throws InputError above `cap`
/// (at most 64) vertices.
OracleResult max_balanced_biclique(const Graph& g, int cap = kDefaultOracleCap);

/// Same search restricted to one kind.
OracleResult max_biclique_of_kind(const Graph& g, BicliqueKind kind, int cap = kDefaultOracleCap);

/// As above with A inside part 1 and B inside part 2; part[v] is 1 or 2.
OracleResult max_colorful_biclique(const Graph& g, const std::vector<int>& part, int cap = kDefaultOracleCap);

/// True iff neither g nor its bipartite complement has a vertices among
/// 0..k-1 with b common neighbours among k..n-1. Throws InputError when the
/// number of a-subsets exceeds `max_subsets` or side 2 has more than 64 vertices.
bool check_no_kab(const Graph& g, int k, int a, int b, std::uint64_t max_subsets = 100'000'000);

}  // namespace ehcert
