#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ehcert/certificate.hpp"
#include "ehcert/cotree.hpp"
#include "ehcert/family.hpp"

namespace ehcert {

/// Per-side promise for interval instances with part sizes n1, n2: n/6 when
/// the parts are balanced, min(ceil(n1/3), ceil(n2/3)) otherwise.
std::size_t ceh_interval_guarantee(std::size_t n1, std::size_t n2);

/// floor(ln k / (20k) * n/2), rounded down with a 2^-40 guard; n/6 for k <= 2.
std::size_t ceh_tk_guarantee(int k, std::size_t n);

/// floor(n / (6(k-1))); n/6 for k <= 2.
std::size_t ceh_tk_weak_guarantee(int k, std::size_t n);

/// Side A comes from part 1, side B from part 2. Parts must both be nonempty
/// and differ by at most one member unless `allow_unbalanced` is set.
///
/// `case_out` receives 1 (disjoint thirds), 2 or 3 (both middles).
BicliqueCertificate ceh_interval(const IntervalFamily& fam, bool allow_unbalanced = false, int* case_out = nullptr);

/// Sides U_i drawn from part i, each of size floor(|V_i|/4).
BicliqueCertificate ceh_cograph(const Cotree& ct, const Partition& partition, bool allow_unbalanced = false);

struct LadderStage {
  int branch = -1;               // index into the leaf list of the ambient tree
  std::size_t h_size = 0;        // |H_j|, small-part members inside the branch
  std::size_t h_alt_size = 0;    // members of either part inside the branch
  int pivot = -1;                // a_j, -1 when H_j is empty
  std::optional<Id> witness;     // X_j
  BicliqueKind flag = BicliqueKind::empty;
  std::vector<Id> f;             // F^(j)
  std::vector<Id> h_prime;       // H'_j
};

struct LadderState {
  int big_part = 1;
  std::vector<Id> f0;
  std::vector<LadderStage> stages;
  int m_formula = 1;
  int m_used = 1;
};

struct TkLevel {
  int k = 0;
  std::size_t part1 = 0, part2 = 0;
  std::size_t meeting_trunk1 = 0, meeting_trunk2 = 0;
  std::string action;
};

struct TkTrace {
  std::vector<TkLevel> levels;
  std::optional<LadderState> ladder;

  std::string table() const;
};

/// Colorful finder on a subtree family with k-leaf ambient tree.
BicliqueCertificate ceh_tk(const SubtreeFamily& fam, bool allow_unbalanced = false, TkTrace* trace = nullptr);

/// Leaf-deletion induction with the weaker 1/(3(k-1)) constant.
BicliqueCertificate ceh_tk_weak(const SubtreeFamily& fam, bool allow_unbalanced = false, TkTrace* trace = nullptr);

}  // namespace ehcert
