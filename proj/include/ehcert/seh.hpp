#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ehcert/certificate.hpp"
#include "ehcert/cotree.hpp"
#include "ehcert/family.hpp"

namespace ehcert {

/// Side size each finder promises for an instance with n members.
inline std::size_t seh_interval_guarantee(std::size_t n) { return n / 4; }
inline std::size_t seh_cograph_guarantee(std::size_t n) { return n / 4; }
inline std::size_t seh_chordal_guarantee(std::size_t n) { return 2 * n / 9; }

/// Sweep for a point x0 with as many intervals entirely left of it as right of
/// it; either those two groups or the intervals through x0 give the answer.
BicliqueCertificate seh_interval(const IntervalFamily& fam);

/// Conforming subset W of all vertices, paired with the larger conformity class outside W.
BicliqueCertificate seh_cograph(const Cotree& ct);

/// Every subfamily of the chordal decomposition around a balanced center v.
/// Index i = 0, 1, 2 stands for branch i+1.
struct ChordalDecomposition {
  int center = -1;
  std::array<std::vector<int>, 3> components;  // C_i(v), vertex sets
  std::vector<Id> f_v;
  std::array<std::vector<Id>, 3> f_branch;   // F_i(v)
  std::array<int, 3> w{-1, -1, -1};           // w_i
  std::array<std::vector<Id>, 3> gamma_plus;  // Γ⁺(w_i)
  std::array<std::vector<Id>, 3> f2_w;        // F_2(w_i)
  std::array<std::vector<Id>, 3> f3_w;        // F_3(w_i)
  std::array<std::vector<Id>, 3> g;           // G_i
  std::array<std::vector<Id>, 3> h;           // H_i
  std::vector<Id> x_none;
  std::array<std::vector<Id>, 3> x;           // X_i
  std::vector<Id> y12, y13, y23;
};

struct ChordalTrace {
  /// 0 = delegated to intervals, 1 = clique at a vertex, 2 = two big
  /// components or an orientation edge, 4..6 = decomposition exits.
  int exit_step = -1;
  std::size_t n = 0;
  std::size_t ambient_size = 0;
  std::optional<ChordalDecomposition> decomposition;
  std::size_t claim_walk_steps = 0;

  /// Human-readable table of the decomposition sizes.
  std::string table() const;
};

/// Runs the full cascade on the normalized representation. Throws
/// InvariantViolation if no exit fires, which the underlying argument rules out.
BicliqueCertificate seh_chordal(const SubtreeFamily& fam, ChordalTrace* trace = nullptr);

}  // namespace ehcert
