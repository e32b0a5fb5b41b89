#pragma once

#include "ehcert/family.hpp"

namespace ehcert {

/// Replaces every ambient vertex v of degree d >= 4 (ascending id order) by a
/// path v_1..v_d, with v_i adjacent to the i-th smallest former neighbour of v.
/// v_1 keeps the id of v; v_2..v_d get fresh ids n, n+1, ...
/// Members that contained v contain the whole path afterwards.
SubtreeFamily reduce_degree(const SubtreeFamily& fam);

/// Makes every ambient vertex a leaf of at most one member, by subdividing an
/// edge at the shared leaf and growing one of the members into the new vertex.
/// A pendant vertex is added first when the leaf has no free neighbour.
SubtreeFamily separate_leaves(const SubtreeFamily& fam);

/// reduce_degree followed by separate_leaves. Throws InvariantViolation if the
/// result still has a vertex of degree > 3.
SubtreeFamily normalize_subtrees(const SubtreeFamily& fam);

/// Re-embeds all endpoints at distinct integers 0..2n-1 without changing the
/// intersection graph. At equal coordinates left endpoints come first, so
/// touching intervals keep intersecting.
IntervalFamily perturb_intervals(const IntervalFamily& fam);

/// Interval view of a family whose ambient tree is a path (or a single vertex):
/// path positions become coordinates.
IntervalFamily path_family_as_intervals(const SubtreeFamily& fam);

}  // namespace ehcert
