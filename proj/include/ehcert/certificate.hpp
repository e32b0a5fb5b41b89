#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ehcert/family.hpp"
#include "ehcert/graph.hpp"

namespace ehcert {

enum class BicliqueKind { complete, empty };

const char* to_string(BicliqueKind kind);

/// Two disjoint id sets, either fully intersecting (complete) or fully
/// disjoint (empty) across sides. Sides are kept sorted ascending.
struct BicliqueCertificate {
  BicliqueKind kind = BicliqueKind::empty;
  std::vector<Id> side_a;
  std::vector<Id> side_b;

  friend bool operator==(const BicliqueCertificate&, const BicliqueCertificate&) = default;
};

/// Builds a certificate from raw sides: sorts them and keeps the smallest ids.
///
/// Each side is cut to max(target, 1) elements (so a degenerate target of 0
/// still yields a nonempty certificate when one exists); if either side is
/// empty both are cleared.
BicliqueCertificate make_certificate(BicliqueKind kind, std::vector<Id> a, std::vector<Id> b,
                                     std::size_t target_a, std::size_t target_b);
inline BicliqueCertificate make_certificate(BicliqueKind kind, std::vector<Id> a, std::vector<Id> b,
                                            std::size_t target) {
  return make_certificate(kind, std::move(a), std::move(b), target, target);
}

struct VerifyReport {
  bool valid = false;
  std::string reason;
};

/// Checks side sizes, the cross-pair relation and (optionally) that side A
/// lies in part 1 and side B in part 2.
///
/// Throws InputError for ids the instance does not know and for overlapping sides.
VerifyReport verify_certificate(const IntervalFamily& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition = nullptr);
VerifyReport verify_certificate(const SubtreeFamily& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition = nullptr);
/// Graph ids are vertex numbers.
VerifyReport verify_certificate(const Graph& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition = nullptr);

/// Shared implementation behind the overloads.
VerifyReport verify_with(const std::function<bool(Id)>& known, const std::function<bool(Id, Id)>& adjacent,
                         const BicliqueCertificate& cert, std::size_t min_side, const Partition* partition);

}  // namespace ehcert
