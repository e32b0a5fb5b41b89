#include "ehcert/certificate.hpp"

#include <algorithm>
#include <set>

#include "ehcert/errors.hpp"

namespace ehcert {

const char* to_string(BicliqueKind kind) { return kind == BicliqueKind::complete ? "complete" : "empty"; }

BicliqueCertificate make_certificate(BicliqueKind kind, std::vector<Id> a, std::vector<Id> b,
                                     std::size_t target_a, std::size_t target_b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.empty() || b.empty()) return {kind, {}, {}};
  a.resize(std::min(a.size(), std::max<std::size_t>(target_a, 1)));
  b.resize(std::min(b.size(), std::max<std::size_t>(target_b, 1)));
  return {kind, std::move(a), std::move(b)};
}

VerifyReport verify_with(const std::function<bool(Id)>& known, const std::function<bool(Id, Id)>& adjacent,
                         const BicliqueCertificate& cert, std::size_t min_side, const Partition* partition) {
  std::set<Id> seen;
  for (const auto* side : {&cert.side_a, &cert.side_b}) {
    for (Id id : *side) {
      if (!known(id)) throw InputError("certificate id " + std::to_string(id) + " is not in the instance");
    }
  }
  for (Id id : cert.side_a) {
    if (!seen.insert(id).second) throw InputError("certificate id " + std::to_string(id) + " repeated on side A");
  }
  for (Id id : cert.side_b) {
    if (seen.count(id)) throw InputError("certificate id " + std::to_string(id) + " appears on both sides");
    seen.insert(id);
  }

  if (cert.side_a.size() < min_side || cert.side_b.size() < min_side) {
    return {false, "side sizes " + std::to_string(cert.side_a.size()) + "/" + std::to_string(cert.side_b.size()) +
                       " below " + std::to_string(min_side)};
  }
  bool want = cert.kind == BicliqueKind::complete;
  for (Id a : cert.side_a) {
    for (Id b : cert.side_b) {
      if (adjacent(a, b) != want) {
        return {false, std::string("pair (") + std::to_string(a) + "," + std::to_string(b) +
                           (want ? ") does not intersect" : ") intersects")};
      }
    }
  }
  if (partition) {
    for (Id a : cert.side_a) {
      if (partition->part_of(a) != 1) return {false, "side A id " + std::to_string(a) + " is not in part 1"};
    }
    for (Id b : cert.side_b) {
      if (partition->part_of(b) != 2) return {false, "side B id " + std::to_string(b) + " is not in part 2"};
    }
  }
  return {true, ""};
}

VerifyReport verify_certificate(const IntervalFamily& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition) {
  return verify_with([&](Id id) { return inst.index_of(id) >= 0; },
                     [&](Id a, Id b) { return inst.adjacent(a, b); }, cert, min_side, partition);
}

VerifyReport verify_certificate(const SubtreeFamily& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition) {
  return verify_with([&](Id id) { return inst.index_of(id) >= 0; },
                     [&](Id a, Id b) { return inst.adjacent(a, b); }, cert, min_side, partition);
}

VerifyReport verify_certificate(const Graph& inst, const BicliqueCertificate& cert, std::size_t min_side,
                                const Partition* partition) {
  return verify_with([&](Id id) { return id >= 0 && id < inst.size(); },
                     [&](Id a, Id b) { return inst.has_edge(static_cast<int>(a), static_cast<int>(b)); }, cert,
                     min_side, partition);
}

}  // namespace ehcert
