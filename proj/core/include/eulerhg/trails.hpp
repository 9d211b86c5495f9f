#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eulerhg/hypergraph.hpp"

namespace eulerhg {

/// v0 e1 v1 ... ek vk, stored as k+1 vertices and k edges.
struct Walk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool operator==(const Walk&) const = default;
};

/// A closed walk stored cyclically: edges[i] joins anchors[i] and
/// anchors[(i + 1) % length()]. The repeated endpoint is implicit, so
/// rotation is free.
struct ClosedTrail {
  std::vector<VertexId> anchors;
  std::vector<EdgeId> edges;

  /// Throws Errc::CertificateInvalid unless the walk is closed with k >= 2.
  static ClosedTrail from_walk(const Walk& walk);

  Walk walk() const;
  std::size_t length() const noexcept { return edges.size(); }
  VertexSet anchor_set() const;
  bool has_anchor(VertexId v) const noexcept;

  /// Rotation starting at the first stored occurrence of `v`.
  ClosedTrail rotated_to(VertexId v) const;
  ClosedTrail reversed() const;

  bool operator==(const ClosedTrail&) const = default;
};

struct EulerFamily {
  std::vector<ClosedTrail> trails;

  bool is_tour() const noexcept { return trails.size() == 1; }
  std::size_t num_edges() const noexcept;
  VertexSet anchors() const;

  bool operator==(const EulerFamily&) const = default;
};

struct CheckResult {
  bool ok = true;
  std::string message;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return ok; }
};

/// Membership, consecutive-distinctness and edge-cardinality checks. The
/// first failing step i (1-based, edge e_i) is reported.
CheckResult validate_walk(const Hypergraph& h, const Walk& walk);

/// Closed trail checks: shape, walk validity and distinct edges.
CheckResult validate_closed_trail(const Hypergraph& h, const ClosedTrail& trail);

/// Every trail valid, pairwise edge- and anchor-disjoint, every edge of `h`
/// used exactly once. With `spanning`, every vertex must also be an anchor.
CheckResult verify_euler_family(const Hypergraph& h, const EulerFamily& family,
                                bool spanning = false);

bool is_spanning(const Hypergraph& h, const EulerFamily& family);

/// Splices two edge-disjoint closed trails at a common anchor `v`.
/// Throws Errc::NotAnAnchor / Errc::EdgesOverlap.
ClosedTrail concatenate_at_anchor(const ClosedTrail& first, const ClosedTrail& second, VertexId v);

/// Repeatedly concatenates trails that share an anchor until the family is
/// anchor-disjoint. Trails must be pairwise edge-disjoint.
EulerFamily merge_shared_anchors(EulerFamily family);

}  // namespace eulerhg
