#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eulerhg/assignments.hpp"
#include "eulerhg/hypergraph.hpp"
#include "eulerhg/trails.hpp"

namespace eulerhg {

/// H o S: the vertices of S are identified into one fresh collapsed vertex.
/// Edges with no vertex outside S are dropped; the others keep their
/// relative order.
struct Collapsed {
  Hypergraph graph;
  VertexId collapsed_vertex;
  std::vector<std::optional<EdgeId>> forward;  // parent id -> collapsed id
  std::vector<EdgeId> origin;                  // collapsed id -> parent id
};

/// The collapsed vertex is max(V) + 1. Throws Errc::BadVertexSubset.
Collapsed collapse(const Hypergraph& h, const VertexSet& side);

/// H' forcing traversal of `pivot` via each edge of F: every f in F is
/// split into f' = (f - {u}) + {u_f} (same id as f) and a spoke
/// e_f = {u_f, u} appended after the original edges.
struct Gadget {
  struct Arm {
    EdgeId edge;            // f, also the id of f'
    VertexId subdivision;   // u_f
    EdgeId spoke;           // e_f
  };

  Hypergraph graph;
  VertexId pivot;
  std::vector<Arm> arms;  // ascending by edge
  std::size_t base_edges; // |E(H)|
};

/// Fresh vertices u_f are max(V)+1, max(V)+2, ... in ascending f order.
/// Throws Errc::EdgeMissesVertex when some f does not contain `pivot`.
Gadget fixed_vertex_gadget(const Hypergraph& h, VertexId pivot, std::span<const EdgeId> via);

/// True iff some trail traverses `edge` with `v` as one of its two anchors.
bool traverses_via(const EulerFamily& family, VertexId v, EdgeId edge);

/// Maps a family of H' back to H: f' u_f e_f u -> f u and u e_f u_f f' -> u f.
/// The result traverses the pivot via every f in F and has as many trails.
/// Throws Errc::MalformedGadgetTraversal.
EulerFamily ungadget_family(const Gadget& gadget, const EulerFamily& family);

/// Inverse of ungadget_family: f u -> f' u_f e_f u and u f -> u e_f u_f f'.
/// Throws Errc::TraversalConditionUnmet when some f is not traversed via
/// the pivot.
EulerFamily gadget_family(const Gadget& gadget, const EulerFamily& family);

/// One side of a collapse-based reduction: a collapsed hypergraph of H^alpha
/// and an Euler family of it traversing the collapsed vertex via every
/// crossing edge.
struct CollapsedSide {
  const Collapsed& collapsed;
  const EulerFamily& family;
};

/// Links the trails of both sides through the crossing edges of alpha into
/// an Euler family of H^alpha. `side0` collapses V_1 (its vertices are V_0
/// plus the collapsed vertex) and `side1` collapses V_0. The segments of the
/// trail through each collapsed vertex are read starting at its first visit;
/// the linked trails are then concatenated wherever they share an anchor.
/// Throws Errc::TraversalConditionUnmet / Errc::CertificateInvalid.
EulerFamily link_families(const Hypergraph& h_alpha, const Assignment& alpha,
                          const CollapsedSide& side0, const CollapsedSide& side1);

}  // namespace eulerhg
