#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eulerhg/hypergraph.hpp"

namespace eulerhg {

/// [S, V-S]: edges meeting both the witness side and its complement.
struct EdgeCut {
  std::vector<EdgeId> edges;  // ascending
  VertexSet side;

  std::size_t size() const noexcept { return edges.size(); }
  bool operator==(const EdgeCut&) const = default;
};

/// Throws Errc::BadVertexSubset unless the side is a non-empty proper subset.
EdgeCut boundary(const Hypergraph& h, const VertexSet& side);

/// Number of edges of [S, V-S], counted with multiplicity.
std::size_t cut_value(const Hypergraph& h, const VertexSet& side);

/// True iff every edge of the cut meets every component of H \ F.
/// Throws Errc::NotAnEdgeCut when H \ F is connected.
bool is_minimal(const Hypergraph& h, std::span<const EdgeId> cut);

/// Shrinks a cut to a minimal one contained in it: while some f in F misses
/// a component C of H \ F, replace F by [C, V-C]. Edges and components are
/// scanned in ascending order. Throws Errc::NotAnEdgeCut.
EdgeCut minimalize(const Hypergraph& h, std::span<const EdgeId> cut);

/// minimalize(boundary({smallest vertex})). Requires a connected,
/// non-trivial hypergraph.
EdgeCut minimal_edge_cut(const Hypergraph& h);

/// Vertex count up to which minimum_edge_cut enumerates every side.
inline constexpr std::size_t kExhaustiveCutLimit = 15;

/// Exact minimum edge cut. Exhaustive enumeration (lexicographically least
/// side among minimizers) up to kExhaustiveCutLimit vertices, pendant pairs
/// above. Throws Errc::Disconnected / Errc::TrivialHypergraph.
EdgeCut minimum_edge_cut(const Hypergraph& h);

/// Queyranne's pendant-pair minimization of the (symmetric submodular)
/// hypergraph cut function. O(n^3) cut evaluations.
EdgeCut minimum_edge_cut_pendant_pairs(const Hypergraph& h);

EdgeCut minimum_edge_cut_exhaustive(const Hypergraph& h);

/// Lowest-id edge e with {e} an edge cut, if any.
std::optional<EdgeId> find_cut_edge(const Hypergraph& h);

}  // namespace eulerhg
