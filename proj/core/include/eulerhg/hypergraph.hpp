#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eulerhg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> vertices);
bool contains(const VertexSet& set, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& sub, const VertexSet& super);

/// A finite hypergraph: a non-empty vertex set and an indexed multiset of
/// edges. Edge identity is the index; repeated vertex sets are distinct edges.
/// Edges of cardinality 0 or 1 are representable.
class Hypergraph {
 public:
  /// Throws Errc::EmptyVertexSet / Errc::EdgeNotSubsetOfV. Edges are
  /// normalized to sorted sets.
  static Hypergraph build(std::vector<VertexId> vertices, std::vector<std::vector<VertexId>> edges);

  const VertexSet& vertices() const noexcept { return vertices_; }
  std::span<const VertexSet> edges() const noexcept { return edges_; }
  const VertexSet& edge(EdgeId id) const;

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  /// p = sum of edge cardinalities.
  std::size_t size() const noexcept;

  bool has_vertex(VertexId v) const noexcept;
  /// Position of `v` in vertices(); throws Errc::UnknownVertex.
  std::size_t vertex_index(VertexId v) const;
  std::size_t degree(VertexId v) const;
  VertexId max_vertex() const noexcept { return vertices_.back(); }

  bool is_trivial() const noexcept { return vertices_.size() == 1; }
  bool is_empty() const noexcept { return edges_.empty(); }
  bool has_small_edge() const noexcept;

  bool operator==(const Hypergraph&) const = default;

 private:
  Hypergraph(VertexSet vertices, std::vector<VertexSet> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  VertexSet vertices_;
  std::vector<VertexSet> edges_;
};

/// Connected components, blocks ordered by their smallest vertex.
/// Isolated vertices are singleton blocks; edges of cardinality <= 1 join
/// nothing.
struct ComponentDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet vertices;
  std::vector<std::size_t> block_index;  // aligned with `vertices`

  std::size_t count() const noexcept { return blocks.size(); }
  std::size_t component_of(VertexId v) const;
};

ComponentDecomposition components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

/// A derived hypergraph plus, for every new edge, the id of the edge it came
/// from in the parent.
struct Subhypergraph {
  Hypergraph graph;
  std::vector<EdgeId> origin;
};

/// Subhypergraph induced by `subset`: every edge meeting the subset is
/// trimmed to it. Edges of cardinality 1 are kept, empty ones are dropped.
Subhypergraph induced(const Hypergraph& h, const VertexSet& subset);

/// H \ F. Surviving edges keep their relative order.
Subhypergraph remove_edges(const Hypergraph& h, std::span<const EdgeId> removed);

/// H + E'. New edges are appended after the existing ones.
Hypergraph add_edges(const Hypergraph& h, const std::vector<VertexSet>& added);

enum class PeelVerdict { Proceed, NoEulerFamily, TrivialEulerian };
enum class PeelOrder { SmallestFirst, LargestFirst };

struct PeelResult {
  Hypergraph reduced;
  std::vector<VertexId> removed;
  PeelVerdict verdict;
};

/// Deletes vertices of degree at most one (from V and from every edge,
/// edges are kept even when they shrink) until none remain or the hypergraph
/// is trivial. Edge ids are unchanged, so a certificate for the reduced
/// hypergraph is also one for the input.
PeelResult peel_degree_le1(const Hypergraph& h, PeelOrder order = PeelOrder::SmallestFirst);

}  // namespace eulerhg
