#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eulerhg/hypergraph.hpp"
#include "eulerhg/trails.hpp"

namespace eulerhg {

using BlockId = std::uint32_t;

/// Unordered pair {lo, hi} of blocks, lo <= hi; lo == hi is a diagonal pair.
struct BlockPair {
  BlockId lo = 0;
  BlockId hi = 0;

  static BlockPair of(BlockId a, BlockId b) { return a <= b ? BlockPair{a, b} : BlockPair{b, a}; }
  bool diagonal() const noexcept { return lo == hi; }
  auto operator<=>(const BlockPair&) const = default;
};

/// Partition of V(H) into blocks, each a union of components of H \ F.
class BlockPartition {
 public:
  BlockPartition(std::vector<VertexSet> blocks, bool standard);

  std::span<const VertexSet> blocks() const noexcept { return blocks_; }
  const VertexSet& block(BlockId i) const { return blocks_.at(i); }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool standard() const noexcept { return standard_; }
  /// Throws Errc::UnknownVertex.
  BlockId block_of(VertexId v) const;

 private:
  std::vector<VertexSet> blocks_;
  std::vector<std::pair<VertexId, BlockId>> lookup_;  // sorted by vertex
  bool standard_;
};

/// One block per component of H \ F, ordered by smallest vertex.
/// Throws Errc::NotMinimal when F is not a minimal edge cut.
BlockPartition standard_blocks(const Hypergraph& h, std::span<const EdgeId> cut);

/// All 2^{|I|-1} - 1 ways to merge the blocks into two non-empty sides. Side 0
/// always holds block 0; side 1 is read off a counter over blocks 1..|I|-1.
/// Throws Errc::SingleComponent for fewer than two blocks.
std::vector<BlockPartition> enumerate_bipartitions(const BlockPartition& blocks);

/// An edge cut assignment. Entries are sorted by edge id and validated on
/// construction, so an Assignment value is always valid for the hypergraph
/// and partition it was made with.
class Assignment {
 public:
  using Entry = std::pair<EdgeId, BlockPair>;

  /// Throws Errc::InvalidAssignment.
  static Assignment make(const Hypergraph& h, const BlockPartition& blocks, std::vector<Entry> entries);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  std::optional<BlockPair> find(EdgeId f) const;
  /// Edges sent to an off-diagonal pair, ascending.
  std::vector<EdgeId> crossing_edges() const;

  bool operator==(const Assignment&) const = default;

 private:
  friend class AssignmentEnumerator;

  Assignment(std::vector<Entry> entries, std::size_t num_blocks)
      : entries_(std::move(entries)), num_blocks_(num_blocks) {}

  std::vector<Entry> entries_;
  std::size_t num_blocks_;
};

/// Pairs allowed for `f`: ij (i != j) when f meets both blocks, ii when
/// |f cap V_i| >= 2. Lexicographic order.
std::vector<BlockPair> allowed_pairs(const Hypergraph& h, const BlockPartition& blocks, EdgeId f);

/// Restartable lexicographic stream over all valid assignments; the
/// smallest edge id is the most significant position.
class AssignmentEnumerator {
 public:
  AssignmentEnumerator(const Hypergraph& h, std::span<const EdgeId> cut, const BlockPartition& blocks);

  std::optional<Assignment> next();
  void reset();
  /// Exact number of valid assignments (product of per-edge choices).
  std::uint64_t count() const noexcept;
  /// (|I|(|I|+1)/2)^|F|, saturating.
  std::uint64_t upper_bound() const noexcept;

 private:
  std::size_t num_blocks_;
  std::vector<EdgeId> cut_;
  std::vector<std::vector<BlockPair>> choices_;
  std::vector<std::size_t> cursor_;
  bool exhausted_ = false;
};

std::vector<Assignment> enumerate_assignments(const Hypergraph& h, std::span<const EdgeId> cut,
                                              const BlockPartition& blocks);

/// H^alpha: each assigned edge f becomes f cap (V_i u V_j); every edge keeps
/// its id. Throws Errc::InvalidAssignment when the assignment was built for
/// a different partition size.
Hypergraph apply(const Hypergraph& h, const BlockPartition& blocks, const Assignment& alpha);

/// Labelled multigraph on block ids; loops allowed.
struct Multigraph {
  struct Edge {
    EdgeId label;
    BlockPair ends;
    bool operator==(const Edge&) const = default;
  };
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
};

/// G^alpha: one edge alpha(f) per assigned f, labelled by f.
Multigraph quotient_multigraph(const BlockPartition& blocks, const Assignment& alpha);

struct MultigraphEulerStatus {
  bool has_family = false;
  bool has_tour = false;
  bool operator==(const MultigraphEulerStatus&) const = default;
};

/// Even degrees (a loop counts twice) decide families; tours additionally
/// need at most one non-empty component.
MultigraphEulerStatus multigraph_euler_status(const Multigraph& g);

/// Relabels edges through `origin` (child id -> parent id). Throws
/// Errc::CertificateInvalid when a trail uses an id outside the map.
ClosedTrail lift_trail(const ClosedTrail& trail, std::span<const EdgeId> origin);
EulerFamily lift_family(const EulerFamily& family, std::span<const EdgeId> origin);

/// Reads alpha off a family: alpha(f) = pair of blocks containing the two
/// anchors through which f is traversed. Throws Errc::CertificateInvalid.
Assignment assignment_from_family(const Hypergraph& h, std::span<const EdgeId> cut,
                                  const BlockPartition& blocks, const EulerFamily& family);

}  // namespace eulerhg
