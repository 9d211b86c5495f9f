#include "eulerhg/assignments.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "eulerhg/edge_cuts.hpp"
#include "eulerhg/error.hpp"

namespace eulerhg {

BlockPartition::BlockPartition(std::vector<VertexSet> blocks, bool standard)
    : blocks_(std::move(blocks)), standard_(standard) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (VertexId v : blocks_[i]) lookup_.emplace_back(v, static_cast<BlockId>(i));
  }
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < lookup_.size(); ++i) {
    if (lookup_[i].first == lookup_[i - 1].first) {
      throw Error(Errc::BadVertexSubset, "blocks overlap at vertex " + std::to_string(lookup_[i].first));
    }
  }
}

BlockId BlockPartition::block_of(VertexId v) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(v, BlockId{0}));
  if (it == lookup_.end() || it->first != v) throw Error(Errc::UnknownVertex, std::to_string(v));
  return it->second;
}

BlockPartition standard_blocks(const Hypergraph& h, std::span<const EdgeId> cut) {
  if (!is_minimal(h, cut)) throw Error(Errc::NotMinimal, "edge cut is not minimal");
  return BlockPartition(components(remove_edges(h, cut).graph).blocks, true);
}

std::vector<BlockPartition> enumerate_bipartitions(const BlockPartition& blocks) {
  const std::size_t k = blocks.size();
  if (k < 2) throw Error(Errc::SingleComponent, "need at least two blocks");
  if (k > 63) throw Error(Errc::TooLarge, "too many blocks to bipartition");
  std::vector<BlockPartition> out;
  const std::uint64_t limit = std::uint64_t{1} << (k - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    VertexSet side0 = blocks.block(0);
    VertexSet side1;
    for (std::size_t b = 1; b < k; ++b) {
      if (mask & (std::uint64_t{1} << (b - 1))) {
        side1 = set_union(side1, blocks.block(static_cast<BlockId>(b)));
      } else {
        side0 = set_union(side0, blocks.block(static_cast<BlockId>(b)));
      }
    }
    out.emplace_back(std::vector<VertexSet>{std::move(side0), std::move(side1)}, k == 2);
  }
  return out;
}

std::vector<BlockPair> allowed_pairs(const Hypergraph& h, const BlockPartition& blocks, EdgeId f) {
  const VertexSet& e = h.edge(f);
  std::vector<std::size_t> hits(blocks.size(), 0);
  for (VertexId v : e) ++hits[blocks.block_of(v)];
  std::vector<BlockPair> out;
  for (BlockId i = 0; i < blocks.size(); ++i) {
    if (hits[i] == 0) continue;
    for (BlockId j = i; j < blocks.size(); ++j) {
      if (i == j ? hits[i] >= 2 : hits[j] > 0) out.push_back({i, j});
    }
  }
  return out;
}

Assignment Assignment::make(const Hypergraph& h, const BlockPartition& blocks, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [f, pair] = entries[i];
    if (i > 0 && entries[i - 1].first == f) {
      throw Error(Errc::InvalidAssignment, "edge e" + std::to_string(f) + " assigned twice");
    }
    if (f >= h.num_edges()) throw Error(Errc::InvalidAssignment, "unknown edge e" + std::to_string(f));
    if (pair.lo > pair.hi || pair.hi >= blocks.size()) {
      throw Error(Errc::InvalidAssignment, "bad block pair for e" + std::to_string(f));
    }
    const auto allowed = allowed_pairs(h, blocks, f);
    if (std::find(allowed.begin(), allowed.end(), pair) == allowed.end()) {
      throw Error(Errc::InvalidAssignment, "pair " + std::to_string(pair.lo) + std::to_string(pair.hi) +
                                               " not allowed for e" + std::to_string(f));
    }
  }
  return Assignment(std::move(entries), blocks.size());
}

std::optional<BlockPair> Assignment::find(EdgeId f) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), f,
                             [](const Entry& e, EdgeId id) { return e.first < id; });
  if (it == entries_.end() || it->first != f) return std::nullopt;
  return it->second;
}

std::vector<EdgeId> Assignment::crossing_edges() const {
  std::vector<EdgeId> out;
  for (const auto& [f, pair] : entries_) {
    if (!pair.diagonal()) out.push_back(f);
  }
  return out;
}

AssignmentEnumerator::AssignmentEnumerator(const Hypergraph& h, std::span<const EdgeId> cut,
                                           const BlockPartition& blocks)
    : num_blocks_(blocks.size()), cut_(cut.begin(), cut.end()) {
  std::sort(cut_.begin(), cut_.end());
  cut_.erase(std::unique(cut_.begin(), cut_.end()), cut_.end());
  for (EdgeId f : cut_) {
    choices_.push_back(allowed_pairs(h, blocks, f));
    if (choices_.back().empty()) exhausted_ = true;
  }
  cursor_.assign(cut_.size(), 0);
}

std::optional<Assignment> AssignmentEnumerator::next() {
  if (exhausted_) return std::nullopt;
  std::vector<Assignment::Entry> entries;
  entries.reserve(cut_.size());
  for (std::size_t i = 0; i < cut_.size(); ++i) entries.emplace_back(cut_[i], choices_[i][cursor_[i]]);
  // Advance the odometer; the last edge varies fastest.
  std::size_t pos = cut_.size();
  while (pos > 0) {
    --pos;
    if (++cursor_[pos] < choices_[pos].size()) break;
    cursor_[pos] = 0;
    if (pos == 0) exhausted_ = true;
  }
  if (cut_.empty()) exhausted_ = true;
  return Assignment(std::move(entries), num_blocks_);
}

void AssignmentEnumerator::reset() {
  cursor_.assign(cut_.size(), 0);
  exhausted_ = std::any_of(choices_.begin(), choices_.end(), [](const auto& c) { return c.empty(); });
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t AssignmentEnumerator::count() const noexcept {
  std::uint64_t n = 1;
  for (const auto& c : choices_) n = saturating_mul(n, c.size());
  return n;
}

std::uint64_t AssignmentEnumerator::upper_bound() const noexcept {
  const std::uint64_t per_edge = num_blocks_ * (num_blocks_ + 1) / 2;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < cut_.size(); ++i) n = saturating_mul(n, per_edge);
  return n;
}

std::vector<Assignment> enumerate_assignments(const Hypergraph& h, std::span<const EdgeId> cut,
                                              const BlockPartition& blocks) {
  AssignmentEnumerator it(h, cut, blocks);
  std::vector<Assignment> out;
  while (auto a = it.next()) out.push_back(std::move(*a));
  return out;
}

Hypergraph apply(const Hypergraph& h, const BlockPartition& blocks, const Assignment& alpha) {
  if (alpha.num_blocks() != blocks.size()) {
    throw Error(Errc::InvalidAssignment, "assignment was built for a different partition");
  }
  std::vector<std::vector<VertexId>> edges(h.edges().begin(), h.edges().end());
  for (const auto& [f, pair] : alpha.entries()) {
    if (f >= edges.size()) throw Error(Errc::InvalidAssignment, "unknown edge e" + std::to_string(f));
    const VertexSet keep = set_union(blocks.block(pair.lo), blocks.block(pair.hi));
    edges[f] = set_intersection(h.edges()[f], keep);
  }
  return Hypergraph::build(h.vertices(), std::move(edges));
}

Multigraph quotient_multigraph(const BlockPartition& blocks, const Assignment& alpha) {
  Multigraph g;
  g.num_vertices = blocks.size();
  for (const auto& [f, pair] : alpha.entries()) g.edges.push_back({f, pair});
  return g;
}

MultigraphEulerStatus multigraph_euler_status(const Multigraph& g) {
  std::vector<std::size_t> degree(g.num_vertices, 0);
  std::vector<std::size_t> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    degree[e.ends.lo] += 1;
    degree[e.ends.hi] += 1;
    parent[find(e.ends.lo)] = find(e.ends.hi);
  }
  const bool even = std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d % 2 == 0; });
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    if (degree[v] > 0) roots.push_back(find(v));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return {even, even && roots.size() <= 1};
}

ClosedTrail lift_trail(const ClosedTrail& trail, std::span<const EdgeId> origin) {
  ClosedTrail out = trail;
  for (EdgeId& e : out.edges) {
    if (e >= origin.size()) throw Error(Errc::CertificateInvalid, "edge e" + std::to_string(e) + " has no origin");
    e = origin[e];
  }
  return out;
}

EulerFamily lift_family(const EulerFamily& family, std::span<const EdgeId> origin) {
  EulerFamily out;
  out.trails.reserve(family.trails.size());
  for (const auto& t : family.trails) out.trails.push_back(lift_trail(t, origin));
  return out;
}

Assignment assignment_from_family(const Hypergraph& h, std::span<const EdgeId> cut,
                                  const BlockPartition& blocks, const EulerFamily& family) {
  if (auto r = verify_euler_family(h, family); !r) throw Error(Errc::CertificateInvalid, r.message);
  std::vector<Assignment::Entry> entries;
  for (EdgeId f : cut) {
    std::optional<BlockPair> pair;
    for (const auto& t : family.trails) {
      for (std::size_t i = 0; i < t.length() && !pair; ++i) {
        if (t.edges[i] != f) continue;
        const VertexId a = t.anchors[i];
        const VertexId b = t.anchors[(i + 1) % t.length()];
        pair = BlockPair::of(blocks.block_of(a), blocks.block_of(b));
      }
      if (pair) break;
    }
    if (!pair) throw Error(Errc::CertificateInvalid, "cut edge e" + std::to_string(f) + " not traversed");
    entries.emplace_back(f, *pair);
  }
  return Assignment::make(h, blocks, std::move(entries));
}

}  // namespace eulerhg
