#include "eulerhg/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "eulerhg/error.hpp"

namespace eulerhg {

VertexSet make_vertex_set(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Hypergraph Hypergraph::build(std::vector<VertexId> vertices,
                             std::vector<std::vector<VertexId>> edges) {
  VertexSet vs = make_vertex_set(std::move(vertices));
  if (vs.empty()) throw Error(Errc::EmptyVertexSet, "hypergraph needs at least one vertex");
  std::vector<VertexSet> es;
  es.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexSet e = make_vertex_set(std::move(edges[i]));
    if (!is_subset(e, vs)) {
      throw Error(Errc::EdgeNotSubsetOfV, "edge e" + std::to_string(i) + " is not a subset of V");
    }
    es.push_back(std::move(e));
  }
  return Hypergraph(std::move(vs), std::move(es));
}

const VertexSet& Hypergraph::edge(EdgeId id) const {
  if (id >= edges_.size()) throw Error(Errc::UnknownEdgeId, "e" + std::to_string(id));
  return edges_[id];
}

std::size_t Hypergraph::size() const noexcept {
  std::size_t p = 0;
  for (const auto& e : edges_) p += e.size();
  return p;
}

bool Hypergraph::has_vertex(VertexId v) const noexcept { return contains(vertices_, v); }

std::size_t Hypergraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw Error(Errc::UnknownVertex, std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Hypergraph::degree(VertexId v) const {
  (void)vertex_index(v);
  std::size_t d = 0;
  for (const auto& e : edges_) d += contains(e, v) ? 1 : 0;
  return d;
}

bool Hypergraph::has_small_edge() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.size() < 2; });
}

std::size_t ComponentDecomposition::component_of(VertexId v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) throw Error(Errc::UnknownVertex, std::to_string(v));
  return block_index[static_cast<std::size_t>(it - vertices.begin())];
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ComponentDecomposition components(const Hypergraph& h) {
  const auto& vs = h.vertices();
  DisjointSets sets(vs.size());
  for (const auto& e : h.edges()) {
    if (e.size() < 2) continue;
    const std::size_t first = h.vertex_index(e.front());
    for (std::size_t k = 1; k < e.size(); ++k) sets.unite(first, h.vertex_index(e[k]));
  }
  ComponentDecomposition out;
  out.vertices = vs;
  out.block_index.assign(vs.size(), 0);
  // Roots are the smallest index of their class, so scanning in vertex order
  // numbers blocks by their smallest vertex.
  std::vector<std::size_t> root_block(vs.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::size_t r = sets.find(i);
    if (root_block[r] == static_cast<std::size_t>(-1)) {
      root_block[r] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.block_index[i] = root_block[r];
    out.blocks[root_block[r]].push_back(vs[i]);
  }
  return out;
}

bool is_connected(const Hypergraph& h) { return components(h).count() == 1; }

Subhypergraph induced(const Hypergraph& h, const VertexSet& subset) {
  if (subset.empty() || !is_subset(subset, h.vertices())) {
    throw Error(Errc::BadVertexSubset, "induced subset must be a non-empty subset of V");
  }
  std::vector<std::vector<VertexId>> edges;
  std::vector<EdgeId> origin;
  const auto all = h.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    VertexSet trimmed = set_intersection(all[i], subset);
    if (trimmed.empty()) continue;
    edges.push_back(std::move(trimmed));
    origin.push_back(static_cast<EdgeId>(i));
  }
  return {Hypergraph::build(subset, std::move(edges)), std::move(origin)};
}

Subhypergraph remove_edges(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::vector<bool> gone(h.num_edges(), false);
  for (EdgeId f : removed) {
    if (f >= h.num_edges()) throw Error(Errc::UnknownEdgeId, "e" + std::to_string(f));
    gone[f] = true;
  }
  std::vector<std::vector<VertexId>> edges;
  std::vector<EdgeId> origin;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (gone[i]) continue;
    edges.push_back(h.edges()[i]);
    origin.push_back(static_cast<EdgeId>(i));
  }
  return {Hypergraph::build(h.vertices(), std::move(edges)), std::move(origin)};
}

Hypergraph add_edges(const Hypergraph& h, const std::vector<VertexSet>& added) {
  std::vector<std::vector<VertexId>> edges(h.edges().begin(), h.edges().end());
  edges.insert(edges.end(), added.begin(), added.end());
  return Hypergraph::build(h.vertices(), std::move(edges));
}

PeelResult peel_degree_le1(const Hypergraph& h, PeelOrder order) {
  VertexSet vertices = h.vertices();
  std::vector<VertexSet> edges(h.edges().begin(), h.edges().end());
  std::vector<VertexId> removed;

  auto snapshot = [&](PeelVerdict verdict) {
    std::vector<std::vector<VertexId>> es(edges.begin(), edges.end());
    return PeelResult{Hypergraph::build(vertices, std::move(es)), removed, verdict};
  };
  auto has_small = [&] {
    return std::any_of(edges.begin(), edges.end(), [](const VertexSet& e) { return e.size() < 2; });
  };
  auto degree = [&](VertexId v) {
    std::size_t d = 0;
    for (const auto& e : edges) d += contains(e, v) ? 1 : 0;
    return d;
  };

  if (has_small()) return snapshot(PeelVerdict::NoEulerFamily);
  while (vertices.size() > 1) {
    std::optional<VertexId> victim;
    if (order == PeelOrder::SmallestFirst) {
      for (VertexId v : vertices) {
        if (degree(v) <= 1) {
          victim = v;
          break;
        }
      }
    } else {
      for (auto it = vertices.rbegin(); it != vertices.rend(); ++it) {
        if (degree(*it) <= 1) {
          victim = *it;
          break;
        }
      }
    }
    if (!victim) break;
    vertices.erase(std::lower_bound(vertices.begin(), vertices.end(), *victim));
    for (auto& e : edges) {
      auto it = std::lower_bound(e.begin(), e.end(), *victim);
      if (it != e.end() && *it == *victim) e.erase(it);
    }
    removed.push_back(*victim);
    if (has_small()) return snapshot(PeelVerdict::NoEulerFamily);
  }
  if (edges.empty() && vertices.size() == 1) return snapshot(PeelVerdict::TrivialEulerian);
  return snapshot(PeelVerdict::Proceed);
}

}  // namespace eulerhg
