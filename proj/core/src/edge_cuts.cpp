#include "eulerhg/edge_cuts.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "eulerhg/error.hpp"

namespace eulerhg {

namespace {

void require_proper_side(const Hypergraph& h, const VertexSet& side) {
  if (side.empty() || side.size() >= h.num_vertices() || !is_subset(side, h.vertices())) {
    throw Error(Errc::BadVertexSubset, "cut side must be a non-empty proper subset of V");
  }
}

bool crosses(const VertexSet& e, const VertexSet& side) {
  bool in = false;
  bool out = false;
  for (VertexId v : e) {
    if (contains(side, v)) {
      in = true;
    } else {
      out = true;
    }
    if (in && out) return true;
  }
  return false;
}

ComponentDecomposition components_without(const Hypergraph& h, std::span<const EdgeId> cut) {
  return components(remove_edges(h, cut).graph);
}

std::vector<EdgeId> sorted_ids(std::span<const EdgeId> ids) {
  std::vector<EdgeId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_connected_nontrivial(const Hypergraph& h) {
  if (h.num_vertices() < 2) throw Error(Errc::TrivialHypergraph, "minimum cut needs |V| >= 2");
  if (!is_connected(h)) throw Error(Errc::Disconnected, "minimum cut needs a connected hypergraph");
}

/// Edges as lists of vertex positions, with a membership-based cut function.
class IndexedCutFunction {
 public:
  explicit IndexedCutFunction(const Hypergraph& h) {
    for (const auto& e : h.edges()) {
      std::vector<std::size_t> idx;
      idx.reserve(e.size());
      for (VertexId v : e) idx.push_back(h.vertex_index(v));
      edges_.push_back(std::move(idx));
    }
  }

  std::size_t operator()(const std::vector<char>& member) const {
    std::size_t value = 0;
    for (const auto& e : edges_) {
      bool in = false;
      bool out = false;
      for (std::size_t i : e) {
        if (member[i]) {
          in = true;
        } else {
          out = true;
        }
      }
      value += (in && out) ? 1 : 0;
    }
    return value;
  }

 private:
  std::vector<std::vector<std::size_t>> edges_;
};

}  // namespace

EdgeCut boundary(const Hypergraph& h, const VertexSet& side) {
  require_proper_side(h, side);
  EdgeCut cut;
  cut.side = side;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (crosses(h.edges()[i], side)) cut.edges.push_back(static_cast<EdgeId>(i));
  }
  return cut;
}

std::size_t cut_value(const Hypergraph& h, const VertexSet& side) {
  std::size_t value = 0;
  for (const auto& e : h.edges()) value += crosses(e, side) ? 1 : 0;
  return value;
}

bool is_minimal(const Hypergraph& h, std::span<const EdgeId> cut) {
  const std::vector<EdgeId> ids = sorted_ids(cut);
  const ComponentDecomposition comps = components_without(h, ids);
  if (comps.count() < 2) throw Error(Errc::NotAnEdgeCut, "H \\ F is connected");
  for (EdgeId f : ids) {
    for (const auto& block : comps.blocks) {
      if (!intersects(h.edge(f), block)) return false;
    }
  }
  return true;
}

EdgeCut minimalize(const Hypergraph& h, std::span<const EdgeId> cut) {
  std::vector<EdgeId> current = sorted_ids(cut);
  for (EdgeId f : current) (void)h.edge(f);
  while (true) {
    const ComponentDecomposition comps = components_without(h, current);
    if (comps.count() < 2) throw Error(Errc::NotAnEdgeCut, "H \\ F is connected");
    const VertexSet* missed = nullptr;
    for (EdgeId f : current) {
      for (const auto& block : comps.blocks) {
        if (!intersects(h.edges()[f], block)) {
          missed = &block;
          break;
        }
      }
      if (missed) break;
    }
    if (!missed) return boundary(h, comps.blocks.front());
    current = boundary(h, *missed).edges;
  }
}

EdgeCut minimal_edge_cut(const Hypergraph& h) {
  require_connected_nontrivial(h);
  const EdgeCut start = boundary(h, VertexSet{h.vertices().front()});
  return minimalize(h, start.edges);
}

EdgeCut minimum_edge_cut(const Hypergraph& h) {
  require_connected_nontrivial(h);
  if (h.num_vertices() <= kExhaustiveCutLimit) return minimum_edge_cut_exhaustive(h);
  return minimum_edge_cut_pendant_pairs(h);
}

EdgeCut minimum_edge_cut_exhaustive(const Hypergraph& h) {
  require_connected_nontrivial(h);
  const std::size_t n = h.num_vertices();
  if (n > 24) throw Error(Errc::TooLarge, "exhaustive cut enumeration limited to 24 vertices");
  const auto& vs = h.vertices();
  std::vector<std::uint32_t> masks;
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (VertexId v : e) m |= 1u << h.vertex_index(v);
    masks.push_back(m);
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  VertexSet best_side;
  // Sides always contain the smallest vertex: the lexicographically least
  // minimizer does, since the complement of any other minimizer is smaller.
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const std::uint32_t side = 1u | (rest << 1);
    if (side == full) continue;
    std::size_t value = 0;
    for (std::uint32_t m : masks) value += ((m & side) && (m & ~side & full)) ? 1 : 0;
    if (value > best) continue;
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (side & (1u << i)) s.push_back(vs[i]);
    }
    if (value < best || s < best_side) {
      best = value;
      best_side = std::move(s);
    }
  }
  return boundary(h, best_side);
}

EdgeCut minimum_edge_cut_pendant_pairs(const Hypergraph& h) {
  require_connected_nontrivial(h);
  const std::size_t n = h.num_vertices();
  const IndexedCutFunction f(h);

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[i] = {i};

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best_group;
  std::vector<char> member(n, 0);

  auto value_of = [&](const std::vector<std::size_t>& group_ids) {
    std::fill(member.begin(), member.end(), 0);
    for (std::size_t g : group_ids) {
      for (std::size_t i : groups[g]) member[i] = 1;
    }
    return f(member);
  };

  while (groups.size() > 1) {
    const std::size_t k = groups.size();
    std::vector<std::size_t> order{0};
    std::vector<char> placed(k, 0);
    placed[0] = 1;
    std::vector<std::size_t> singleton(k);
    for (std::size_t g = 0; g < k; ++g) singleton[g] = value_of({g});
    // Queyranne ordering: next is argmin f(W + g) - f({g}).
    while (order.size() < k) {
      std::size_t pick = k;
      long long pick_key = std::numeric_limits<long long>::max();
      for (std::size_t g = 0; g < k; ++g) {
        if (placed[g]) continue;
        std::vector<std::size_t> trial = order;
        trial.push_back(g);
        const long long key = static_cast<long long>(value_of(trial)) - static_cast<long long>(singleton[g]);
        if (key < pick_key) {
          pick_key = key;
          pick = g;
        }
      }
      placed[pick] = 1;
      order.push_back(pick);
    }
    const std::size_t last = order[k - 1];
    const std::size_t prev = order[k - 2];
    if (singleton[last] < best) {
      best = singleton[last];
      best_group = groups[last];
    }
    groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(last));
  }

  VertexSet side;
  for (std::size_t i : best_group) side.push_back(h.vertices()[i]);
  return boundary(h, make_vertex_set(std::move(side)));
}

std::optional<EdgeId> find_cut_edge(const Hypergraph& h) {
  const std::size_t base = components(h).count();
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const EdgeId e = static_cast<EdgeId>(i);
    if (components(remove_edges(h, std::span<const EdgeId>(&e, 1)).graph).count() > base) return e;
  }
  return std::nullopt;
}

}  // namespace eulerhg
