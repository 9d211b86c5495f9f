#include "eulerhg/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "eulerhg/error.hpp"

namespace eulerhg {

namespace {

using EdgeList = std::vector<std::vector<VertexId>>;

Hypergraph on_range(std::size_t n, EdgeList edges) {
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), VertexId{0});
  return Hypergraph::build(std::move(vs), std::move(edges));
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<VertexId> random_subset(std::mt19937_64& rng, const std::vector<VertexId>& pool, std::size_t k) {
  std::vector<VertexId> out;
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), k, rng);
  return out;
}

bool fully_connected(const Hypergraph& h) { return components(h).count() == 1; }

void check_spec(const GenSpec& spec) {
  if (spec.min_edge_size < 2) throw Error(Errc::BadSpec, "edge sizes start at 2");
  if (spec.max_edge_size < spec.min_edge_size) throw Error(Errc::BadSpec, "empty edge size range");
  if (spec.max_vertices < spec.min_edge_size) throw Error(Errc::BadSpec, "too few vertices for the edge sizes");
  if (spec.max_edges < 1) throw Error(Errc::BadSpec, "need at least one edge");
  if (spec.max_vertices > 64 || spec.max_edges > 64) throw Error(Errc::BadSpec, "bounds above 64");
}

std::vector<Hypergraph> uniform(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Hypergraph> out;
  constexpr std::size_t kAttempts = 100000;
  while (out.size() < spec.count) {
    bool made = false;
    for (std::size_t attempt = 0; attempt < kAttempts && !made; ++attempt) {
      const std::size_t n = pick(rng, spec.min_edge_size, spec.max_vertices);
      const std::size_t m = pick(rng, 1, spec.max_edges);
      std::vector<VertexId> pool(n);
      std::iota(pool.begin(), pool.end(), VertexId{0});
      EdgeList edges;
      for (std::size_t i = 0; i < m; ++i) {
        edges.push_back(random_subset(rng, pool, pick(rng, spec.min_edge_size, std::min(spec.max_edge_size, n))));
      }
      Hypergraph h = on_range(n, std::move(edges));
      if (spec.connected && !fully_connected(h)) continue;
      out.push_back(std::move(h));
      made = true;
    }
    if (!made) throw Error(Errc::BadSpec, "could not draw a connected instance");
  }
  return out;
}

std::vector<Hypergraph> exhaustive(const GenSpec& spec) {
  if (spec.max_vertices > 8) throw Error(Errc::BadSpec, "exhaustive generation limited to 8 vertices");
  std::vector<Hypergraph> out;
  for (std::size_t n = spec.min_edge_size; n <= spec.max_vertices; ++n) {
    EdgeList subsets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < spec.min_edge_size || size > spec.max_edge_size) continue;
      std::vector<VertexId> e;
      for (VertexId v = 0; v < n; ++v) {
        if (mask >> v & 1) e.push_back(v);
      }
      subsets.push_back(std::move(e));
    }
    std::set<EdgeList> seen;
    // Non-decreasing index sequences enumerate multisets of subsets.
    std::vector<std::size_t> idx;
    auto visit = [&](auto&& self, std::size_t from) -> void {
      if (!idx.empty()) {
        EdgeList edges;
        for (std::size_t i : idx) edges.push_back(subsets[i]);
        Hypergraph h = on_range(n, std::move(edges));
        if (fully_connected(h)) seen.insert(canonical_form(h));
      }
      if (idx.size() == spec.max_edges) return;
      for (std::size_t i = from; i < subsets.size(); ++i) {
        idx.push_back(i);
        self(self, i);
        idx.pop_back();
      }
    };
    visit(visit, 0);
    for (const auto& form : seen) out.push_back(on_range(n, form));
  }
  return out;
}

}  // namespace

std::vector<Hypergraph> generate(const GenSpec& spec) {
  check_spec(spec);
  return spec.model == GenModel::Uniform ? uniform(spec) : exhaustive(spec);
}

EdgeList canonical_form(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > 8) throw Error(Errc::TooLarge, "canonical form limited to 8 vertices");
  EdgeList indexed;
  for (const auto& e : h.edges()) {
    std::vector<VertexId> idx;
    for (VertexId v : e) idx.push_back(static_cast<VertexId>(h.vertex_index(v)));
    indexed.push_back(std::move(idx));
  }
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  EdgeList best;
  bool first = true;
  do {
    EdgeList image;
    image.reserve(indexed.size());
    for (const auto& e : indexed) {
      std::vector<VertexId> mapped;
      for (VertexId v : e) mapped.push_back(perm[v]);
      std::sort(mapped.begin(), mapped.end());
      image.push_back(std::move(mapped));
    }
    std::sort(image.begin(), image.end());
    if (first || image < best) {
      best = std::move(image);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

/// Connected piece on `k` vertices starting at `base`, every degree >= 2.
EdgeList min_degree_two_piece(std::mt19937_64& rng, VertexId base, std::size_t k) {
  std::vector<VertexId> local(k);
  std::iota(local.begin(), local.end(), VertexId{0});
  while (true) {
    const std::size_t m = pick(rng, 2, k + 2);
    EdgeList edges;
    for (std::size_t i = 0; i < m; ++i) edges.push_back(random_subset(rng, local, pick(rng, 2, std::min<std::size_t>(3, k))));
    const Hypergraph h = on_range(k, edges);
    if (!fully_connected(h)) continue;
    bool ok = true;
    for (VertexId v = 0; v < k; ++v) ok = ok && h.degree(v) >= 2;
    if (!ok) continue;
    for (auto& e : edges) {
      for (VertexId& v : e) v += base;
    }
    return edges;
  }
}

}  // namespace

std::vector<Hypergraph> generate_cut_edge_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  while (out.size() < count) {
    const std::size_t a = pick(rng, 2, 4);
    const std::size_t b = pick(rng, 2, 4);
    EdgeList edges = min_degree_two_piece(rng, 0, a);
    EdgeList right = min_degree_two_piece(rng, static_cast<VertexId>(a), b);
    edges.insert(edges.end(), right.begin(), right.end());
    std::vector<VertexId> left_pool(a);
    std::iota(left_pool.begin(), left_pool.end(), VertexId{0});
    std::vector<VertexId> right_pool(b);
    std::iota(right_pool.begin(), right_pool.end(), static_cast<VertexId>(a));
    std::vector<VertexId> bridge = random_subset(rng, left_pool, pick(rng, 1, 2));
    const auto far = random_subset(rng, right_pool, pick(rng, 1, 2));
    bridge.insert(bridge.end(), far.begin(), far.end());
    // Put the bridge at a random position so edge ids do not give it away.
    const std::size_t at = pick(rng, 0, edges.size());
    edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(at), std::move(bridge));
    out.push_back(on_range(a + b, std::move(edges)));
  }
  return out;
}

}  // namespace eulerhg
