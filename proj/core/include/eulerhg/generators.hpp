#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eulerhg/hypergraph.hpp"

namespace eulerhg {

enum class GenModel { Uniform, ExhaustiveSmall };

/// Generated vertices are 0..n-1.
struct GenSpec {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 4;
  std::size_t min_edge_size = 2;
  std::size_t max_edge_size = 4;
  std::uint64_t seed = 0;
  GenModel model = GenModel::Uniform;
  std::size_t count = 1;   // uniform model only
  bool connected = true;   // uniform model; exhaustive output is always connected
};

/// Uniform: n in [2, max_vertices], m in [1, max_edges], each edge a uniform
/// random subset of size within the size range, resampled until connected
/// when requested. Exhaustive: every connected hypergraph within the bounds
/// up to vertex relabeling, each once, ordered by (n, canonical form).
/// Throws Errc::BadSpec.
std::vector<Hypergraph> generate(const GenSpec& spec);

/// Lexicographically least sorted edge list over all vertex relabelings
/// onto 0..n-1. Throws Errc::TooLarge above 8 vertices.
std::vector<std::vector<VertexId>> canonical_form(const Hypergraph& h);

/// Connected hypergraphs with a cut edge in which every vertex has degree at
/// least 2: two random pieces of minimum degree 2 joined by one edge.
std::vector<Hypergraph> generate_cut_edge_instances(std::uint64_t seed, std::size_t count);

}  // namespace eulerhg
