#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eulerhg/edge_cuts.hpp"
#include "eulerhg/hypergraph.hpp"
#include "eulerhg/outcome.hpp"

namespace eulerhg {

/// Require every edge of `via` to be traversed with `vertex` as one of its
/// two anchors.
struct Constraint {
  VertexId vertex;
  std::vector<EdgeId> via;
};

struct OracleOptions {
  std::size_t max_vertices = 64;
  std::size_t max_edges = 64;
  std::uint64_t max_states = 20'000'000;
};

/// Exhaustive backtracking. Trails are grown from the least unused edge,
/// extended by least edge id then least next vertex; closed trails become
/// forbidden anchors for the rest of the family. Failed states are memoized.
/// In family mode any valid family is returned, not a smallest one.
/// Throws Errc::BudgetExceeded above the size bounds or state budget, and
/// Errc::EdgeMissesVertex for a constraint edge not containing its vertex.
SolveOutcome oracle_euler(const Hypergraph& h, Mode mode,
                          const std::optional<Constraint>& constraint = std::nullopt,
                          const OracleOptions& options = {});

inline constexpr std::size_t kOracleMinCutLimit = 15;

/// Minimum |[S, V-S]| over all sides S, returning the lexicographically least
/// minimizing side. Throws Errc::TooLarge, Errc::Disconnected,
/// Errc::TrivialHypergraph.
EdgeCut oracle_min_cut(const Hypergraph& h);

}  // namespace eulerhg
