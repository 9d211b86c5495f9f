#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "eulerhg/trails.hpp"

namespace eulerhg {

enum class Mode { Family, Tour };

std::string_view to_string(Mode mode) noexcept;

struct SolveStats {
  std::size_t max_depth = 0;
  std::uint64_t nodes = 0;               // solver calls, including oracle leaves
  std::uint64_t assignments = 0;         // edge cut assignments enumerated
  std::uint64_t pruned = 0;              // discarded by G^alpha parity or |01| parity
  std::uint64_t oracle_fallbacks = 0;    // recursive instances that did not shrink
  std::uint64_t standard_fallbacks = 0;  // tour/collapse nodes finished by the standard loop
  std::uint64_t skipped_wide = 0;        // tour/collapse branches with |01| > 2
  std::uint64_t oracle_states = 0;       // backtracking states expanded by the oracle
  double elapsed_ms = 0.0;

  SolveStats& operator+=(const SolveStats& other);
};

/// decision == true implies a certificate. In tour mode the certificate is a
/// single trail, or no trail at all when the hypergraph has no edges.
struct SolveOutcome {
  bool decision = false;
  std::optional<EulerFamily> certificate;
  SolveStats stats;
};

}  // namespace eulerhg
