#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "eulerhg/hypergraph.hpp"
#include "eulerhg/oracle.hpp"
#include "eulerhg/outcome.hpp"

namespace eulerhg {

enum class Strategy { Standard, Collapse, Oracle };
enum class CutChoice { Minimal, Minimum };

std::string_view to_string(Strategy s) noexcept;
std::string_view to_string(CutChoice c) noexcept;
/// Throws Errc::BadSpec for unknown names.
Strategy parse_strategy(std::string_view name);
CutChoice parse_cut_choice(std::string_view name);

struct SolverConfig {
  Strategy strategy = Strategy::Standard;
  /// Unset means Minimal for Standard and Minimum for Collapse.
  std::optional<CutChoice> cut;
  /// A recursive instance must have size at most shrink_ratio * p, and
  /// strictly less than p, or it is handed to the oracle.
  double shrink_ratio = 1.0;
  /// Branch-parallel search at the top-level node.
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Recorded for reproducibility; the search itself is deterministic.
  std::uint64_t seed = 0;
  /// Skip assignments whose multigraph fails the Euler parity test.
  bool prune = true;
  OracleOptions oracle;

  CutChoice effective_cut() const noexcept;
};

struct QuickCheck {
  bool pass = true;
  std::string reason;
};

/// Tour mode rejects a peeled hypergraph with a cut edge; family mode
/// always passes.
QuickCheck quick_checks(const Hypergraph& h, Mode mode);

/// The four reduction algorithms. Inputs need not be connected: family mode
/// solves each non-empty component, tour mode needs at most one. Every
/// positive outcome carries a certificate that has been verified against h.
SolveOutcome solve_family_standard(const Hypergraph& h, const SolverConfig& cfg = {});
SolveOutcome solve_tour_standard(const Hypergraph& h, const SolverConfig& cfg = {});
SolveOutcome solve_family_collapse(const Hypergraph& h, const SolverConfig& cfg = {});
SolveOutcome solve_tour_collapse(const Hypergraph& h, const SolverConfig& cfg = {});

/// Dispatches on cfg.strategy.
SolveOutcome solve(const Hypergraph& h, Mode mode, const SolverConfig& cfg = {});

}  // namespace eulerhg
