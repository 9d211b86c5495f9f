#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "eulerhg/hypergraph.hpp"
#include "eulerhg/solvers.hpp"

namespace eulerhg {

struct BenchRow {
  std::string instance;
  Strategy strategy;
  Mode mode;
  bool decision;
  SolveStats stats;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// `;`-separated table with a header line.
  std::string table() const;
  /// Per-strategy totals: instances, yes count, nodes, assignments, oracle
  /// fallbacks, wall time.
  std::string summary() const;
};

using Corpus = std::vector<std::pair<std::string, Hypergraph>>;

/// Every *.hgr file in `dir`, sorted by file name. A file that does not
/// parse is reported as Errc::SyntaxError naming it.
Corpus load_corpus(const std::filesystem::path& dir);

/// Runs each strategy on each instance (instance-major order). Throws
/// Errc::DecisionMismatch as soon as two strategies disagree on an instance.
BenchReport run_bench(const Corpus& corpus, const std::vector<Strategy>& strategies, Mode mode,
                      const SolverConfig& base = {});

}  // namespace eulerhg
