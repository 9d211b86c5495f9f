#include "eulerhg/bench.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eulerhg/error.hpp"
#include "eulerhg/hgr_io.hpp"

namespace eulerhg {

std::string BenchReport::table() const {
  std::ostringstream out;
  out << "instance;strategy;mode;decision;max_depth;nodes;assignments;pruned;oracle_fallbacks;"
         "standard_fallbacks;skipped_wide;wall_ms\n";
  for (const auto& r : rows) {
    out << r.instance << ';' << to_string(r.strategy) << ';' << to_string(r.mode) << ';'
        << (r.decision ? "yes" : "no") << ';' << r.stats.max_depth << ';' << r.stats.nodes << ';'
        << r.stats.assignments << ';' << r.stats.pruned << ';' << r.stats.oracle_fallbacks << ';'
        << r.stats.standard_fallbacks << ';' << r.stats.skipped_wide << ';' << r.stats.elapsed_ms << '\n';
  }
  return out.str();
}

std::string BenchReport::summary() const {
  struct Totals {
    std::size_t instances = 0;
    std::size_t yes = 0;
    SolveStats stats;
    double ms = 0.0;
  };
  std::map<Strategy, Totals> by;
  for (const auto& r : rows) {
    Totals& t = by[r.strategy];
    ++t.instances;
    t.yes += r.decision ? 1 : 0;
    t.stats += r.stats;
    t.ms += r.stats.elapsed_ms;
  }
  std::ostringstream out;
  for (const auto& [s, t] : by) {
    out << "# " << to_string(s) << ": instances=" << t.instances << " yes=" << t.yes
        << " max_depth=" << t.stats.max_depth << " nodes=" << t.stats.nodes
        << " assignments=" << t.stats.assignments << " oracle_fallbacks=" << t.stats.oracle_fallbacks
        << " standard_fallbacks=" << t.stats.standard_fallbacks << " wall_ms=" << t.ms << '\n';
  }
  return out.str();
}

Corpus load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".hgr") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Corpus out;
  for (const auto& f : files) {
    try {
      out.emplace_back(f.stem().string(), read_hgr_file(f));
    } catch (const Error& e) {
      throw Error(Errc::SyntaxError, f.string() + ": " + e.what());
    }
  }
  return out;
}

BenchReport run_bench(const Corpus& corpus, const std::vector<Strategy>& strategies, Mode mode,
                      const SolverConfig& base) {
  BenchReport report;
  for (const auto& [name, h] : corpus) {
    std::optional<bool> agreed;
    for (Strategy s : strategies) {
      SolverConfig cfg = base;
      cfg.strategy = s;
      SolveOutcome r = solve(h, mode, cfg);
      if (agreed && *agreed != r.decision) {
        throw Error(Errc::DecisionMismatch, name + ": " + std::string(to_string(s)) + " disagrees on " +
                                                std::string(to_string(mode)));
      }
      agreed = r.decision;
      report.rows.push_back({name, s, mode, r.decision, r.stats});
    }
  }
  return report;
}

}  // namespace eulerhg
