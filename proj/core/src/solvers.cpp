#include "eulerhg/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <variant>

#include "eulerhg/assignments.hpp"
#include "eulerhg/collapse.hpp"
#include "eulerhg/edge_cuts.hpp"
#include "eulerhg/error.hpp"

namespace eulerhg {

std::string_view to_string(Mode mode) noexcept { return mode == Mode::Family ? "family" : "tour"; }

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Standard: return "standard";
    case Strategy::Collapse: return "collapse";
    case Strategy::Oracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(CutChoice c) noexcept { return c == CutChoice::Minimal ? "minimal" : "minimum"; }

Strategy parse_strategy(std::string_view name) {
  if (name == "standard") return Strategy::Standard;
  if (name == "collapse") return Strategy::Collapse;
  if (name == "oracle") return Strategy::Oracle;
  throw Error(Errc::BadSpec, "unknown strategy '" + std::string(name) + "'");
}

CutChoice parse_cut_choice(std::string_view name) {
  if (name == "minimal") return CutChoice::Minimal;
  if (name == "minimum") return CutChoice::Minimum;
  throw Error(Errc::BadSpec, "unknown cut choice '" + std::string(name) + "'");
}

CutChoice SolverConfig::effective_cut() const noexcept {
  if (cut) return *cut;
  return strategy == Strategy::Collapse ? CutChoice::Minimum : CutChoice::Minimal;
}

SolveStats& SolveStats::operator+=(const SolveStats& o) {
  max_depth = std::max(max_depth, o.max_depth);
  nodes += o.nodes;
  assignments += o.assignments;
  pruned += o.pruned;
  oracle_fallbacks += o.oracle_fallbacks;
  standard_fallbacks += o.standard_fallbacks;
  skipped_wide += o.skipped_wide;
  oracle_states += o.oracle_states;
  return *this;
}

QuickCheck quick_checks(const Hypergraph& h, Mode mode) {
  if (mode == Mode::Family) return {};
  for (VertexId v : h.vertices()) {
    if (h.degree(v) < 2) return {};
  }
  if (auto e = find_cut_edge(h)) return {false, "cut edge e" + std::to_string(*e) + ", min degree ≥2"};
  return {};
}

namespace {

using Found = std::optional<EulerFamily>;

void append(EulerFamily& into, EulerFamily part, std::span<const EdgeId> origin) {
  for (auto& t : part.trails) into.trails.push_back(lift_trail(t, origin));
}

std::vector<VertexSet> nonempty_blocks(const Hypergraph& h) {
  const ComponentDecomposition comps = components(h);
  std::vector<char> has_edge(comps.count(), 0);
  for (const auto& e : h.edges()) {
    if (!e.empty()) has_edge[comps.component_of(e.front())] = 1;
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < comps.count(); ++i) {
    if (has_edge[i]) out.push_back(comps.blocks[i]);
  }
  return out;
}

class Engine {
 public:
  Engine(Mode mode, const SolverConfig& cfg) : mode_(mode), cfg_(cfg) {}

  SolveStats stats;

  /// Any connectivity. A recursive instance passes the size of the node that
  /// produced it; if it did not shrink it goes to the oracle.
  Found dispatch(const Hypergraph& h, std::optional<std::size_t> parent, std::size_t depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    for (const auto& e : h.edges()) {
      if (e.empty()) return std::nullopt;
    }
    if (parent && !shrinks(h.size(), *parent)) {
      ++stats.oracle_fallbacks;
      return oracle(h);
    }
    if (h.is_empty()) return EulerFamily{};

    const std::vector<VertexSet> blocks = nonempty_blocks(h);
    if (blocks.size() == 1 && blocks.front().size() == h.num_vertices()) return connected(h, depth);
    if (mode_ == Mode::Tour && blocks.size() > 1) return std::nullopt;
    EulerFamily out;
    for (const auto& block : blocks) {
      const Subhypergraph sub = induced(h, block);
      Found part = connected(sub.graph, depth);
      if (!part) return std::nullopt;
      append(out, std::move(*part), sub.origin);
    }
    return out;
  }

 private:
  bool shrinks(std::size_t child, std::size_t parent) const {
    return child < parent && static_cast<double>(child) <= cfg_.shrink_ratio * static_cast<double>(parent);
  }

  Found oracle(const Hypergraph& h) {
    SolveOutcome r = oracle_euler(h, mode_, std::nullopt, cfg_.oracle);
    stats.oracle_states += r.stats.oracle_states;
    return r.certificate;
  }

  Found connected(const Hypergraph& h, std::size_t depth) {
    switch (cfg_.strategy) {
      case Strategy::Oracle:
        return oracle(h);
      case Strategy::Standard:
        return mode_ == Mode::Family ? family_standard(h, depth) : tour_standard(h, depth);
      case Strategy::Collapse:
        return mode_ == Mode::Family ? family_collapse(h, depth) : tour_collapse(h, depth);
    }
    return std::nullopt;
  }

  /// Peeling preamble; returns the reduced hypergraph, or the final answer.
  std::variant<Hypergraph, Found> peel(const Hypergraph& h) {
    PeelResult r = peel_degree_le1(h);
    switch (r.verdict) {
      case PeelVerdict::NoEulerFamily: return Found{};
      case PeelVerdict::TrivialEulerian: return Found{EulerFamily{}};
      case PeelVerdict::Proceed: break;
    }
    return std::move(r.reduced);
  }

  EdgeCut cut_of(const Hypergraph& h) const {
    return cfg_.effective_cut() == CutChoice::Minimum ? minimum_edge_cut(h) : minimal_edge_cut(h);
  }

  /// Runs eval over the task stream and returns the result of the first
  /// task that succeeds. The top-level node may evaluate batches in parallel;
  /// the least successful index still wins, so the answer is the same.
  template <class Task>
  Found first_success(std::function<std::optional<Task>()> next,
                      std::function<Found(Engine&, const Task&)> eval, std::size_t depth) {
    const unsigned threads = cfg_.threads ? cfg_.threads : std::max(1u, std::thread::hardware_concurrency());
    if (!cfg_.parallel || depth != 0 || threads < 2) {
      while (auto task = next()) {
        if (Found r = eval(*this, *task)) return r;
      }
      return std::nullopt;
    }
    const std::size_t batch_size = 4 * static_cast<std::size_t>(threads);
    while (true) {
      std::vector<Task> batch;
      while (batch.size() < batch_size) {
        auto task = next();
        if (!task) break;
        batch.push_back(std::move(*task));
      }
      if (batch.empty()) return std::nullopt;
      std::vector<Found> results(batch.size());
      std::vector<Engine> workers(threads, Engine(mode_, cfg_));
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = t; i < batch.size(); i += threads) results[i] = eval(workers[t], batch[i]);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& w : workers) stats += w.stats;
      for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
      }
      for (auto& r : results) {
        if (r) return std::move(r);
      }
    }
  }

  // Standard blocks; recurse on every component of H^alpha.
  Found family_standard(const Hypergraph& input, std::size_t depth) {
    auto peeled = peel(input);
    if (auto* done = std::get_if<Found>(&peeled)) return std::move(*done);
    const Hypergraph& h = std::get<Hypergraph>(peeled);
    const std::size_t p = h.size();
    const EdgeCut cut = cut_of(h);
    const BlockPartition blocks = standard_blocks(h, cut.edges);
    AssignmentEnumerator it(h, cut.edges, blocks);

    return first_success<Assignment>(
        [&] { return it.next(); },
        [&](Engine& e, const Assignment& alpha) -> Found {
          ++e.stats.assignments;
          if (cfg_.prune && !multigraph_euler_status(quotient_multigraph(blocks, alpha)).has_family) {
            ++e.stats.pruned;
            return std::nullopt;
          }
          const Hypergraph ha = apply(h, blocks, alpha);
          EulerFamily out;
          for (const auto& block : nonempty_blocks(ha)) {
            const Subhypergraph sub = induced(ha, block);
            Found part = e.dispatch(sub.graph, p, depth + 1);
            if (!part) return std::nullopt;
            append(out, std::move(*part), sub.origin);
          }
          return out;
        },
        depth);
  }

  // Tour search over standard blocks, after peeling, on a given minimal cut.
  Found tour_standard_on(const Hypergraph& h, const EdgeCut& cut, std::size_t depth) {
    if (!quick_checks(h, Mode::Tour).pass) return std::nullopt;
    if (cut.size() == 1) return std::nullopt;
    const std::size_t nonempty = nonempty_blocks(remove_edges(h, cut.edges).graph).size();
    if (cut.size() < nonempty) return std::nullopt;
    const std::size_t p = h.size();
    const BlockPartition blocks = standard_blocks(h, cut.edges);
    AssignmentEnumerator it(h, cut.edges, blocks);

    return first_success<Assignment>(
        [&] { return it.next(); },
        [&](Engine& e, const Assignment& alpha) -> Found {
          ++e.stats.assignments;
          if (cfg_.prune && !multigraph_euler_status(quotient_multigraph(blocks, alpha)).has_tour) {
            ++e.stats.pruned;
            return std::nullopt;
          }
          const Hypergraph ha = apply(h, blocks, alpha);
          const std::vector<VertexSet> parts = nonempty_blocks(ha);
          if (parts.size() != 1) return std::nullopt;
          const Subhypergraph sub = induced(ha, parts.front());
          Found tour = e.dispatch(sub.graph, p, depth + 1);
          if (!tour) return std::nullopt;
          EulerFamily out;
          append(out, std::move(*tour), sub.origin);
          return out;
        },
        depth);
  }

  Found tour_standard(const Hypergraph& input, std::size_t depth) {
    auto peeled = peel(input);
    if (auto* done = std::get_if<Found>(&peeled)) return std::move(*done);
    const Hypergraph& h = std::get<Hypergraph>(peeled);
    return tour_standard_on(h, cut_of(h), depth);
  }

  /// Family of h^alpha o other (gadgeted so that it traverses the collapsed
  /// vertex via every crossing edge), mapped back to the collapsed graph.
  Found collapsed_side(const Collapsed& c, std::span<const EdgeId> crossing, std::size_t p, std::size_t depth) {
    std::vector<EdgeId> via;
    for (EdgeId f : crossing) via.push_back(c.forward.at(f).value());
    const Gadget g = fixed_vertex_gadget(c.graph, c.collapsed_vertex, via);
    Found fam = dispatch(g.graph, p, depth + 1);
    if (!fam) return std::nullopt;
    return ungadget_family(g, *fam);
  }

  /// Both collapsed sides, then linking.
  Found linked(const Hypergraph& ha, const BlockPartition& sides, const Assignment& alpha, std::size_t p,
               std::size_t depth) {
    const std::vector<EdgeId> crossing = alpha.crossing_edges();
    const Collapsed c0 = collapse(ha, sides.block(1));
    Found f0 = collapsed_side(c0, crossing, p, depth);
    if (!f0) return std::nullopt;
    const Collapsed c1 = collapse(ha, sides.block(0));
    Found f1 = collapsed_side(c1, crossing, p, depth);
    if (!f1) return std::nullopt;
    return link_families(ha, alpha, {c0, *f0}, {c1, *f1});
  }

  // Collapse-based family search over one bipartition, the most balanced one.
  Found family_collapse(const Hypergraph& input, std::size_t depth) {
    auto peeled = peel(input);
    if (auto* done = std::get_if<Found>(&peeled)) return std::move(*done);
    const Hypergraph& h = std::get<Hypergraph>(peeled);
    const std::size_t p = h.size();
    const EdgeCut cut = cut_of(h);
    const BlockPartition blocks = standard_blocks(h, cut.edges);
    std::vector<BlockPartition> options = enumerate_bipartitions(blocks);
    auto gap = [](const BlockPartition& b) {
      const auto a = static_cast<long long>(b.block(0).size());
      const auto c = static_cast<long long>(b.block(1).size());
      return a > c ? a - c : c - a;
    };
    const BlockPartition sides =
        *std::min_element(options.begin(), options.end(),
                          [&](const BlockPartition& a, const BlockPartition& b) { return gap(a) < gap(b); });
    AssignmentEnumerator it(h, cut.edges, sides);

    return first_success<Assignment>(
        [&] { return it.next(); },
        [&](Engine& e, const Assignment& alpha) -> Found {
          ++e.stats.assignments;
          const std::size_t crossing = alpha.crossing_edges().size();
          if (crossing % 2 != 0) {
            ++e.stats.pruned;
            return std::nullopt;
          }
          const Hypergraph ha = apply(h, sides, alpha);
          if (crossing > 0) return e.linked(ha, sides, alpha, p, depth);
          EulerFamily out;
          for (BlockId i = 0; i < 2; ++i) {
            const Subhypergraph sub = induced(ha, sides.block(i));
            Found part = e.dispatch(sub.graph, p, depth + 1);
            if (!part) return std::nullopt;
            append(out, std::move(*part), sub.origin);
          }
          return out;
        },
        depth);
  }

  // Collapse-based tour search over every bipartition; |01| in {0, 2} is
  // decided here, wider assignments fall through to the standard loop.
  Found tour_collapse(const Hypergraph& input, std::size_t depth) {
    auto peeled = peel(input);
    if (auto* done = std::get_if<Found>(&peeled)) return std::move(*done);
    const Hypergraph& h = std::get<Hypergraph>(peeled);
    if (!quick_checks(h, Mode::Tour).pass) return std::nullopt;
    const std::size_t p = h.size();
    const EdgeCut cut = cut_of(h);
    if (cut.size() == 1) return std::nullopt;
    const BlockPartition blocks = standard_blocks(h, cut.edges);
    const std::vector<BlockPartition> options = enumerate_bipartitions(blocks);

    struct Task {
      std::size_t side;
      Assignment alpha;
    };
    std::size_t current = 0;
    std::optional<AssignmentEnumerator> it;
    auto next = [&]() -> std::optional<Task> {
      while (current < options.size()) {
        if (!it) it.emplace(h, cut.edges, options[current]);
        if (auto a = it->next()) return Task{current, std::move(*a)};
        it.reset();
        ++current;
      }
      return std::nullopt;
    };
    Found found = first_success<Task>(
        next,
        [&](Engine& e, const Task& task) -> Found {
          ++e.stats.assignments;
          const BlockPartition& sides = options[task.side];
          const std::size_t crossing = task.alpha.crossing_edges().size();
          if (crossing % 2 != 0) {
            ++e.stats.pruned;
            return std::nullopt;
          }
          if (crossing > 2) {
            ++e.stats.skipped_wide;
            return std::nullopt;
          }
          const Hypergraph ha = apply(h, sides, task.alpha);
          if (crossing == 2) return e.linked(ha, sides, task.alpha, p, depth);
          const Subhypergraph s0 = induced(ha, sides.block(0));
          const Subhypergraph s1 = induced(ha, sides.block(1));
          if (!s0.graph.is_empty() && !s1.graph.is_empty()) return std::nullopt;
          const Subhypergraph& side = s0.graph.is_empty() ? s1 : s0;
          Found tour = e.dispatch(side.graph, p, depth + 1);
          if (!tour) return std::nullopt;
          EulerFamily out;
          append(out, std::move(*tour), side.origin);
          return out;
        },
        depth);
    // With |F| <= 3 no even assignment is wider than 2, so the loop above
    // was complete.
    if (found || cut.size() <= 3) return found;
    ++stats.standard_fallbacks;
    return tour_standard_on(h, cut, depth);
  }

  Mode mode_;
  SolverConfig cfg_;
};

SolveOutcome run(const Hypergraph& h, Mode mode, const SolverConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Engine engine(mode, cfg);
  Found fam = engine.dispatch(h, std::nullopt, 0);
  if (fam) {
    if (auto r = verify_euler_family(h, *fam); !r) {
      throw Error(Errc::CertificateInvalid, "solver produced an invalid certificate: " + r.message);
    }
    if (mode == Mode::Tour && fam->trails.size() > 1) {
      throw Error(Errc::CertificateInvalid, "solver produced several trails in tour mode");
    }
  }
  SolveOutcome out;
  out.decision = fam.has_value();
  out.certificate = std::move(fam);
  out.stats = engine.stats;
  out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SolverConfig with_strategy(SolverConfig cfg, Strategy s) {
  cfg.strategy = s;
  return cfg;
}

}  // namespace

SolveOutcome solve_family_standard(const Hypergraph& h, const SolverConfig& cfg) {
  return run(h, Mode::Family, with_strategy(cfg, Strategy::Standard));
}

SolveOutcome solve_tour_standard(const Hypergraph& h, const SolverConfig& cfg) {
  return run(h, Mode::Tour, with_strategy(cfg, Strategy::Standard));
}

SolveOutcome solve_family_collapse(const Hypergraph& h, const SolverConfig& cfg) {
  return run(h, Mode::Family, with_strategy(cfg, Strategy::Collapse));
}

SolveOutcome solve_tour_collapse(const Hypergraph& h, const SolverConfig& cfg) {
  return run(h, Mode::Tour, with_strategy(cfg, Strategy::Collapse));
}

SolveOutcome solve(const Hypergraph& h, Mode mode, const SolverConfig& cfg) { return run(h, mode, cfg); }

}  // namespace eulerhg
