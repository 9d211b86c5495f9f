// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpora.hpp"
#include "eulerhg/assignments.hpp"
#include "eulerhg/bench.hpp"
#include "eulerhg/collapse.hpp"
#include "eulerhg/edge_cuts.hpp"
#include "eulerhg/error.hpp"
#include "eulerhg/generators.hpp"
#include "eulerhg/oracle.hpp"
#include "eulerhg/solvers.hpp"

namespace {

using namespace eulerhg;
using Clock = std::chrono::steady_clock;
using Ids = std::vector<EdgeId>;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

struct Solver {
  const char* name;
  SolveOutcome (*fn)(const Hypergraph&, const SolverConfig&);
  Mode mode;
};

const Solver kSolvers[] = {{"family/standard", solve_family_standard, Mode::Family},
                           {"tour/standard", solve_tour_standard, Mode::Tour},
                           {"family/collapse", solve_family_collapse, Mode::Family},
                           {"tour/collapse", solve_tour_collapse, Mode::Tour}};

struct Agreement {
  std::size_t mismatches = 0;
  std::size_t bad_certificates = 0;
  std::size_t positives = 0;
  std::string first;
};

void compare_with_oracle(const Hypergraph& h, std::size_t index, Agreement& a) {
  const bool expected[2] = {oracle_euler(h, Mode::Family).decision, oracle_euler(h, Mode::Tour).decision};
  for (const auto& s : kSolvers) {
    const auto r = s.fn(h, {});
    const bool want = expected[s.mode == Mode::Tour];
    if (r.decision != want) {
      if (a.mismatches++ == 0) a.first = "instance " + std::to_string(index) + " " + s.name;
    }
    if (r.decision) {
      ++a.positives;
      const bool ok = r.certificate && verify_euler_family(h, *r.certificate) &&
                      (s.mode == Mode::Family || r.certificate->trails.size() <= 1);
      if (!ok) ++a.bad_certificates;
    }
  }
}

std::vector<Hypergraph> criterion2_corpus() { return corpora::random_instances(500, 7, 7, 2, 5, 20240502); }

Verdict criterion1() {
  const auto t0 = Clock::now();
  const auto& corpus = corpora::exhaustive_4x4();
  Agreement a;
  for (std::size_t i = 0; i < corpus.size(); ++i) compare_with_oracle(corpus[i], i, a);
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "oracle equivalence over " << corpus.size() << " exhaustive instances (<=4 vertices, <=4 edges), "
    << "4 solvers x oracle: " << a.mismatches << " mismatches, " << a.bad_certificates << " bad certificates, "
    << fmt_seconds(s) << " (limit 300 s)";
  if (a.mismatches) d << "; first: " << a.first;
  return {a.mismatches == 0 && a.bad_certificates == 0 && s <= 300.0, d.str()};
}

Verdict criterion2() {
  const auto t0 = Clock::now();
  const auto corpus = criterion2_corpus();
  Agreement a;
  for (std::size_t i = 0; i < corpus.size(); ++i) compare_with_oracle(corpus[i], i, a);
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "oracle equivalence over " << corpus.size() << " random instances (<=7 vertices, <=7 edges, sizes 2-5): "
    << a.mismatches << " mismatches, " << a.positives << " positive decisions, " << a.bad_certificates
    << " failing certificates, " << fmt_seconds(s) << " (limit 600 s)";
  if (a.mismatches) d << "; first: " << a.first;
  return {a.mismatches == 0 && a.bad_certificates == 0 && s <= 600.0, d.str()};
}

Verdict criterion3() {
  // Random connected multigraphs: a random spanning tree plus random extra
  // edges (parallel edges allowed), up to 8 vertices and 12 edges.
  std::mt19937_64 rng(3);
  std::size_t mismatches = 0;
  std::size_t even_count = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(n - 1, 12)(rng);
    std::vector<std::vector<VertexId>> edges;
    for (VertexId v = 1; v < n; ++v) {
      edges.push_back({std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v});
    }
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    while (edges.size() < m) {
      const VertexId a = pick(rng);
      const VertexId b = pick(rng);
      if (a != b) edges.push_back({a, b});
    }
    std::vector<VertexId> vs(n);
    for (VertexId v = 0; v < n; ++v) vs[v] = v;
    const Hypergraph g = Hypergraph::build(vs, edges);
    bool even = true;
    for (VertexId v : g.vertices()) even = even && g.degree(v) % 2 == 0;
    even_count += even;
    const bool decisions[3] = {solve_tour_standard(g).decision, solve_tour_collapse(g).decision,
                               oracle_euler(g, Mode::Tour).decision};
    for (bool d : decisions) mismatches += d != even;
  }
  std::ostringstream d;
  d << "200 random connected multigraphs (<=8 vertices, <=12 edges; " << even_count
    << " even): tour <=> all degrees even, " << mismatches << " mismatches over 2 solvers + oracle";
  return {mismatches == 0, d.str()};
}

Verdict criterion4() {
  const auto corpus = generate_cut_edge_instances(4, 50);
  std::size_t wrong = 0;
  std::size_t exceptions = 0;
  std::size_t shaped = 0;
  for (const auto& h : corpus) {
    const auto peeled = peel_degree_le1(h);
    bool ok_shape = peeled.verdict == PeelVerdict::Proceed && find_cut_edge(peeled.reduced).has_value();
    for (VertexId v : peeled.reduced.vertices()) ok_shape = ok_shape && peeled.reduced.degree(v) >= 2;
    shaped += ok_shape;
    for (auto fn : {solve_tour_standard, solve_tour_collapse}) {
      try {
        wrong += fn(h, {}).decision;
      } catch (const std::exception&) {
        ++exceptions;
      }
    }
  }
  std::ostringstream d;
  d << corpus.size() << " instances with a cut edge and minimum degree >=2 after peeling (" << shaped
    << " confirmed): " << wrong << " tour answers 'yes', " << exceptions << " exceptions";
  return {corpus.size() == 50 && shaped == 50 && wrong == 0 && exceptions == 0, d.str()};
}

Verdict criterion5() {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (const auto& h : corpora::exhaustive_4x4()) {
    for (VertexId u : h.vertices()) {
      Ids incident;
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (contains(h.edge(e), u)) incident.push_back(e);
      }
      for (std::uint32_t mask = 0; mask < (1u << incident.size()); ++mask) {
        if (std::popcount(mask) > 2) continue;
        Ids f;
        for (std::size_t i = 0; i < incident.size(); ++i) {
          if (mask >> i & 1) f.push_back(incident[i]);
        }
        const Gadget g = fixed_vertex_gadget(h, u, f);
        for (Mode mode : {Mode::Family, Mode::Tour}) {
          ++checked;
          mismatches += oracle_euler(h, mode, Constraint{u, f}).decision != oracle_euler(g.graph, mode).decision;
        }
      }
    }
  }
  std::ostringstream d;
  d << checked << " (H, u, F, mode) cases over the exhaustive corpus with |F| <= 2: constrained oracle vs gadget, "
    << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

std::vector<VertexSet> all_sides(const Hypergraph& h) {
  std::vector<VertexSet> out;
  const auto& v = h.vertices();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << v.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (mask >> i & 1) s.push_back(v[i]);
    }
    out.push_back(s);
  }
  return out;
}

Verdict criterion6() {
  std::vector<Hypergraph> small(corpora::exhaustive_4x4());
  for (std::size_t n = 5; n <= 10; ++n) {
    for (auto& h : corpora::random_instances(100, n, n + 4, 2, 5, 600 + n)) small.push_back(std::move(h));
  }
  std::size_t cut_mismatch = 0;
  for (const auto& h : small) {
    if (h.num_vertices() < 2) continue;
    const std::size_t want = oracle_min_cut(h).size();
    cut_mismatch += minimum_edge_cut(h).size() != want;
    cut_mismatch += minimum_edge_cut_pendant_pairs(h).size() != want;
  }

  std::size_t minimalized = 0;
  std::size_t not_minimal = 0;
  for (const auto& h : small) {
    if (h.num_vertices() > 7) continue;
    for (const auto& s : all_sides(h)) {
      ++minimalized;
      not_minimal += !is_minimal(h, minimalize(h, boundary(h, s).edges).edges);
    }
  }

  std::size_t split_cases = 0;
  std::size_t split_fail = 0;
  for (const auto& h : corpora::exhaustive_4x4()) {
    const auto sides = all_sides(h);
    for (std::uint32_t mask = 0; mask < (1u << h.num_edges()); ++mask) {
      Ids f;
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (mask >> e & 1) f.push_back(e);
      }
      const bool disconnected = !is_connected(remove_edges(h, f).graph);
      bool has_cut = false;
      for (const auto& s : sides) {
        const auto c = boundary(h, s).edges;
        has_cut = has_cut || std::includes(f.begin(), f.end(), c.begin(), c.end());
      }
      ++split_cases;
      split_fail += disconnected != has_cut;
    }
  }
  std::ostringstream d;
  d << "minimum cut = brute force on " << small.size() << " instances with |V| <= 10 (" << cut_mismatch
    << " mismatches); " << minimalized << " minimalized cuts, " << not_minimal << " not minimal; " << split_cases
    << " (H, F) cases of disconnected iff contains a cut, " << split_fail << " failures";
  return {cut_mismatch == 0 && not_minimal == 0 && split_fail == 0, d.str()};
}

Verdict criterion7() {
  std::size_t over = 0;
  std::size_t cuts = 0;
  std::size_t bip_wrong = 0;
  auto check = [&](const Hypergraph& h) {
    std::set<Ids> seen;
    for (const auto& s : all_sides(h)) {
      const auto c = minimalize(h, boundary(h, s).edges);
      if (!seen.insert(c.edges).second) continue;
      ++cuts;
      const auto blocks = standard_blocks(h, c.edges);
      AssignmentEnumerator en(h, c.edges, blocks);
      const auto listed = enumerate_assignments(h, c.edges, blocks).size();
      over += listed > en.upper_bound() || listed != en.count();
      const std::size_t k = blocks.size();
      bip_wrong += enumerate_bipartitions(blocks).size() != (std::size_t{1} << (k - 1)) - 1;
    }
  };
  for (const auto& h : corpora::exhaustive_4x4()) check(h);
  for (const auto& h : corpora::random_instances(200, 7, 7, 2, 5, 7)) check(h);

  // Fat cut: two sides of two vertices, |F| copies of the full vertex set.
  std::size_t tight_fail = 0;
  for (std::size_t f = 1; f <= 5; ++f) {
    std::vector<std::vector<VertexId>> edges{{1, 2}, {3, 4}};
    Ids cut;
    for (std::size_t i = 0; i < f; ++i) {
      cut.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({1, 2, 3, 4});
    }
    const Hypergraph h = Hypergraph::build({1, 2, 3, 4}, edges);
    const auto blocks = standard_blocks(h, cut);
    const auto want = static_cast<std::size_t>(std::pow(3, f));
    tight_fail += enumerate_assignments(h, cut, blocks).size() != want;
    tight_fail += AssignmentEnumerator(h, cut, blocks).upper_bound() != want;
  }

  std::size_t formula_fail = 0;
  for (std::size_t k : {2u, 3u, 4u}) {
    std::vector<VertexSet> blocks;
    for (VertexId i = 0; i < k; ++i) blocks.push_back({i});
    formula_fail += enumerate_bipartitions(BlockPartition(blocks, true)).size() != (std::size_t{1} << (k - 1)) - 1;
  }
  std::ostringstream d;
  d << cuts << " minimal cuts: " << over << " counts above (|I|(|I|+1)/2)^|F| or off the product; fat cut tight at 3^|F| "
    << "for |F| = 1..5 (" << tight_fail << " failures); bipartitions = 2^(|I|-1)-1 for |I| = 2,3,4 ("
    << formula_fail << " failures) and on every cut (" << bip_wrong << " failures)";
  return {over == 0 && tight_fail == 0 && formula_fail == 0 && bip_wrong == 0, d.str()};
}

Verdict criterion8() {
  const auto t0 = Clock::now();
  Corpus corpus;
  for (const auto& h : corpora::exhaustive_4x4()) corpus.emplace_back("x" + std::to_string(corpus.size()), h);
  for (auto& h : criterion2_corpus()) corpus.emplace_back("r" + std::to_string(corpus.size()), std::move(h));
  std::size_t mismatches = 0;
  std::uint64_t fallbacks[2] = {0, 0};
  std::uint64_t runs = 0;
  std::uint64_t node_max = 0;
  std::string error;
  for (Mode mode : {Mode::Family, Mode::Tour}) {
    try {
      const auto report = run_bench(corpus, {Strategy::Standard, Strategy::Collapse}, mode);
      for (const auto& r : report.rows) {
        ++runs;
        fallbacks[r.strategy == Strategy::Collapse] += r.stats.oracle_fallbacks;
        node_max = std::max(node_max, r.stats.nodes);
      }
    } catch (const Error& e) {
      if (e.code() != Errc::DecisionMismatch) throw;
      ++mismatches;
      error = e.what();
    }
  }
  // A 4-cycle: the first minimal cut {e0, e1} has |I| = 2 and one vertex
  // per side in each edge, so the only assignment is all-01 and H^alpha = H.
  const Hypergraph engineered = Hypergraph::build({1, 2, 3, 4}, {{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  const auto r = solve_family_standard(engineered);
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "bench {standard, collapse} x {family, tour} over " << corpus.size() << " instances: " << runs
    << " runs completed, " << mismatches << " DecisionMismatch, oracle fallbacks standard=" << fallbacks[0]
    << " collapse=" << fallbacks[1] << ", max nodes per run " << node_max << ", " << fmt_seconds(s)
    << "; engineered all-01 instance: " << r.stats.oracle_fallbacks << " fallbacks";
  if (!error.empty()) d << "; " << error;
  return {mismatches == 0 && runs == 4 * corpus.size() && r.stats.oracle_fallbacks > 0, d.str()};
}

}  // namespace

int main() {
  const std::function<Verdict()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
