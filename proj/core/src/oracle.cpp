#include "eulerhg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <string>
#include <unordered_set>

#include "eulerhg/error.hpp"

namespace eulerhg {

namespace {

using Mask = std::uint64_t;

struct StateKey {
  Mask used;
  Mask done;
  Mask cur;
  std::uint32_t head;
  std::uint32_t start;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t x = k.used * 0x9E3779B97F4A7C15ull;
    x ^= (k.done + 0x632BE59BD9B4E019ull) * 0xBF58476D1CE4E5B9ull;
    x ^= (k.cur + 0x94D049BB133111EBull) * 0xD6E8FEB86659FD93ull;
    x ^= (static_cast<std::uint64_t>(k.head) << 32 | k.start) * 0x2545F4914F6CDD1Dull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

class Search {
 public:
  Search(const Hypergraph& h, Mode mode, const std::optional<Constraint>& constraint,
         std::uint64_t max_states)
      : h_(h), mode_(mode), max_states_(max_states) {
    n_ = h.num_vertices();
    m_ = h.num_edges();
    all_ = (m_ == 64) ? ~Mask{0} : ((Mask{1} << m_) - 1);
    incident_.resize(n_);
    for (std::size_t e = 0; e < m_; ++e) {
      Mask em = 0;
      for (VertexId v : h.edges()[e]) {
        const std::size_t i = h.vertex_index(v);
        em |= Mask{1} << i;
        incident_[i].push_back(static_cast<std::uint32_t>(e));
      }
      edge_mask_.push_back(em);
    }
    if (constraint) {
      pivot_ = static_cast<std::uint32_t>(h.vertex_index(constraint->vertex));
      for (EdgeId f : constraint->via) via_ |= Mask{1} << f;
    }
  }

  std::optional<EulerFamily> run() {
    if (!open()) return std::nullopt;
    EulerFamily out;
    for (const auto& t : trails_) out.trails.push_back(t);
    return out;
  }

  std::uint64_t states() const noexcept { return states_; }

 private:
  struct Step {
    std::uint32_t anchor;
    std::uint32_t edge;
  };

  bool allowed(std::uint32_t e, std::uint32_t a, std::uint32_t b) const {
    if (!(via_ >> e & 1)) return true;
    return a == pivot_ || b == pivot_;
  }

  // Every unused edge still needs two vertices that may become anchors, and
  // the pivot must stay available while some constrained edge is unused.
  bool feasible() const {
    Mask rest = all_ & ~used_;
    if ((rest & via_) && pivot_ != kNone && (done_ >> pivot_ & 1)) return false;
    while (rest) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      if (std::popcount(edge_mask_[e] & ~done_) < 2) return false;
    }
    return true;
  }

  void tick() {
    if (++states_ > max_states_) throw Error(Errc::BudgetExceeded, "oracle state budget exhausted");
  }

  bool open() {
    if (used_ == all_) return true;
    if (mode_ == Mode::Tour && !trails_.empty()) return false;
    const StateKey key{used_, done_, 0, kNone, kNone};
    if (failed_.contains(key)) return false;
    tick();
    const std::uint32_t e = static_cast<std::uint32_t>(std::countr_zero(all_ & ~used_));
    const Mask free = edge_mask_[e] & ~done_;
    for (Mask a = free; a; a &= a - 1) {
      const std::uint32_t s = static_cast<std::uint32_t>(std::countr_zero(a));
      for (Mask b = free; b; b &= b - 1) {
        const std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(b));
        if (w == s || !allowed(e, s, w)) continue;
        start_ = s;
        head_ = w;
        cur_ = (Mask{1} << s) | (Mask{1} << w);
        used_ |= Mask{1} << e;
        path_.push_back({s, e});
        if (feasible() && extend()) return true;
        path_.pop_back();
        used_ &= ~(Mask{1} << e);
      }
    }
    cur_ = 0;
    failed_.insert(key);
    return false;
  }

  bool extend() {
    const StateKey key{used_, done_, cur_, head_, start_};
    if (failed_.contains(key)) return false;
    tick();
    if (head_ == start_ && (mode_ == Mode::Family || used_ == all_)) {
      if (close_and_open()) return true;
    }
    const std::uint32_t head = head_;
    const Mask cur = cur_;
    for (std::uint32_t e : incident_[head]) {
      if (used_ >> e & 1) continue;
      for (Mask b = edge_mask_[e] & ~done_; b; b &= b - 1) {
        const std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(b));
        if (w == head || !allowed(e, head, w)) continue;
        used_ |= Mask{1} << e;
        cur_ = cur | (Mask{1} << w);
        head_ = w;
        path_.push_back({head, e});
        if (feasible() && extend()) return true;
        path_.pop_back();
        head_ = head;
        cur_ = cur;
        used_ &= ~(Mask{1} << e);
      }
    }
    failed_.insert(key);
    return false;
  }

  bool close_and_open() {
    ClosedTrail t;
    for (const Step& s : path_) {
      t.anchors.push_back(h_.vertices()[s.anchor]);
      t.edges.push_back(s.edge);
    }
    const Mask done = done_;
    const Mask cur = cur_;
    const std::uint32_t head = head_;
    const std::uint32_t start = start_;
    std::vector<Step> path;
    path.swap(path_);
    done_ |= cur_;
    trails_.push_back(std::move(t));
    if (feasible() && open()) return true;
    trails_.pop_back();
    done_ = done;
    cur_ = cur;
    head_ = head;
    start_ = start;
    path_.swap(path);
    return false;
  }

  const Hypergraph& h_;
  Mode mode_;
  std::uint64_t max_states_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  Mask all_ = 0;
  std::vector<Mask> edge_mask_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::uint32_t pivot_ = kNone;
  Mask via_ = 0;

  Mask used_ = 0;
  Mask done_ = 0;
  Mask cur_ = 0;
  std::uint32_t head_ = kNone;
  std::uint32_t start_ = kNone;
  std::vector<Step> path_;
  std::vector<ClosedTrail> trails_;
  std::unordered_set<StateKey, StateHash> failed_;
  std::uint64_t states_ = 0;
};

std::optional<EulerFamily> search(const Hypergraph& h, Mode mode, const std::optional<Constraint>& constraint,
                                  const OracleOptions& options, SolveStats& stats) {
  Search s(h, mode, constraint, options.max_states - std::min(options.max_states, stats.oracle_states));
  try {
    auto out = s.run();
    stats.oracle_states += s.states();
    return out;
  } catch (...) {
    stats.oracle_states += s.states();
    throw;
  }
}

}  // namespace

SolveOutcome oracle_euler(const Hypergraph& h, Mode mode, const std::optional<Constraint>& constraint,
                          const OracleOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (h.num_vertices() > options.max_vertices || h.num_vertices() > 64) {
    throw Error(Errc::BudgetExceeded, std::to_string(h.num_vertices()) + " vertices exceed the oracle bound");
  }
  if (h.num_edges() > options.max_edges || h.num_edges() > 64) {
    throw Error(Errc::BudgetExceeded, std::to_string(h.num_edges()) + " edges exceed the oracle bound");
  }
  if (constraint) {
    (void)h.vertex_index(constraint->vertex);
    for (EdgeId f : constraint->via) {
      if (!contains(h.edge(f), constraint->vertex)) {
        throw Error(Errc::EdgeMissesVertex,
                    "e" + std::to_string(f) + " does not contain " + std::to_string(constraint->vertex));
      }
    }
  }

  SolveOutcome out;
  out.stats.nodes = 1;
  auto finish = [&](std::optional<EulerFamily> fam) {
    out.decision = fam.has_value();
    out.certificate = std::move(fam);
    out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
  };

  for (const auto& e : h.edges()) {
    if (e.size() < 2) return finish(std::nullopt);
  }
  if (h.is_empty()) return finish(EulerFamily{});
  if (mode == Mode::Tour) return finish(search(h, mode, constraint, options, out.stats));

  // Family mode: components are independent.
  const ComponentDecomposition comps = components(h);
  EulerFamily family;
  for (const auto& block : comps.blocks) {
    if (block.size() < 2) continue;
    const Subhypergraph sub = induced(h, block);
    std::optional<Constraint> local;
    if (constraint && contains(block, constraint->vertex)) {
      local = Constraint{constraint->vertex, {}};
      for (std::size_t i = 0; i < sub.origin.size(); ++i) {
        if (std::find(constraint->via.begin(), constraint->via.end(), sub.origin[i]) != constraint->via.end()) {
          local->via.push_back(static_cast<EdgeId>(i));
        }
      }
    }
    auto part = search(sub.graph, mode, local, options, out.stats);
    if (!part) return finish(std::nullopt);
    for (auto& t : part->trails) {
      for (EdgeId& e : t.edges) e = sub.origin[e];
      family.trails.push_back(std::move(t));
    }
  }
  return finish(std::move(family));
}

EdgeCut oracle_min_cut(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n < 2) throw Error(Errc::TrivialHypergraph, "minimum cut needs |V| >= 2");
  if (n > kOracleMinCutLimit) throw Error(Errc::TooLarge, "oracle minimum cut limited to 15 vertices");
  if (!is_connected(h)) throw Error(Errc::Disconnected, "minimum cut needs a connected hypergraph");

  // Walk every side S containing the smallest vertex, as explicit vertex sets.
  const VertexSet& vs = h.vertices();
  std::optional<std::size_t> best;
  VertexSet best_side;
  VertexSet side{vs[0]};
  auto visit = [&](auto&& self, std::size_t next) -> void {
    if (next == n) {
      if (side.size() == n) return;
      std::size_t value = 0;
      for (const auto& e : h.edges()) {
        const bool in = intersects(e, side);
        const bool out = !is_subset(e, side);
        value += (in && out) ? 1 : 0;
      }
      if (!best || value < *best || (value == *best && side < best_side)) {
        best = value;
        best_side = side;
      }
      return;
    }
    side.push_back(vs[next]);
    self(self, next + 1);
    side.pop_back();
    self(self, next + 1);
  };
  visit(visit, 1);

  EdgeCut cut;
  cut.side = best_side;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edges()[i];
    if (intersects(e, best_side) && !is_subset(e, best_side)) cut.edges.push_back(static_cast<EdgeId>(i));
  }
  return cut;
}

}  // namespace eulerhg
