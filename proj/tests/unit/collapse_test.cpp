#include <gtest/gtest.h>

#include <bit>

#include "corpora.hpp"
#include "eulerhg/collapse.hpp"
#include "eulerhg/error.hpp"
#include "eulerhg/oracle.hpp"
#include "fixtures.hpp"

namespace eulerhg {
namespace {

using namespace fixtures;
using Ids = std::vector<EdgeId>;

ClosedTrail trail(std::vector<VertexId> vs, std::vector<EdgeId> es) {
  vs.push_back(vs.front());
  return ClosedTrail::from_walk({vs, es});
}

std::vector<VertexSet> edge_list(const Hypergraph& h) { return {h.edges().begin(), h.edges().end()}; }

TEST(Collapse, H3) {
  const Collapsed c = collapse(h3(), {4});
  EXPECT_EQ(c.collapsed_vertex, 5u);
  EXPECT_EQ(c.graph.vertices(), (VertexSet{1, 2, 3, 5}));
  EXPECT_EQ(edge_list(c.graph), (std::vector<VertexSet>{{1, 2, 3}, {1, 2, 5}, {3, 5}}));
  EXPECT_EQ(c.origin, (Ids{0, 1, 2}));
}

TEST(Collapse, BridgeDropsInsideEdges) {
  const Collapsed c = collapse(bridge(), {4, 5, 6});
  EXPECT_EQ(c.graph.vertices(), (VertexSet{1, 2, 3, 7}));
  EXPECT_EQ(edge_list(c.graph), (std::vector<VertexSet>{{1, 2}, {2, 3}, {1, 3}, {3, 7}}));
  EXPECT_EQ(c.origin, (Ids{0, 1, 2, 3}));
  EXPECT_EQ(c.forward[3], EdgeId{3});
  EXPECT_EQ(c.forward[4], std::nullopt);
  EXPECT_EQ(c.forward[6], std::nullopt);
}

TEST(Collapse, TriangleDropsEdgeInsideS) {
  // e1 = {2,3} has no vertex outside S, so it is dropped rather than shrunk
  // to {u}.
  const Collapsed c = collapse(tri(), {2, 3});
  EXPECT_EQ(c.graph.vertices(), (VertexSet{1, 4}));
  EXPECT_EQ(edge_list(c.graph), (std::vector<VertexSet>{{1, 4}, {1, 4}}));
  EXPECT_EQ(c.origin, (Ids{0, 2}));
  EXPECT_EQ(c.forward[1], std::nullopt);
}

TEST(Collapse, Errors) {
  EXPECT_THROW(collapse(tri(), {}), Error);
  EXPECT_THROW(collapse(tri(), {1, 2, 3}), Error);
  EXPECT_THROW(collapse(tri(), {8}), Error);
}

TEST(CollapseProperty, VertexCount) {
  for (const auto& h : corpora::random_instances(100, 7, 7, 2, 5, 41)) {
    const auto& v = h.vertices();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << v.size()); ++mask) {
      VertexSet s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1) s.push_back(v[i]);
      }
      const auto c = collapse(h, s);
      EXPECT_EQ(c.graph.num_vertices(), h.num_vertices() - s.size() + 1);
      for (std::size_t i = 0; i < c.origin.size(); ++i) EXPECT_EQ(c.forward[c.origin[i]], EdgeId(i));
    }
  }
}

TEST(Gadget, CollapsedH3) {
  const Collapsed c = collapse(h3(), {4});
  const Gadget g = fixed_vertex_gadget(c.graph, c.collapsed_vertex, Ids{1, 2});
  EXPECT_EQ(g.base_edges, 3u);
  ASSERT_EQ(g.arms.size(), 2u);
  EXPECT_EQ(g.arms[0].subdivision, 6u);
  EXPECT_EQ(g.arms[1].subdivision, 7u);
  EXPECT_EQ(edge_list(g.graph), (std::vector<VertexSet>{{1, 2, 3}, {1, 2, 6}, {3, 7}, {5, 6}, {5, 7}}));
}

TEST(Gadget, Identity) {
  const Gadget g = fixed_vertex_gadget(tri(), 1, Ids{});
  EXPECT_EQ(g.graph, tri());
  EXPECT_TRUE(g.arms.empty());
  const EulerFamily fam{{trail({1, 2, 3}, {0, 1, 2})}};
  EXPECT_EQ(ungadget_family(g, fam), fam);
}

TEST(Gadget, Triangle) {
  const Gadget g = fixed_vertex_gadget(tri(), 1, Ids{0});
  EXPECT_EQ(edge_list(g.graph), (std::vector<VertexSet>{{2, 4}, {2, 3}, {1, 3}, {1, 4}}));
  try {
    fixed_vertex_gadget(tri(), 1, Ids{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EdgeMissesVertex);
  }
}

TEST(Ungadget, CollapsedH3Tour) {
  const Collapsed c = collapse(h3(), {4});
  const Gadget g = fixed_vertex_gadget(c.graph, c.collapsed_vertex, Ids{1, 2});
  const EulerFamily tour{{trail({1, 3, 7, 5, 6}, {0, 2, 4, 3, 1})}};
  ASSERT_TRUE(verify_euler_family(g.graph, tour));
  const EulerFamily back = ungadget_family(g, tour);
  EXPECT_EQ(back, (EulerFamily{{trail({1, 3, 5}, {0, 2, 1})}}));
  EXPECT_TRUE(verify_euler_family(c.graph, back));
  EXPECT_EQ(gadget_family(g, back), tour);
}

TEST(Gadget, RejectsUnmetTraversal) {
  // 2 e0 3 e1 2 is an Euler tour that never uses 1 as an anchor.
  const Hypergraph h = Hypergraph::build({1, 2, 3}, {{1, 2, 3}, {2, 3}});
  const Gadget g = fixed_vertex_gadget(h, 1, Ids{0});
  const EulerFamily around{{trail({2, 3}, {0, 1})}};
  ASSERT_TRUE(verify_euler_family(h, around));
  ASSERT_FALSE(traverses_via(around, 1, 0));
  try {
    gadget_family(g, around);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TraversalConditionUnmet);
  }
}

TEST(Link, H3) {
  const Hypergraph h = h3();
  const Ids f{1, 2};
  const auto blocks = standard_blocks(h, f);
  const auto alpha = Assignment::make(h, blocks, {{1, BlockPair::of(0, 1)}, {2, BlockPair::of(0, 1)}});
  const Collapsed c0 = collapse(h, blocks.block(1));
  const Collapsed c1 = collapse(h, blocks.block(0));
  const EulerFamily f0{{trail({1, 3, 5}, {0, 2, 1})}};
  const EulerFamily f1{{trail({4, 5}, {0, 1})}};
  ASSERT_TRUE(verify_euler_family(c0.graph, f0));
  ASSERT_TRUE(verify_euler_family(c1.graph, f1));
  const EulerFamily linked = link_families(h, alpha, {c0, f0}, {c1, f1});
  ASSERT_EQ(linked.trails.size(), 1u);
  EXPECT_TRUE(verify_euler_family(h, linked));
  const ClosedTrail expected = trail({1, 3, 4}, {0, 2, 1});
  const ClosedTrail got = linked.trails[0].rotated_to(1);
  EXPECT_TRUE(got == expected || got == expected.reversed().rotated_to(1));
}

// V0 = {1,2}, V1 = {3,4}; e0 and e1 cross.
Hypergraph two_crossings() { return Hypergraph::build({1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 3}, {3, 4}, {3, 4}}); }

TEST(Link, RejectsMissingTraversal) {
  const Hypergraph h = two_crossings();
  const BlockPartition blocks({{1, 2}, {3, 4}}, false);
  const auto alpha = Assignment::make(h, blocks, {{0, BlockPair::of(0, 1)}, {1, BlockPair::of(0, 1)}});
  const Collapsed c0 = collapse(h, blocks.block(1));
  const Collapsed c1 = collapse(h, blocks.block(0));
  const EulerFamily f1{{trail({3, 5, 3, 4}, {0, 1, 2, 3})}};
  ASSERT_TRUE(verify_euler_family(c1.graph, f1));

  const EulerFamily good{{trail({1, 5}, {0, 1})}};
  const auto linked = link_families(h, alpha, {c0, good}, {c1, f1});
  EXPECT_TRUE(verify_euler_family(h, linked));

  const EulerFamily avoiding{{trail({1, 2}, {0, 1})}};
  ASSERT_TRUE(verify_euler_family(c0.graph, avoiding));
  try {
    link_families(h, alpha, {c0, avoiding}, {c1, f1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TraversalConditionUnmet);
  }
}

std::vector<Ids> subsets(const Ids& pool, std::size_t max_size) {
  std::vector<Ids> out;
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_size) continue;
    Ids s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask >> i & 1) s.push_back(pool[i]);
    }
    out.push_back(s);
  }
  return out;
}

TEST(GadgetProperty, EquivalenceAndRoundTrip) {
  GenSpec spec;
  spec.model = GenModel::ExhaustiveSmall;
  spec.max_vertices = 5;
  spec.max_edges = 4;
  spec.max_edge_size = 5;
  for (const auto& h : generate(spec)) {
    for (VertexId u : h.vertices()) {
      Ids incident;
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (contains(h.edge(e), u)) incident.push_back(e);
      }
      for (const auto& f : subsets(incident, 4)) {
        const Gadget g = fixed_vertex_gadget(h, u, f);
        for (Mode mode : {Mode::Family, Mode::Tour}) {
          const auto constrained = oracle_euler(h, mode, Constraint{u, f});
          const auto plain = oracle_euler(g.graph, mode);
          ASSERT_EQ(constrained.decision, plain.decision);
          if (!plain.decision) continue;
          const EulerFamily back = ungadget_family(g, *plain.certificate);
          ASSERT_TRUE(verify_euler_family(h, back));
          EXPECT_EQ(back.trails.size(), plain.certificate->trails.size());
          for (EdgeId e : f) EXPECT_TRUE(traverses_via(back, u, e));
          const EulerFamily forward = gadget_family(g, *constrained.certificate);
          ASSERT_TRUE(verify_euler_family(g.graph, forward));
          EXPECT_EQ(ungadget_family(g, forward), *constrained.certificate);
        }
      }
    }
  }
}

}  // namespace
}  // namespace eulerhg
