#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "eulerhg/error.hpp"
#include "eulerhg/oracle.hpp"
#include "eulerhg/trails.hpp"
#include "fixtures.hpp"

namespace eulerhg {
namespace {

using namespace fixtures;

ClosedTrail trail(std::vector<VertexId> vs, std::vector<EdgeId> es) {
  vs.push_back(vs.front());
  return ClosedTrail::from_walk({vs, es});
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

TEST(ValidateWalk, Examples) {
  EXPECT_TRUE(validate_walk(tri(), {{1, 2, 3, 1}, {0, 1, 2}}));

  const auto same = validate_walk(tri(), {{1, 1}, {0}});
  EXPECT_FALSE(same);
  EXPECT_TRUE(has(same.message, "consecutive vertices equal at position 1")) << same.message;

  const auto outside = validate_walk(tri(), {{1, 2}, {1}});
  EXPECT_FALSE(outside);
  EXPECT_TRUE(has(outside.message, "vertex 1 not in e1")) << outside.message;
}

TEST(ValidateWalk, SmallEdgeAndShape) {
  const Hypergraph h = Hypergraph::build({1, 2}, {{1, 2}, {1}});
  EXPECT_FALSE(validate_walk(h, {{1, 1}, {1}}));
  EXPECT_FALSE(validate_walk(tri(), {{1, 2}, {0, 1}}));
  EXPECT_FALSE(validate_walk(tri(), {{1, 2}, {5}}));
}

TEST(ClosedTrailShape, FromWalk) {
  EXPECT_THROW(ClosedTrail::from_walk({{1, 2}, {0}}), Error);
  EXPECT_THROW(ClosedTrail::from_walk({{1, 2, 1}, {0}}), Error);
  const auto t = trail({1, 2, 3}, {0, 1, 2});
  EXPECT_EQ(t.walk(), (Walk{{1, 2, 3, 1}, {0, 1, 2}}));
  EXPECT_EQ(t.anchor_set(), (VertexSet{1, 2, 3}));
  EXPECT_EQ(t.rotated_to(3).walk(), (Walk{{3, 1, 2, 3}, {2, 0, 1}}));
  EXPECT_EQ(t.reversed().walk(), (Walk{{1, 3, 2, 1}, {2, 1, 0}}));
}

TEST(Verify, Examples) {
  const EulerFamily two{{trail({1, 2, 3}, {0, 1, 2}), trail({4, 5, 6}, {3, 4, 5})}};
  EXPECT_TRUE(verify_euler_family(two_tri(), two));

  const EulerFamily twice{{trail({1, 2, 3}, {0, 1, 2}), trail({1, 2, 3}, {0, 1, 2})}};
  const auto dup = verify_euler_family(tri(), twice);
  EXPECT_FALSE(dup);
  EXPECT_TRUE(has(dup.message, "edge e0 reused")) << dup.message;

  const EulerFamily tour{{trail({1, 3, 4}, {0, 2, 1})}};
  EXPECT_TRUE(verify_euler_family(h3(), tour));
  EXPECT_TRUE(tour.is_tour());
}

TEST(Verify, MissingEdgeAndSharedAnchor) {
  EXPECT_FALSE(verify_euler_family(bowtie(), EulerFamily{{trail({1, 2, 3}, {0, 1, 2})}}));
  const EulerFamily shared{{trail({1, 2, 3}, {0, 1, 2}), trail({3, 4, 5}, {3, 4, 5})}};
  const auto r = verify_euler_family(bowtie(), shared);
  EXPECT_FALSE(r);
  EXPECT_TRUE(has(r.message, "anchor")) << r.message;
}

TEST(Verify, Spanning) {
  // e0 = {1,2,3} is traversed between 1 and 3, so 2 is never an anchor.
  const EulerFamily tour{{trail({1, 3, 4}, {0, 2, 1})}};
  EXPECT_FALSE(verify_euler_family(h3(), tour, true));
  EXPECT_FALSE(is_spanning(h3(), tour));
  const EulerFamily t{{trail({1, 2, 3}, {0, 1, 2})}};
  EXPECT_TRUE(verify_euler_family(tri(), t, true));
}

TEST(Concatenate, Examples) {
  const auto left = trail({1, 2, 3}, {0, 1, 2}).rotated_to(3);
  const auto right = trail({3, 4, 5}, {3, 4, 5});
  const auto joined = concatenate_at_anchor(left, right, 3);
  EXPECT_EQ(joined.length(), 6u);
  EXPECT_TRUE(verify_euler_family(bowtie(), EulerFamily{{joined}}));

  try {
    concatenate_at_anchor(left, left, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EdgesOverlap);
  }
  try {
    concatenate_at_anchor(trail({1, 2, 3}, {0, 1, 2}), trail({4, 5, 6}, {3, 4, 5}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAnAnchor);
  }
}

TEST(Concatenate, PropertyOnBowtieRotations) {
  const auto left = trail({1, 2, 3}, {0, 1, 2});
  const auto right = trail({3, 4, 5}, {3, 4, 5});
  for (VertexId a : {1u, 2u, 3u}) {
    for (VertexId b : {3u, 4u, 5u}) {
      const auto j = concatenate_at_anchor(left.rotated_to(a), right.rotated_to(b), 3);
      EXPECT_TRUE(validate_closed_trail(bowtie(), j));
      EXPECT_EQ(j.length(), left.length() + right.length());
      EXPECT_EQ(j.anchor_set(), set_union(left.anchor_set(), right.anchor_set()));
    }
  }
}

TEST(Merge, JoinsSharedAnchors) {
  const EulerFamily fam{{trail({1, 2, 3}, {0, 1, 2}), trail({3, 4, 5}, {3, 4, 5})}};
  const auto merged = merge_shared_anchors(fam);
  ASSERT_EQ(merged.trails.size(), 1u);
  EXPECT_TRUE(verify_euler_family(bowtie(), merged));
  const EulerFamily apart{{trail({1, 2, 3}, {0, 1, 2}), trail({4, 5, 6}, {3, 4, 5})}};
  EXPECT_EQ(merge_shared_anchors(apart).trails.size(), 2u);
}

// Random connected multigraph with even degrees: a union of random closed
// walks glued at vertex 0.
Hypergraph even_multigraph(std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> nv(2, 8);
  const VertexId n = nv(rng);
  std::vector<std::vector<VertexId>> edges;
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<bool> touched(n, false);
  touched[0] = true;
  while (edges.size() < 3 || std::find(touched.begin(), touched.end(), false) != touched.end()) {
    VertexId cur = 0;
    const std::size_t len = 2 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) {
      VertexId next = pick(rng);
      while (next == cur) next = pick(rng);
      if (i + 1 == len && cur != 0) next = 0;
      if (next == cur) break;
      edges.push_back({cur, next});
      touched[next] = true;
      cur = next;
    }
    if (cur != 0) edges.push_back({cur, 0});
    if (edges.size() > 16) break;
  }
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < n; ++v) {
    if (touched[v]) vs.push_back(v);
  }
  return Hypergraph::build(vs, edges);
}

TEST(EvenGraphs, HaveEulerTours) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Hypergraph g = even_multigraph(rng);
    ASSERT_TRUE(is_connected(g));
    for (VertexId v : g.vertices()) ASSERT_EQ(g.degree(v) % 2, 0u);
    EXPECT_TRUE(oracle_euler(g, Mode::Tour).decision) << i;
  }
}

}  // namespace
}  // namespace eulerhg
