#include "eulerhg/collapse.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "eulerhg/error.hpp"

namespace eulerhg {

Collapsed collapse(const Hypergraph& h, const VertexSet& side) {
  if (side.empty() || side.size() >= h.num_vertices() || !is_subset(side, h.vertices())) {
    throw Error(Errc::BadVertexSubset, "collapsed set must be a non-empty proper subset of V");
  }
  const VertexId u = h.max_vertex() + 1;
  VertexSet vertices = set_difference(h.vertices(), side);
  vertices.push_back(u);

  std::vector<std::vector<VertexId>> edges;
  std::vector<std::optional<EdgeId>> forward(h.num_edges());
  std::vector<EdgeId> origin;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const VertexSet& e = h.edges()[i];
    VertexSet outside = set_difference(e, side);
    if (outside.empty()) continue;
    if (outside.size() != e.size()) outside.push_back(u);
    forward[i] = static_cast<EdgeId>(edges.size());
    origin.push_back(static_cast<EdgeId>(i));
    edges.push_back(std::move(outside));
  }
  return {Hypergraph::build(std::move(vertices), std::move(edges)), u, std::move(forward), std::move(origin)};
}

Gadget fixed_vertex_gadget(const Hypergraph& h, VertexId pivot, std::span<const EdgeId> via) {
  (void)h.vertex_index(pivot);
  std::vector<EdgeId> fs(via.begin(), via.end());
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());

  std::vector<VertexId> vertices = h.vertices();
  std::vector<std::vector<VertexId>> edges(h.edges().begin(), h.edges().end());
  Gadget g{Hypergraph::build({pivot}, {}), pivot, {}, h.num_edges()};
  VertexId fresh = h.max_vertex();
  for (EdgeId f : fs) {
    if (!contains(h.edge(f), pivot)) {
      throw Error(Errc::EdgeMissesVertex, "e" + std::to_string(f) + " does not contain " + std::to_string(pivot));
    }
    const VertexId uf = ++fresh;
    vertices.push_back(uf);
    VertexSet split = set_difference(h.edges()[f], VertexSet{pivot});
    split.push_back(uf);
    edges[f] = std::move(split);
    g.arms.push_back({f, uf, static_cast<EdgeId>(edges.size())});
    edges.push_back({uf, pivot});
  }
  g.graph = Hypergraph::build(std::move(vertices), std::move(edges));
  return g;
}

bool traverses_via(const EulerFamily& family, VertexId v, EdgeId edge) {
  for (const auto& t : family.trails) {
    for (std::size_t i = 0; i < t.length(); ++i) {
      if (t.edges[i] != edge) continue;
      if (t.anchors[i] == v || t.anchors[(i + 1) % t.length()] == v) return true;
    }
  }
  return false;
}

namespace {

/// Interleaved cyclic token view of a closed trail: anchor, edge, anchor, ...
struct Token {
  bool is_edge;
  std::uint32_t id;
};

std::vector<Token> tokens_of(const ClosedTrail& t) {
  std::vector<Token> out;
  out.reserve(2 * t.length());
  for (std::size_t i = 0; i < t.length(); ++i) {
    out.push_back({false, t.anchors[i]});
    out.push_back({true, t.edges[i]});
  }
  return out;
}

ClosedTrail trail_of(std::vector<Token> tokens) {
  auto first_anchor = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) { return !t.is_edge; });
  std::rotate(tokens.begin(), first_anchor, tokens.end());
  ClosedTrail out;
  for (const Token& t : tokens) (t.is_edge ? out.edges : out.anchors).push_back(t.id);
  return out;
}

}  // namespace

EulerFamily ungadget_family(const Gadget& gadget, const EulerFamily& family) {
  std::map<EdgeId, const Gadget::Arm*> by_spoke;
  for (const auto& arm : gadget.arms) by_spoke.emplace(arm.spoke, &arm);

  EulerFamily out;
  for (const auto& trail : family.trails) {
    const std::vector<Token> tokens = tokens_of(trail);
    const std::size_t n = tokens.size();
    std::vector<char> drop(n, 0);
    for (std::size_t i = 1; i < n; i += 2) {
      auto it = by_spoke.find(tokens[i].id);
      if (it == by_spoke.end()) continue;
      const Gadget::Arm& arm = *it->second;
      const Token& before = tokens[i - 1];
      const Token& after = tokens[(i + 1) % n];
      if (before.id == arm.subdivision && after.id == gadget.pivot) {
        // f' u_f e_f u  ->  f u
        if (tokens[(i + n - 2) % n].id != arm.edge) {
          throw Error(Errc::MalformedGadgetTraversal, "spoke e" + std::to_string(arm.spoke) + " not preceded by f'");
        }
        drop[i - 1] = drop[i] = 1;
      } else if (before.id == gadget.pivot && after.id == arm.subdivision) {
        // u e_f u_f f'  ->  u f
        if (tokens[(i + 2) % n].id != arm.edge) {
          throw Error(Errc::MalformedGadgetTraversal, "spoke e" + std::to_string(arm.spoke) + " not followed by f'");
        }
        drop[i] = drop[(i + 1) % n] = 1;
      } else {
        throw Error(Errc::MalformedGadgetTraversal, "spoke e" + std::to_string(arm.spoke) + " traversed oddly");
      }
    }
    std::vector<Token> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (!drop[i]) kept.push_back(tokens[i]);
    }
    out.trails.push_back(trail_of(std::move(kept)));
  }
  return out;
}

EulerFamily gadget_family(const Gadget& gadget, const EulerFamily& family) {
  std::map<EdgeId, const Gadget::Arm*> by_edge;
  for (const auto& arm : gadget.arms) by_edge.emplace(arm.edge, &arm);

  EulerFamily out;
  for (const auto& trail : family.trails) {
    const std::vector<Token> tokens = tokens_of(trail);
    const std::size_t n = tokens.size();
    std::vector<Token> next;
    for (std::size_t i = 0; i < n; ++i) {
      const Token& tok = tokens[i];
      auto it = tok.is_edge ? by_edge.find(tok.id) : by_edge.end();
      if (it == by_edge.end()) {
        next.push_back(tok);
        continue;
      }
      const Gadget::Arm& arm = *it->second;
      if (tokens[(i + 1) % n].id == gadget.pivot) {
        // f u  ->  f' u_f e_f u
        next.push_back({true, arm.edge});
        next.push_back({false, arm.subdivision});
        next.push_back({true, arm.spoke});
      } else if (tokens[i - 1].id == gadget.pivot) {
        // u f  ->  u e_f u_f f'
        next.push_back({true, arm.spoke});
        next.push_back({false, arm.subdivision});
        next.push_back({true, arm.edge});
      } else {
        throw Error(Errc::TraversalConditionUnmet,
                    "e" + std::to_string(arm.edge) + " not traversed via " + std::to_string(gadget.pivot));
      }
    }
    out.trails.push_back(trail_of(std::move(next)));
  }
  return out;
}

namespace {

/// A maximal piece of the collapsed-vertex trail strictly between two visits
/// of the collapsed vertex. Ids are in the parent hypergraph.
struct Segment {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // internal, vertices.size() - 1 of them
  EdgeId entry;               // port at vertices.front()
  EdgeId exit;                // port at vertices.back()
};

struct SideSegments {
  std::vector<Segment> segments;
  EulerFamily rest;  // the other trails, in parent ids
};

SideSegments split_side(const CollapsedSide& side, const std::vector<EdgeId>& crossing) {
  const VertexId u = side.collapsed.collapsed_vertex;
  const auto& origin = side.collapsed.origin;
  SideSegments out;
  std::optional<ClosedTrail> through;
  for (const auto& t : side.family.trails) {
    if (t.has_anchor(u)) {
      if (through) throw Error(Errc::CertificateInvalid, "two trails share the collapsed vertex");
      through = t.rotated_to(u);
    } else {
      out.rest.trails.push_back(lift_trail(t, origin));
    }
  }
  if (!through) throw Error(Errc::TraversalConditionUnmet, "no trail visits the collapsed vertex");

  const ClosedTrail& t = *through;
  const std::size_t k = t.length();
  std::vector<std::size_t> visits;
  for (std::size_t i = 0; i < k; ++i) {
    if (t.anchors[i] == u) visits.push_back(i);
  }
  std::vector<EdgeId> ports;
  for (std::size_t j = 0; j < visits.size(); ++j) {
    const std::size_t begin = visits[j];
    const std::size_t end = (j + 1 < visits.size()) ? visits[j + 1] : k;
    if (t.edges[begin] >= origin.size() || t.edges[end - 1] >= origin.size()) {
      throw Error(Errc::CertificateInvalid, "trail uses an edge outside the collapsed hypergraph");
    }
    Segment seg;
    seg.entry = origin[t.edges[begin]];
    seg.exit = origin[t.edges[end - 1]];
    for (std::size_t i = begin + 1; i < end; ++i) {
      seg.vertices.push_back(t.anchors[i]);
      if (i + 1 < end) seg.edges.push_back(origin.at(t.edges[i]));
    }
    if (seg.vertices.empty()) throw Error(Errc::CertificateInvalid, "collapsed vertex repeated consecutively");
    ports.push_back(seg.entry);
    ports.push_back(seg.exit);
    out.segments.push_back(std::move(seg));
  }
  std::sort(ports.begin(), ports.end());
  if (ports != crossing) {
    throw Error(Errc::TraversalConditionUnmet, "collapsed vertex not traversed via exactly the crossing edges");
  }
  return out;
}

struct PortEnd {
  std::size_t segment;
  bool at_front;
};

}  // namespace

EulerFamily link_families(const Hypergraph& h_alpha, const Assignment& alpha,
                          const CollapsedSide& side0, const CollapsedSide& side1) {
  std::vector<EdgeId> crossing = alpha.crossing_edges();
  if (crossing.empty() || crossing.size() % 2 != 0) {
    throw Error(Errc::TraversalConditionUnmet, "linking needs a positive even number of crossing edges");
  }
  const SideSegments sides[2] = {split_side(side0, crossing), split_side(side1, crossing)};

  std::map<EdgeId, PortEnd> port[2];
  for (int s = 0; s < 2; ++s) {
    for (std::size_t j = 0; j < sides[s].segments.size(); ++j) {
      port[s][sides[s].segments[j].entry] = {j, true};
      port[s][sides[s].segments[j].exit] = {j, false};
    }
  }

  EulerFamily linked;
  std::vector<char> done(sides[0].segments.size(), 0);
  for (std::size_t start = 0; start < sides[0].segments.size(); ++start) {
    if (done[start]) continue;
    ClosedTrail trail;
    int s = 0;
    PortEnd at{start, true};
    while (true) {
      if (s == 0) done[at.segment] = 1;
      const Segment& seg = sides[s].segments[at.segment];
      if (at.at_front) {
        for (std::size_t i = 0; i < seg.vertices.size(); ++i) {
          trail.anchors.push_back(seg.vertices[i]);
          if (i < seg.edges.size()) trail.edges.push_back(seg.edges[i]);
        }
      } else {
        for (std::size_t i = seg.vertices.size(); i-- > 0;) {
          trail.anchors.push_back(seg.vertices[i]);
          if (i > 0) trail.edges.push_back(seg.edges[i - 1]);
        }
      }
      const EdgeId leave = at.at_front ? seg.exit : seg.entry;
      trail.edges.push_back(leave);
      s = 1 - s;
      at = port[s].at(leave);
      if (s == 0 && at.segment == start) break;
    }
    linked.trails.push_back(std::move(trail));
  }
  linked = merge_shared_anchors(std::move(linked));

  EulerFamily out = sides[0].rest;
  out.trails.insert(out.trails.end(), sides[1].rest.trails.begin(), sides[1].rest.trails.end());
  out.trails.insert(out.trails.end(), linked.trails.begin(), linked.trails.end());
  if (auto r = verify_euler_family(h_alpha, out); !r) throw Error(Errc::CertificateInvalid, r.message);
  return out;
}

}  // namespace eulerhg
