#include "eulerhg/trails.hpp"

#include <algorithm>
#include <map>

#include "eulerhg/error.hpp"

namespace eulerhg {

namespace {

std::string edge_name(EdgeId e) { return "e" + std::to_string(e); }

}  // namespace

ClosedTrail ClosedTrail::from_walk(const Walk& walk) {
  if (walk.vertices.size() != walk.edges.size() + 1) {
    throw Error(Errc::CertificateInvalid, "walk needs exactly one more vertex than edges");
  }
  if (walk.edges.size() < 2 || walk.vertices.front() != walk.vertices.back()) {
    throw Error(Errc::CertificateInvalid, "walk is not closed or has length < 2");
  }
  ClosedTrail t;
  t.anchors.assign(walk.vertices.begin(), walk.vertices.end() - 1);
  t.edges = walk.edges;
  return t;
}

Walk ClosedTrail::walk() const {
  Walk w{anchors, edges};
  if (!anchors.empty()) w.vertices.push_back(anchors.front());
  return w;
}

VertexSet ClosedTrail::anchor_set() const { return make_vertex_set(anchors); }

bool ClosedTrail::has_anchor(VertexId v) const noexcept {
  return std::find(anchors.begin(), anchors.end(), v) != anchors.end();
}

ClosedTrail ClosedTrail::rotated_to(VertexId v) const {
  auto it = std::find(anchors.begin(), anchors.end(), v);
  if (it == anchors.end()) throw Error(Errc::NotAnAnchor, "vertex " + std::to_string(v));
  const auto shift = it - anchors.begin();
  ClosedTrail out = *this;
  std::rotate(out.anchors.begin(), out.anchors.begin() + shift, out.anchors.end());
  std::rotate(out.edges.begin(), out.edges.begin() + shift, out.edges.end());
  return out;
}

ClosedTrail ClosedTrail::reversed() const {
  // v0 e1 v1 ... e_k v0 read backwards is v0 e_k v_{k-1} ... e1 v0.
  ClosedTrail out;
  const std::size_t k = anchors.size();
  out.anchors.reserve(k);
  out.edges.reserve(k);
  if (k == 0) return out;
  out.anchors.push_back(anchors[0]);
  for (std::size_t i = k - 1; i >= 1; --i) out.anchors.push_back(anchors[i]);
  for (std::size_t i = k; i-- > 0;) out.edges.push_back(edges[i]);
  return out;
}

std::size_t EulerFamily::num_edges() const noexcept {
  std::size_t n = 0;
  for (const auto& t : trails) n += t.length();
  return n;
}

VertexSet EulerFamily::anchors() const {
  std::vector<VertexId> all;
  for (const auto& t : trails) all.insert(all.end(), t.anchors.begin(), t.anchors.end());
  return make_vertex_set(std::move(all));
}

namespace {

CheckResult check_step(const Hypergraph& h, VertexId from, EdgeId e, VertexId to, std::size_t pos) {
  const std::string at = " at position " + std::to_string(pos);
  if (e >= h.num_edges()) return CheckResult::fail("unknown edge " + edge_name(e) + at);
  if (!h.has_vertex(from)) return CheckResult::fail("unknown vertex " + std::to_string(from) + at);
  if (!h.has_vertex(to)) return CheckResult::fail("unknown vertex " + std::to_string(to) + at);
  const VertexSet& edge = h.edges()[e];
  if (edge.size() < 2) return CheckResult::fail("edge " + edge_name(e) + " has cardinality < 2" + at);
  if (!contains(edge, from)) {
    return CheckResult::fail("vertex " + std::to_string(from) + " not in " + edge_name(e) + at);
  }
  if (!contains(edge, to)) {
    return CheckResult::fail("vertex " + std::to_string(to) + " not in " + edge_name(e) + at);
  }
  if (from == to) return CheckResult::fail("consecutive vertices equal" + at);
  return CheckResult::pass();
}

}  // namespace

CheckResult validate_walk(const Hypergraph& h, const Walk& walk) {
  if (walk.vertices.size() != walk.edges.size() + 1) {
    return CheckResult::fail("walk needs exactly one more vertex than edges");
  }
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    auto r = check_step(h, walk.vertices[i], walk.edges[i], walk.vertices[i + 1], i + 1);
    if (!r) return r;
  }
  return CheckResult::pass();
}

CheckResult validate_closed_trail(const Hypergraph& h, const ClosedTrail& trail) {
  if (trail.anchors.size() != trail.edges.size()) {
    return CheckResult::fail("closed trail needs as many anchors as edges");
  }
  if (trail.length() < 2) return CheckResult::fail("closed trail has length < 2");
  if (auto r = validate_walk(h, trail.walk()); !r) return r;
  std::vector<EdgeId> sorted = trail.edges;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) return CheckResult::fail("edge " + edge_name(*dup) + " reused");
  return CheckResult::pass();
}

CheckResult verify_euler_family(const Hypergraph& h, const EulerFamily& family, bool spanning) {
  std::vector<bool> used(h.num_edges(), false);
  std::map<VertexId, std::size_t> owner;
  for (std::size_t t = 0; t < family.trails.size(); ++t) {
    const ClosedTrail& trail = family.trails[t];
    if (auto r = validate_closed_trail(h, trail); !r) {
      return CheckResult::fail("trail " + std::to_string(t) + ": " + r.message);
    }
    for (EdgeId e : trail.edges) {
      if (used[e]) return CheckResult::fail("edge " + edge_name(e) + " reused");
      used[e] = true;
    }
    for (VertexId v : trail.anchor_set()) {
      auto [it, fresh] = owner.emplace(v, t);
      if (!fresh) {
        return CheckResult::fail("trails " + std::to_string(it->second) + " and " +
                                 std::to_string(t) + " share anchor " + std::to_string(v));
      }
    }
  }
  for (std::size_t e = 0; e < used.size(); ++e) {
    if (!used[e]) return CheckResult::fail("edge " + edge_name(static_cast<EdgeId>(e)) + " not traversed");
  }
  if (spanning) {
    for (VertexId v : h.vertices()) {
      if (!owner.contains(v)) return CheckResult::fail("vertex " + std::to_string(v) + " is not an anchor");
    }
  }
  return CheckResult::pass();
}

bool is_spanning(const Hypergraph& h, const EulerFamily& family) {
  return is_subset(h.vertices(), family.anchors());
}

ClosedTrail concatenate_at_anchor(const ClosedTrail& first, const ClosedTrail& second, VertexId v) {
  if (!first.has_anchor(v) || !second.has_anchor(v)) {
    throw Error(Errc::NotAnAnchor, "vertex " + std::to_string(v) + " is not an anchor of both trails");
  }
  std::vector<EdgeId> a = first.edges;
  std::vector<EdgeId> b = second.edges;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<EdgeId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw Error(Errc::EdgesOverlap, "both trails traverse " + edge_name(common.front()));

  ClosedTrail out = first.rotated_to(v);
  ClosedTrail tail = second.rotated_to(v);
  out.anchors.insert(out.anchors.end(), tail.anchors.begin(), tail.anchors.end());
  out.edges.insert(out.edges.end(), tail.edges.begin(), tail.edges.end());
  return out;
}

EulerFamily merge_shared_anchors(EulerFamily family) {
  auto& trails = family.trails;
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < trails.size() && !merged; ++i) {
      const VertexSet ai = trails[i].anchor_set();
      for (std::size_t j = i + 1; j < trails.size() && !merged; ++j) {
        const VertexSet shared = set_intersection(ai, trails[j].anchor_set());
        if (shared.empty()) continue;
        trails[i] = concatenate_at_anchor(trails[i], trails[j], shared.front());
        trails.erase(trails.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
  }
  return family;
}

}  // namespace eulerhg
