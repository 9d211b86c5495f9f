#include "eulerhg/hgr_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "eulerhg/error.hpp"

namespace eulerhg {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Lines with comments stripped, numbered from 1.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto c = line.find('%'); c != std::string_view::npos) line = line.substr(0, c);
    auto toks = tokens_of(line);
    if (!toks.empty()) out.emplace_back(number, std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool to_number(std::string_view tok, std::size_t& value) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Hypergraph parse_hgr(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(Errc::SyntaxError, 0, "missing 'p hgr <n> <m>' header");
  const auto& [hline, header] = lines.front();
  std::size_t n = 0;
  std::size_t m = 0;
  if (header.size() != 4 || header[0] != "p" || header[1] != "hgr" || !to_number(header[2], n) ||
      !to_number(header[3], m)) {
    throw ParseError(Errc::SyntaxError, hline, "expected 'p hgr <n> <m>'");
  }
  if (n == 0) throw ParseError(Errc::SyntaxError, hline, "vertex count must be positive");

  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, toks] = lines[i];
    if (toks.front() != "e") throw ParseError(Errc::SyntaxError, number, "expected an 'e' line");
    if (edges.size() == m) {
      throw ParseError(Errc::CountMismatch, number, "more than " + std::to_string(m) + " edge lines");
    }
    std::vector<VertexId> e;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      std::size_t v = 0;
      if (!to_number(toks[t], v)) {
        throw ParseError(Errc::SyntaxError, number, "bad vertex '" + std::string(toks[t]) + "'");
      }
      if (v < 1 || v > n) {
        throw ParseError(Errc::IndexOutOfRange, number, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n));
      }
      const auto id = static_cast<VertexId>(v - 1);
      if (std::find(e.begin(), e.end(), id) != e.end()) {
        throw ParseError(Errc::SyntaxError, number, "vertex " + std::to_string(v) + " repeated in edge");
      }
      e.push_back(id);
    }
    edges.push_back(std::move(e));
  }
  if (edges.size() != m) {
    throw ParseError(Errc::CountMismatch, 0,
                     "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  }
  std::vector<VertexId> vertices(n);
  for (std::size_t v = 0; v < n; ++v) vertices[v] = static_cast<VertexId>(v);
  return Hypergraph::build(std::move(vertices), std::move(edges));
}

Hypergraph read_hgr_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(Errc::SyntaxError, 0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hgr(buf.str());
}

std::string emit_hgr(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hgr " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    out << 'e';
    for (VertexId v : e) out << ' ' << h.vertex_index(v) + 1;
    out << '\n';
  }
  return out.str();
}

std::string emit_family(const EulerFamily& family) {
  std::ostringstream out;
  out << "FAMILY k=" << family.trails.size() << '\n';
  if (family.trails.size() == 1) out << "TOUR\n";
  for (const auto& t : family.trails) {
    out << "T:";
    for (std::size_t i = 0; i < t.length(); ++i) out << ' ' << t.anchors[i] + 1 << " e" << t.edges[i];
    out << ' ' << t.anchors.front() + 1 << '\n';
  }
  return out.str();
}

std::string emit_certificate(const SolveOutcome& outcome) {
  if (!outcome.decision || !outcome.certificate) throw Error(Errc::NoCertificate, "outcome is negative");
  return emit_family(*outcome.certificate);
}

EulerFamily parse_certificate(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(Errc::SyntaxError, 0, "missing 'FAMILY k=<t>' line");
  const auto& [fline, ftoks] = lines.front();
  std::size_t k = 0;
  if (ftoks.size() != 2 || ftoks[0] != "FAMILY" || ftoks[1].substr(0, 2) != "k=" ||
      !to_number(ftoks[1].substr(2), k)) {
    throw ParseError(Errc::SyntaxError, fline, "expected 'FAMILY k=<t>'");
  }
  EulerFamily family;
  std::size_t i = 1;
  if (i < lines.size() && lines[i].second.size() == 1 && lines[i].second[0] == "TOUR") {
    if (k != 1) throw ParseError(Errc::SyntaxError, lines[i].first, "TOUR line with k != 1");
    ++i;
  }
  for (; i < lines.size(); ++i) {
    const auto& [number, toks] = lines[i];
    if (toks.front() != "T:") throw ParseError(Errc::SyntaxError, number, "expected a 'T:' line");
    if (toks.size() < 2 || toks.size() % 2 != 0) {
      throw ParseError(Errc::SyntaxError, number, "trail must alternate vertices and edges");
    }
    Walk w;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      std::size_t value = 0;
      if (t % 2 == 1) {
        if (!to_number(toks[t], value)) {
          throw ParseError(Errc::SyntaxError, number, "bad vertex '" + std::string(toks[t]) + "'");
        }
        if (value == 0) throw ParseError(Errc::IndexOutOfRange, number, "vertices are 1-based");
        w.vertices.push_back(static_cast<VertexId>(value - 1));
      } else {
        if (toks[t].size() < 2 || toks[t][0] != 'e' || !to_number(toks[t].substr(1), value)) {
          throw ParseError(Errc::SyntaxError, number, "bad edge label '" + std::string(toks[t]) + "'");
        }
        w.edges.push_back(static_cast<EdgeId>(value));
      }
    }
    family.trails.push_back(ClosedTrail::from_walk(w));
  }
  if (family.trails.size() != k) {
    throw ParseError(Errc::CountMismatch, 0,
                     "header says k=" + std::to_string(k) + ", found " + std::to_string(family.trails.size()));
  }
  return family;
}

nlohmann::json family_to_json(const EulerFamily& family) {
  nlohmann::json trails = nlohmann::json::array();
  for (const auto& t : family.trails) {
    const Walk w = t.walk();
    nlohmann::json vs = nlohmann::json::array();
    for (VertexId v : w.vertices) vs.push_back(v + 1);
    trails.push_back({{"vertices", vs}, {"edges", w.edges}});
  }
  return {{"k", family.trails.size()}, {"tour", family.trails.size() == 1}, {"trails", trails}};
}

nlohmann::json stats_to_json(const SolveStats& s) {
  return {{"max_depth", s.max_depth},
          {"nodes", s.nodes},
          {"assignments", s.assignments},
          {"pruned", s.pruned},
          {"oracle_fallbacks", s.oracle_fallbacks},
          {"standard_fallbacks", s.standard_fallbacks},
          {"skipped_wide", s.skipped_wide},
          {"oracle_states", s.oracle_states},
          {"elapsed_ms", s.elapsed_ms}};
}

std::string stats_line(const SolveStats& s) {
  std::ostringstream out;
  out << "max_depth=" << s.max_depth << " nodes=" << s.nodes << " assignments=" << s.assignments
      << " pruned=" << s.pruned << " oracle_fallbacks=" << s.oracle_fallbacks
      << " standard_fallbacks=" << s.standard_fallbacks << " skipped_wide=" << s.skipped_wide
      << " oracle_states=" << s.oracle_states << " elapsed_ms=" << s.elapsed_ms;
  return out.str();
}

}  // namespace eulerhg
