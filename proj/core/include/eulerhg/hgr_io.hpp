#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eulerhg/hypergraph.hpp"
#include "eulerhg/outcome.hpp"
#include "eulerhg/trails.hpp"

namespace eulerhg {

/// `.hgr` text:
///
///   % comment
///   p hgr <n> <m>
///   e <v1> <v2> ...      (exactly m lines, 1-based vertices, may be empty)
///
/// `%` comments run to end of line; blank lines and surrounding whitespace
/// are ignored. Vertex i of the file becomes VertexId i-1.
/// Throws ParseError with Errc::SyntaxError, Errc::IndexOutOfRange or
/// Errc::CountMismatch.
Hypergraph parse_hgr(std::string_view text);

/// Reads and parses a file; I/O failures are reported as Errc::SyntaxError
/// at line 0.
Hypergraph read_hgr_file(const std::filesystem::path& path);

/// Vertices are written by position, so parse_hgr(emit_hgr(h)) equals h
/// whenever V(h) = {0..n-1}.
std::string emit_hgr(const Hypergraph& h);

/// FAMILY k=<t>, then TOUR when t == 1, then one `T: v e<i> v ... v` line
/// per trail with 1-based vertices. Throws Errc::NoCertificate when the
/// outcome is negative.
std::string emit_certificate(const SolveOutcome& outcome);
std::string emit_family(const EulerFamily& family);

/// Inverse of emit_family. Throws ParseError for malformed text and
/// Errc::CertificateInvalid for a trail line that is not a closed walk.
EulerFamily parse_certificate(std::string_view text);

nlohmann::json family_to_json(const EulerFamily& family);
nlohmann::json stats_to_json(const SolveStats& stats);
/// Stats as one `key=value` line, in the same order as stats_to_json.
std::string stats_line(const SolveStats& stats);

}  // namespace eulerhg
