#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerhg {

enum class Errc {
  EmptyVertexSet,
  EdgeNotSubsetOfV,
  UnknownVertex,
  UnknownEdgeId,
  BadVertexSubset,
  NotAnAnchor,
  EdgesOverlap,
  NotAnEdgeCut,
  Disconnected,
  TrivialHypergraph,
  NotMinimal,
  SingleComponent,
  InvalidAssignment,
  CertificateInvalid,
  EdgeMissesVertex,
  MalformedGadgetTraversal,
  TraversalConditionUnmet,
  BudgetExceeded,
  TooLarge,
  BadSpec,
  SyntaxError,
  IndexOutOfRange,
  CountMismatch,
  NoCertificate,
  DecisionMismatch,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the text parsers; `line` is 1-based, 0 when the error is not
/// tied to a line (e.g. a missing edge line at end of input).
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace eulerhg
