#include "eulerhg/error.hpp"

namespace eulerhg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::EdgeNotSubsetOfV: return "EdgeNotSubsetOfV";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdgeId: return "UnknownEdgeId";
    case Errc::BadVertexSubset: return "BadVertexSubset";
    case Errc::NotAnAnchor: return "NotAnAnchor";
    case Errc::EdgesOverlap: return "EdgesOverlap";
    case Errc::NotAnEdgeCut: return "NotAnEdgeCut";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TrivialHypergraph: return "TrivialHypergraph";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::SingleComponent: return "SingleComponent";
    case Errc::InvalidAssignment: return "InvalidAssignment";
    case Errc::CertificateInvalid: return "CertificateInvalid";
    case Errc::EdgeMissesVertex: return "EdgeMissesVertex";
    case Errc::MalformedGadgetTraversal: return "MalformedGadgetTraversal";
    case Errc::TraversalConditionUnmet: return "TraversalConditionUnmet";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadSpec: return "BadSpec";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::NoCertificate: return "NoCertificate";
    case Errc::DecisionMismatch: return "DecisionMismatch";
  }
  return "Unknown";
}

}  // namespace eulerhg
