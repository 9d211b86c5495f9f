#pragma once

#include "eulerhg/hypergraph.hpp"

namespace eulerhg::fixtures {

inline Hypergraph tri() { return Hypergraph::build({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}); }

inline Hypergraph bowtie() {
  return Hypergraph::build({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
}

inline Hypergraph two_tri() {
  return Hypergraph::build({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
}

inline Hypergraph h3() { return Hypergraph::build({1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}, {3, 4}}); }

inline Hypergraph star() { return Hypergraph::build({0, 1, 2}, {{0, 1}, {0, 1}, {0, 2}}); }

inline Hypergraph bridge() {
  return Hypergraph::build({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
}

}  // namespace eulerhg::fixtures
