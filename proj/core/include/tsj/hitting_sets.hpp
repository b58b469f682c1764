#pragma once

// Exact hitting sets (vertex covers) of small hypergraphs on variable indices.
// Edges are variable sets; a cover meets every edge.

#include <cstddef>
#include <vector>

#include "tsj/exponent.hpp"

namespace tsj {

struct Hypergraph {
  std::size_t vertices = 0;
  std::vector<VariableSet> edges;
};

/// Generator supports of a monomial ideal.
Hypergraph support_hypergraph(const MonomialIdeal& ideal);

/// Minimum cover size by branch and bound. Throws InvalidArgument when an
/// edge is empty (no cover exists) or vertices > 64.
std::size_t minimum_cover_size(const Hypergraph& graph);

/// All inclusion-minimal covers, sorted by size then lexicographically.
std::vector<VariableSet> minimal_covers(const Hypergraph& graph);

}  // namespace tsj
