#pragma once

#include "dicut/digraph.hpp"

#include <optional>

namespace dicut {

struct Witness {
  EdgeSet edges;
  VertexId v;
  VertexId w;
};

/// Vertices reachable from `from` along edges of `allowed` (forward or backward).
VertexSet reachable(const Digraph& d, VertexId from, const EdgeSet& allowed, bool forward = true);

/// True iff v and w reach each other using only edges of W. On finite
/// digraphs this is the same as W meeting every cut separating v and w in
/// both directions. Throws std::invalid_argument if v == w.
bool witness_check(const Digraph& d, const EdgeSet& w_edges, VertexId v, VertexId w);

/// Inclusion-minimal witness found by dropping edges greedily in id order,
/// or nothing if v and w are not strongly connected in D.
std::optional<Witness> minimal_witness(const Digraph& d, VertexId v, VertexId w);

}  // namespace dicut
