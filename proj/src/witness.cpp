#include "dicut/witness.hpp"

#include "dicut/cuts.hpp"

#include <stdexcept>

namespace dicut {

VertexSet reachable(const Digraph& d, VertexId from, const EdgeSet& allowed, bool forward) {
  VertexSet seen = d.no_vertices();
  seen.insert(from);
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : forward ? d.out_edges(v) : d.in_edges(v)) {
      if (!allowed.contains(e)) continue;
      const VertexId u = forward ? d.edge(e).head : d.edge(e).tail;
      if (seen.contains(u)) continue;
      seen.insert(u);
      stack.push_back(u);
    }
  }
  return seen;
}

bool witness_check(const Digraph& d, const EdgeSet& w_edges, VertexId v, VertexId w) {
  if (v == w) throw std::invalid_argument("witness endpoints must differ");
  return reachable(d, v, w_edges).contains(w) && reachable(d, w, w_edges).contains(v);
}

std::optional<Witness> minimal_witness(const Digraph& d, VertexId v, VertexId w) {
  if (v == w) throw std::invalid_argument("witness endpoints must differ");
  EdgeSet current = d.all_edges();
  if (!witness_check(d, current, v, w)) return std::nullopt;
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    current.erase(e);
    if (!witness_check(d, current, v, w)) current.insert(e);
  }
  // D[W] must be strongly connected.
  const EdgeSet& kept = current;
  VertexSet touched = d.no_vertices();
  kept.for_each([&](EdgeId e) {
    touched.insert(d.edge(e).tail);
    touched.insert(d.edge(e).head);
  });
  const VertexSet fwd = reachable(d, v, kept);
  const VertexSet bwd = reachable(d, v, kept, false);
  if (!touched.subset_of(fwd & bwd))
    throw VerificationFailed("minimal witness does not induce a strongly connected digraph");
  return Witness{current, v, w};
}

}  // namespace dicut
