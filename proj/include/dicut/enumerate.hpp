#pragma once

#include "dicut/cuts.hpp"

#include <utility>
#include <vector>

namespace dicut {

/// Strongly connected components, numbered by smallest member vertex.
struct Condensation {
  std::vector<int> scc_of;
  std::vector<std::vector<VertexId>> members;
  std::vector<std::pair<int, int>> dag_edges;  // sorted, no duplicates
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;

  int count() const { return static_cast<int>(members.size()); }
  /// Union of the members of the given components.
  VertexSet lift(const std::vector<char>& chosen, std::size_t num_vertices) const;
};

Condensation condensation(const Digraph& d);

/// Every dicut of a weakly connected digraph, in canonical order.
/// Throws CapExceeded if there are more than `cap`.
std::vector<Dicut> enumerate_dicuts(const Digraph& d, std::size_t cap = kDefaultCap);

/// Every dibond, in canonical order. Searches for connected shore pairs
/// directly instead of filtering the dicut list.
std::vector<Dicut> enumerate_dibonds(const Digraph& d, std::size_t cap = kDefaultCap);

/// The dibonds whose edge set contains e, in canonical order.
std::vector<Dicut> dibonds_containing_edge(const Digraph& d, EdgeId e,
                                           std::size_t cap = kDefaultCap);

}  // namespace dicut
