#pragma once

#include "dicut/digraph.hpp"
#include "dicut/cuts.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

namespace fixtures {

using dicut::Digraph;

inline Digraph make(std::initializer_list<std::pair<const char*, const char*>> edges) {
  Digraph d;
  for (auto [t, h] : edges) d.add_edge(t, h);
  return d;
}

inline Digraph path3() { return make({{"a", "b"}, {"b", "c"}}); }
inline Digraph c2() { return make({{"u", "v"}, {"v", "u"}}); }
inline Digraph diamond() { return make({{"s", "a"}, {"s", "b"}, {"a", "t"}, {"b", "t"}}); }
inline Digraph out_fork() { return make({{"u", "v"}, {"u", "w"}}); }
inline Digraph single_edge() { return make({{"u", "v"}}); }
inline Digraph triangle_cycle() { return make({{"u", "v"}, {"v", "w"}, {"w", "u"}}); }
/// Two Diamonds glued at t = s'.
inline Digraph double_diamond() {
  return make({{"s", "a"}, {"s", "b"}, {"a", "t"}, {"b", "t"},
               {"t", "c"}, {"t", "d"}, {"c", "z"}, {"d", "z"}});
}

inline dicut::VertexId v(const Digraph& d, const std::string& name) {
  auto id = d.find_vertex(name);
  if (!id) throw std::invalid_argument("no vertex " + name);
  return *id;
}

inline dicut::VertexSet shore(const Digraph& d, std::initializer_list<const char*> names) {
  dicut::VertexSet s = d.no_vertices();
  for (auto n : names) s.insert(v(d, n));
  return s;
}

/// Edge set from "t->h" labels; a label names every parallel copy.
inline dicut::EdgeSet edges(const Digraph& d, std::initializer_list<const char*> labels) {
  dicut::EdgeSet s = d.no_edges();
  for (auto l : labels) {
    bool found = false;
    for (dicut::EdgeId e = 0; e < d.num_edges(); ++e)
      if (d.edge_label(e) == l) {
        s.insert(e);
        found = true;
      }
    if (!found) throw std::invalid_argument(std::string("no edge ") + l);
  }
  return s;
}

inline dicut::Dicut dicut_of(const Digraph& d, std::initializer_list<const char*> in_shore) {
  return dicut::Dicut(d, shore(d, in_shore));
}

}  // namespace fixtures
