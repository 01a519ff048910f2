#pragma once

#include "dicut/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dicut {

struct Edge {
  VertexId tail;
  VertexId head;
};

/// Finite loopless multidigraph. Vertices and edges get dense ids in
/// insertion order; ids never change once assigned.
class Digraph {
 public:
  Digraph() = default;

  /// n anonymous vertices named "0".."n-1".
  explicit Digraph(std::size_t n);

  VertexId add_vertex(std::string name);
  /// Throws std::invalid_argument for loops and unknown endpoints.
  EdgeId add_edge(VertexId tail, VertexId head);
  /// Looks up (or creates) vertices by name.
  EdgeId add_edge(std::string_view tail, std::string_view head);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }
  /// Both directions, in edge-id order.
  std::span<const EdgeId> incident_edges(VertexId v) const { return incident_[v]; }

  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].tail == v ? edges_[e].head : edges_[e].tail;
  }

  VertexSet no_vertices() const { return VertexSet(num_vertices()); }
  VertexSet all_vertices() const { return VertexSet::full(num_vertices()); }
  EdgeSet no_edges() const { return EdgeSet(num_edges()); }
  EdgeSet all_edges() const { return EdgeSet::full(num_edges()); }

  /// "tail->head" with vertex names; parallel edges share a label.
  std::string edge_label(EdgeId e) const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// The subdigraph on the given edges, keeping every vertex incident with one of
/// them. Local ids follow the original id order.
struct EdgeInducedSubdigraph {
  Digraph digraph;
  std::vector<VertexId> vertex_origin;  // local vertex -> original vertex
  std::vector<EdgeId> edge_origin;      // local edge -> original edge
};

EdgeInducedSubdigraph edge_induced_subdigraph(const Digraph& d, const EdgeSet& edges);

}  // namespace dicut
