#include "dicut/digraph.hpp"

#include <stdexcept>

namespace dicut {

Digraph::Digraph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

VertexId Digraph::add_vertex(std::string name) {
  if (by_name_.count(name) != 0) throw std::invalid_argument("duplicate vertex name: " + name);
  const auto id = static_cast<VertexId>(names_.size());
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  incident_.emplace_back();
  return id;
}

EdgeId Digraph::add_edge(VertexId tail, VertexId head) {
  if (tail >= num_vertices() || head >= num_vertices())
    throw std::invalid_argument("edge endpoint is not a vertex");
  if (tail == head) throw std::invalid_argument("loops are not allowed");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({tail, head});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  incident_[tail].push_back(id);
  incident_[head].push_back(id);
  return id;
}

EdgeId Digraph::add_edge(std::string_view tail, std::string_view head) {
  auto lookup = [&](std::string_view n) {
    if (auto v = find_vertex(n)) return *v;
    return add_vertex(std::string(n));
  };
  const VertexId t = lookup(tail);
  const VertexId h = lookup(head);
  return add_edge(t, h);
}

std::optional<VertexId> Digraph::find_vertex(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string Digraph::edge_label(EdgeId e) const {
  return names_[edges_[e].tail] + "->" + names_[edges_[e].head];
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.names_ != b.names_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    if (a.edges_[i].tail != b.edges_[i].tail || a.edges_[i].head != b.edges_[i].head) return false;
  }
  return true;
}

EdgeInducedSubdigraph edge_induced_subdigraph(const Digraph& d, const EdgeSet& edges) {
  EdgeInducedSubdigraph sub;
  std::vector<VertexId> local(d.num_vertices(), static_cast<VertexId>(-1));
  VertexSet used = d.no_vertices();
  edges.for_each([&](EdgeId e) {
    used.insert(d.edge(e).tail);
    used.insert(d.edge(e).head);
  });
  used.for_each([&](VertexId v) {
    local[v] = sub.digraph.add_vertex(d.name(v));
    sub.vertex_origin.push_back(v);
  });
  edges.for_each([&](EdgeId e) {
    sub.digraph.add_edge(local[d.edge(e).tail], local[d.edge(e).head]);
    sub.edge_origin.push_back(e);
  });
  return sub;
}

}  // namespace dicut
