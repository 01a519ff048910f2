#pragma once

#include "dicut/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dicut {

using HyperVertex = std::uint32_t;

/// Finite hypergraph of finite character. Hyperedges are nonempty sorted
/// vertex lists; repeated hyperedges are kept.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws std::invalid_argument on a duplicate name.
  HyperVertex add_vertex(std::string name);
  /// Throws std::invalid_argument if empty or an id is out of range.
  std::size_t add_edge(std::vector<HyperVertex> vertices);
  /// Creates vertices by name as needed.
  std::size_t add_edge_by_names(const std::vector<std::string>& names);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& name(HyperVertex v) const { return names_[v]; }
  std::optional<HyperVertex> find_vertex(std::string_view name) const;
  const std::vector<HyperVertex>& edge(std::size_t i) const { return edges_[i]; }
  const std::vector<std::vector<HyperVertex>>& edges() const { return edges_; }

  /// No hyperedge contains another (equal copies count as containment).
  bool is_simple() const;
  /// H[F]: the listed hyperedges on the vertex set of their union.
  Hypergraph restrict_to(const std::vector<std::size_t>& edge_ids) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, HyperVertex> by_name_;
  std::vector<std::vector<HyperVertex>> edges_;
};

/// Conditions (1)-(4): matching, cover, cover inside the matching's union,
/// one cover vertex per matching member.
struct KonigPair {
  std::vector<std::size_t> matching;  // hyperedge ids, sorted
  std::vector<HyperVertex> cover;     // sorted
};

/// Exact search over maximum matchings and their transversals. Absent means
/// H lacks the König property. Throws CapExceeded.
std::optional<KonigPair> konig_property(const Hypergraph& h, std::size_t cap = kDefaultCap);

PairVerdict verify_konig_pair(const Hypergraph& h, const KonigPair& pair);

/// H_D: one vertex per edge id (labelled tail->head, with #id on parallel
/// edges), one hyperedge per dibond in enumeration order.
Hypergraph dibond_hypergraph(const Digraph& d, std::size_t cap = kDefaultCap);
/// Same vertices, one hyperedge per class member.
Hypergraph class_hypergraph(const Digraph& d, const DibondClass& cls);
/// Reads a König pair of class_hypergraph(d, cls) as a dijoin and family.
OptimalPair pair_from_konig(const Digraph& d, const DibondClass& cls, const KonigPair& kp);

/// Finite undirected multigraph. Loops are allowed and ignored by paths.
struct UndirectedGraph {
  std::vector<std::string> names;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  explicit UndirectedGraph(std::size_t n = 0);
  std::uint32_t add_vertex(std::string name);
  void add_edge(std::uint32_t u, std::uint32_t v);
  std::size_t num_vertices() const { return names.size(); }
};

/// H_{A,B}: hyperedges are the vertex sets of A-B paths, which meet A ∪ B
/// only at their endvertices. A vertex of A ∩ B is a trivial path.
/// Vertices are the vertices of G on some such path, in G's order.
/// Throws CapExceeded past `cap` paths.
Hypergraph menger_hypergraph(const UndirectedGraph& g, const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b, std::size_t cap = kDefaultCap);

struct FinParameterCheck {
  std::size_t max_matching = 0;
  std::size_t min_cover = 0;
  std::vector<std::size_t> maximal_matching;  // greedy, in hyperedge order
  bool union_covers = false;
  bool ok = false;
};

/// Finite cover and finite matching number: min cover >= max matching and
/// the union of a maximal matching is a cover.
FinParameterCheck fin_parameter_check(const Hypergraph& h);

}  // namespace dicut
