#pragma once

#include "dicut/solver.hpp"

#include <utility>
#include <vector>

namespace dicut {

/// A digraph obtained by identifying vertex classes and deleting loops.
/// Used both for quotients D/≡ and for contraction minors D.N.
struct QuotientMap {
  std::vector<int> class_of;                   // original vertex -> class
  std::vector<std::vector<VertexId>> classes;  // ordered by smallest member
  Digraph quotient;
  std::vector<EdgeId> edge_provenance;  // quotient edge -> original edge

  /// Original vertices of a quotient vertex set.
  VertexSet lift_vertices(const VertexSet& q, std::size_t num_vertices) const;
  /// Quotient edges of an original edge set; nothing if some edge is internal.
  std::optional<EdgeSet> project_edges(const EdgeSet& e) const;
  EdgeSet lift_edges(const EdgeSet& q, std::size_t num_edges) const;
};

/// Classes are the sets of vertices no listed cut separates.
QuotientMap equivalence_classes(const Digraph& d, const std::vector<Cut>& cuts);
/// Same, generated by the (nonempty) dicuts of a family.
QuotientMap equivalence_classes(const Digraph& d, const std::vector<Dicut>& family);

/// D.N: every weak component of D − N becomes one vertex, the edges of N
/// are kept, loops are dropped.
QuotientMap contract_to(const Digraph& d, const EdgeSet& n);

/// B is a dicut (resp. dibond) of D iff it is one of D.N. Requires B ⊆ N.
bool verify_cut_lift(const Digraph& d, const EdgeSet& n, const EdgeSet& b);

/// Dicut and dibond status of an edge set, decided from the components of D − B.
struct EdgeSetCutStatus {
  bool dicut = false;
  bool dibond = false;
};
EdgeSetCutStatus cut_status(const Digraph& d, const EdgeSet& b);

struct BlockTree {
  std::vector<EdgeSet> blocks;  // ordered by smallest edge id
  VertexSet cutvertices;
  std::vector<std::pair<VertexId, std::size_t>> incidences;  // (cutvertex, block)

  /// Index of the block holding edge e.
  std::size_t block_of(EdgeId e) const;
};

/// Blocks of the underlying multigraph: a bridge is a block of its own and
/// parallel edges lie in a common block.
BlockTree block_cut_tree(const Digraph& d);

/// Splits the class along the blocks, solves each block, and merges.
OptimalPair split_solve_merge(const Digraph& d, const DibondClass& cls);

/// Class members of D seen as dibonds of the quotient, and back.
DibondClass project_class(const Digraph& d, const QuotientMap& qm, const DibondClass& cls);

/// Rewrites a pair of the quotient in original ids and re-verifies it against
/// `cls` on D. Throws VerificationFailed with the broken condition.
OptimalPair quotient_lift(const Digraph& d, const QuotientMap& qm, const OptimalPair& pair,
                          const DibondClass& cls);
/// The other direction: a pair of D restated on the quotient, verified
/// against `quotient_cls`.
OptimalPair quotient_project(const Digraph& d, const QuotientMap& qm, const OptimalPair& pair,
                             const DibondClass& quotient_cls);

}  // namespace dicut
