#pragma once

#include "dicut/digraph.hpp"

#include <optional>
#include <vector>

namespace dicut {

/// Weak component labels of the subdigraph (V, edges), restricted to the
/// vertices in `within`. Vertices outside `within` get label -1. Labels are
/// numbered in order of smallest member.
struct Components {
  std::vector<int> label;
  int count = 0;
};

Components weak_components(const Digraph& d, const EdgeSet& edges, const VertexSet& within);
Components weak_components(const Digraph& d);

bool is_weakly_connected(const Digraph& d);
/// True iff D[S] is weakly connected; the empty set counts as connected.
bool induces_weakly_connected(const Digraph& d, const VertexSet& s);

/// δ⁻(Y) and δ⁺(Y).
EdgeSet in_cut(const Digraph& d, const VertexSet& y);
EdgeSet out_cut(const Digraph& d, const VertexSet& y);

/// A cut E(X, Y) stored by its side Y; X is the complement.
class Cut {
 public:
  /// Throws std::invalid_argument unless both sides are nonempty.
  explicit Cut(VertexSet in_side);

  const VertexSet& in_side() const { return in_side_; }
  VertexSet out_side() const { return in_side_.complement(); }
  EdgeSet edges(const Digraph& d) const;

  friend bool operator==(const Cut& a, const Cut& b) { return a.in_side_ == b.in_side_; }

 private:
  VertexSet in_side_;
};

/// A directed cut δ⁻(Y), stored by its in-shore. The in-shore may be empty
/// or everything, which gives the empty dicut.
class Dicut {
 public:
  /// Throws std::invalid_argument if some edge leaves the in-shore.
  Dicut(const Digraph& d, VertexSet in_shore);

  const VertexSet& in_shore() const { return in_shore_; }
  VertexSet out_shore() const { return in_shore_.complement(); }
  const EdgeSet& edges() const { return edges_; }
  bool is_dibond() const { return dibond_; }
  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }

  /// Throws std::invalid_argument for an empty or full in-shore.
  Cut as_cut() const { return Cut(in_shore_); }

  friend bool operator==(const Dicut& a, const Dicut& b) { return a.in_shore_ == b.in_shore_; }
  friend bool operator!=(const Dicut& a, const Dicut& b) { return !(a == b); }
  /// Canonical order: lexicographic on sorted in-shore ids.
  friend bool operator<(const Dicut& a, const Dicut& b) { return a.in_shore_ < b.in_shore_; }

 private:
  VertexSet in_shore_;
  EdgeSet edges_;
  bool dibond_ = false;
};

/// The dicut with in-shore Y, or nothing if δ⁺(Y) ≠ ∅.
/// Throws std::invalid_argument if Y is empty or all of V.
std::optional<Dicut> dicut_from_shore(const Digraph& d, const VertexSet& y);

/// The dicut whose edge set is exactly B, if B is one. Components of D − B
/// touching no edge of B are put in the out-shore.
std::optional<Dicut> dicut_from_edge_set(const Digraph& d, const EdgeSet& b);

/// True iff a side of one is ⊆-comparable with a side of the other.
bool nested(const Cut& c1, const Cut& c2);
bool nested(const Dicut& b1, const Dicut& b2);
inline bool crossing(const Dicut& b1, const Dicut& b2) { return !nested(b1, b2); }

Dicut meet(const Digraph& d, const Dicut& b1, const Dicut& b2);
Dicut join(const Digraph& d, const Dicut& b1, const Dicut& b2);

/// Splits a nonempty dicut of a weakly connected digraph into disjoint
/// dibonds, in canonical order.
std::vector<Dicut> decompose_dicut(const Digraph& d, const Dicut& b);

void sort_canonical(std::vector<Dicut>& family);
bool pairwise_disjoint(const std::vector<Dicut>& family);
bool pairwise_nested(const std::vector<Dicut>& family);
EdgeSet union_of(const Digraph& d, const std::vector<Dicut>& family);

/// "{a->b, b->c}" style listings for messages and reports.
std::string format_edges(const Digraph& d, const EdgeSet& edges);
std::string format_vertices(const Digraph& d, const VertexSet& vertices);

}  // namespace dicut
