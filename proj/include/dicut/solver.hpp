#pragma once

#include "dicut/cuts.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dicut {

/// A class of dibonds of one digraph, kept sorted and duplicate-free.
struct DibondClass {
  std::vector<Dicut> members;
  bool corner_closed = false;
  bool is_full = false;  // the class of all dibonds

  /// All dibonds of D. Corner-closed by construction.
  static DibondClass all(const Digraph& d, std::size_t cap = kDefaultCap);
  /// Validates that every member is a dibond, then decides corner-closedness
  /// and whether the list is the full class.
  static DibondClass from_members(const Digraph& d, std::vector<Dicut> members,
                                  std::size_t cap = kDefaultCap);

  std::string tag() const { return is_full ? "all" : "user"; }
  bool contains(const Dicut& b) const;
};

struct DijoinCheck {
  bool ok = false;
  std::optional<Dicut> missed;  // first member F misses
};

DijoinCheck is_dijoin(const Digraph& d, const EdgeSet& f, const DibondClass& cls);
/// Every member F misses, in class order.
std::vector<Dicut> missed_members(const Digraph& d, const EdgeSet& f, const DibondClass& cls);
/// True iff F meets every nonempty dicut of a weakly connected D.
bool is_full_dijoin(const Digraph& d, const EdgeSet& f);

/// B is the disjoint union of some class members. The empty dicut always is.
bool in_sum_closure(const DibondClass& cls, const Dicut& b);
/// One way to write B as a disjoint union of class members, if any.
std::optional<std::vector<Dicut>> sum_decomposition(const DibondClass& cls, const Dicut& b);
/// Every meet and join of two members lies in the sum closure.
bool is_corner_closed(const Digraph& d, const std::vector<Dicut>& members);

EdgeSet min_dijoin(const Digraph& d, const DibondClass& cls);
std::vector<Dicut> max_disjoint_dicuts(const Digraph& d, const DibondClass& cls);

struct OptimalPair {
  EdgeSet dijoin;
  std::vector<Dicut> family;
  bool nested = false;
  std::string class_tag;
};

/// Minimum dijoin with a maximum disjoint packing. Throws DualityGapDetected
/// if their sizes differ; for the full class that is a defect.
OptimalPair optimal_pair(const Digraph& d, const DibondClass& cls);

struct PairVerdict {
  bool ok = true;
  std::string failed;  // which condition broke
};

/// Independent check of the four pair conditions plus the nested flag.
PairVerdict verify_pair(const Digraph& d, const OptimalPair& pair, const DibondClass& cls);

/// Repeatedly replaces the first crossing pair by its meet and join.
/// With `refine_to_dibonds`, each member is then cut down to the dibond of
/// its decomposition holding its F-edge. `ambient` defaults to all dibonds.
/// Throws PreconditionViolated naming the failing condition.
std::vector<Dicut> uncross(const Digraph& d, const EdgeSet& f, std::vector<Dicut> family,
                           bool refine_to_dibonds = false,
                           const DibondClass* ambient = nullptr);

OptimalPair nested_optimal_pair(const Digraph& d, const DibondClass& cls);

/// Least superset closed under adding the dibonds of decompose_dicut of
/// every meet and join. Throws CapExceeded past `cap` members.
DibondClass corner_closure(const Digraph& d, const DibondClass& seed,
                           std::size_t cap = kDefaultCap);

/// A largest pairwise disjoint, pairwise nested subfamily of a corner-closed
/// class; its union is a dijoin for the class. Throws NotCornerClosed.
std::vector<Dicut> maximal_nested_disjoint_family(const Digraph& d, const DibondClass& cls);

}  // namespace dicut
