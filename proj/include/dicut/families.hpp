#pragma once

#include "dicut/solver.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dicut {

/// What a family knows about one window N_n = E(D[W_n]): the window
/// vertices, the induced edges, and which infinite remainder components of
/// D − N_n each window vertex is attached to.
struct WindowSkeleton {
  struct SymEdge {
    std::string tail;
    std::string head;
    std::vector<std::string> tags;  // named edge sets containing the edge
  };
  struct Remainder {
    std::string name;
    std::string description;
  };
  std::vector<std::string> vertices;
  std::vector<SymEdge> edges;
  std::vector<Remainder> remainders;
  std::vector<std::pair<std::string, std::size_t>> links;  // window vertex -> remainder
};

struct FamilySpec {
  std::string name;
  std::string description;
  std::vector<std::string> edge_sets;  // names usable with --set
  WindowSkeleton (*skeleton)(int n);
};

const std::vector<FamilySpec>& families();
/// Throws std::invalid_argument for an unknown name.
const FamilySpec& family_spec(const std::string& name);

inline std::string sym_edge_name(const std::string& tail, const std::string& head) {
  return tail + "->" + head;
}

/// The contraction minor D.N_n of a family.
struct FamilyWindow {
  std::string family;
  int n = 0;
  Digraph digraph;
  std::vector<std::string> edge_names;                 // per digraph edge
  std::vector<std::vector<std::string>> class_members;  // per digraph vertex
  std::map<std::string, EdgeSet> named_edge_sets;       // over digraph edges
  std::set<std::string> window_edges;                   // all of N_n by name
  std::set<std::string> contracted_edges;               // N_n edges lost as loops
  std::map<std::string, std::set<std::string>> named_window_edges;  // F ∩ N_n by name

  std::optional<EdgeId> edge_by_name(const std::string& name) const;
  EdgeSet edges_by_name(const std::set<std::string>& names) const;
  std::set<std::string> names_of(const EdgeSet& edges) const;
  /// Throws std::invalid_argument for an unknown set name.
  const EdgeSet& named(const std::string& set) const;
};

/// Throws std::invalid_argument if n < 1.
FamilyWindow window(const FamilySpec& spec, int n);

/// Dibonds of the window; these are exactly the finite dibonds of D inside N_n.
std::vector<Dicut> finite_dibonds_in_window(const FamilyWindow& w, std::size_t cap = kDefaultCap);

/// contract_to(D.N_n, N_m) matches D.N_m edge by edge for m ≤ n, and the
/// named sets restrict consistently.
bool window_coherent(const FamilySpec& spec, int m, int n);

struct FinitaryCheck {
  bool hit_all = true;
  std::vector<Dicut> missed;
};
FinitaryCheck check_finitary_dijoin(const FamilyWindow& w, const std::string& set,
                                    std::size_t cap = kDefaultCap);

struct ExtensionResult {
  bool found = false;
  std::vector<std::pair<std::string, Dicut>> selection;  // F-edge name -> its dibond
  std::vector<std::string> unwitnessed;  // F-edges of N_n on no window dibond
  std::size_t candidates = 0;
};

/// Looks for window dibonds B_e, one per F-edge e lying on some window
/// dibond, with e ∈ B_e, |F ∩ B_e| = 1, pairwise disjoint and, if `nested`,
/// pairwise nested.
ExtensionResult nested_extension_search(const FamilyWindow& w, const std::string& set,
                                        std::size_t cap = kDefaultCap, bool nested = true);

/// Number of window dibonds holding the named edge, for n = 1..n_max
/// (zero while the edge is outside N_n).
std::vector<std::size_t> dibond_growth(const FamilySpec& spec, const std::string& edge,
                                       int n_max, std::size_t cap = kDefaultCap);

enum class CompactnessStatus { Stable, Unstable, NotFiniteParameter };

struct CompactnessReport {
  CompactnessStatus status = CompactnessStatus::Stable;
  int stable_from = 0;              // n0, where the packing number settles
  int unstable_at = 0;              // first level with no consistent choice
  std::vector<std::size_t> packing;  // k_n for n = 1..n_max
  std::vector<std::size_t> nested_pair_size;
  std::vector<std::size_t> consistent_choices;  // surviving F per level from n0
  std::vector<std::set<std::string>> family;    // the fixed disjoint family
  std::optional<std::set<std::string>> stable_dijoin;
};

/// Fixes a maximum disjoint family at the level where the packing number
/// settles and keeps the dijoins F ⊆ ⋃𝓑 with one edge per member that stay
/// valid at every later level. `restriction` limits the class to dibonds
/// with exactly these edge-name sets.
CompactnessReport compactness_run(const FamilySpec& spec, int n_max,
                                  const std::optional<std::vector<std::set<std::string>>>& restriction =
                                      std::nullopt,
                                  std::size_t cap = kDefaultCap);

std::string to_string(CompactnessStatus s);

}  // namespace dicut
