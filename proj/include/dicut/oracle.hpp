#pragma once

// Brute-force reference implementations over bitmasks. They share only the
// Digraph container with the library and are meant for small inputs.

#include "dicut/digraph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dicut::oracle {

using Mask = std::uint64_t;

/// At most 20 vertices and 64 edges.
struct Small {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

Small small_of(const Digraph& d);
Digraph digraph_of(const Small& s);

bool weakly_connected(const Small& s);

struct Shore {
  Mask shore;  // in-shore, nonempty and proper
  Mask edges;  // edges entering it
};

/// Every nonempty proper vertex set with no leaving edge.
std::vector<Shore> dicuts(const Small& s);
/// Distinct nonempty dicut edge sets.
std::vector<Mask> dicut_edge_sets(const Small& s);
/// Inclusion-minimal nonempty dicut edge sets.
std::vector<Mask> dibond_edge_sets(const Small& s);

bool is_dijoin(const Small& s, Mask f);
int min_dijoin_size(const Small& s);
int max_disjoint_dicuts(const Small& s);

/// Every way to split B into disjoint dibond edge sets; each way sorted.
std::vector<std::vector<Mask>> dibond_partitions(const Small& s, Mask b);

/// Equal labels iff mutually reachable. Labels numbered by first vertex.
std::vector<int> scc_labels(const Small& s);

/// Some side of one shore pair is comparable with some side of the other.
bool nested_shores(const Small& s, Mask y1, Mask y2);

/// Empty on success, otherwise the first failing condition. `dibonds_only`
/// requires every member to be a dibond.
std::string verify_pair(const Small& s, Mask f, const std::vector<Mask>& shores, bool nested,
                        bool dibonds_only);

/// Vertex-disjoint A-B paths in an undirected graph, by max-flow.
int max_disjoint_paths(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<int>& a, const std::vector<int>& b);

// Generators.

/// All digraphs on n vertices with at most max_edges edges and each ordered
/// pair used at most max_mult times.
std::vector<Small> exhaustive(int n, int max_edges, int max_mult, bool connected_only = true);

/// A random spanning tree with random orientations plus extra random edges.
Small random_weakly_connected(std::mt19937_64& rng, int n, int m, bool parallel);

/// Criterion-1 corpus: exhaustive 3-vertex digraphs with at most 6 edges
/// and multiplicity 2, then `random_count` seeded random ones with
/// |V| <= 7 and |E| <= 14.
std::vector<Small> lucchesi_younger_corpus(std::uint64_t seed, int random_count);

}  // namespace dicut::oracle
