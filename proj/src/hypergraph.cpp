#include "dicut/hypergraph.hpp"

#include "dicut/enumerate.hpp"
#include "packing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dicut {

HyperVertex Hypergraph::add_vertex(std::string name) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate hypergraph vertex " + name);
  const auto id = static_cast<HyperVertex>(names_.size());
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

std::size_t Hypergraph::add_edge(std::vector<HyperVertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("hyperedges must be nonempty");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.back() >= names_.size()) throw std::invalid_argument("unknown hypergraph vertex");
  edges_.push_back(std::move(vertices));
  return edges_.size() - 1;
}

std::size_t Hypergraph::add_edge_by_names(const std::vector<std::string>& names) {
  std::vector<HyperVertex> ids;
  for (const auto& n : names) {
    auto v = find_vertex(n);
    ids.push_back(v ? *v : add_vertex(n));
  }
  return add_edge(std::move(ids));
}

std::optional<HyperVertex> Hypergraph::find_vertex(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool Hypergraph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (i != j && std::includes(edges_[j].begin(), edges_[j].end(), edges_[i].begin(),
                                  edges_[i].end()))
        return false;
  return true;
}

Hypergraph Hypergraph::restrict_to(const std::vector<std::size_t>& edge_ids) const {
  std::vector<char> used(names_.size(), 0);
  for (std::size_t i : edge_ids)
    for (HyperVertex v : edges_.at(i)) used[v] = 1;
  Hypergraph out;
  std::vector<HyperVertex> local(names_.size(), 0);
  for (HyperVertex v = 0; v < names_.size(); ++v)
    if (used[v]) local[v] = out.add_vertex(names_[v]);
  for (std::size_t i : edge_ids) {
    std::vector<HyperVertex> e;
    for (HyperVertex v : edges_[i]) e.push_back(local[v]);
    out.add_edge(std::move(e));
  }
  return out;
}

namespace {

using detail::Bits;

std::vector<Bits> edge_bits(const Hypergraph& h) {
  std::vector<Bits> out;
  for (const auto& e : h.edges()) {
    Bits b(h.num_vertices());
    for (HyperVertex v : e) b.set(v);
    out.push_back(std::move(b));
  }
  return out;
}

// Picks one vertex from each matching member so that every hyperedge is hit.
class TransversalSearch {
 public:
  TransversalSearch(const std::vector<Bits>& edges, const std::vector<std::size_t>& matching,
                    std::size_t cap)
      : edges_(edges), matching_(matching), cap_(cap), choice_(matching.size(), -1) {}

  std::optional<std::vector<HyperVertex>> run() {
    if (!search()) return std::nullopt;
    std::vector<HyperVertex> cover;
    for (std::size_t j = 0; j < matching_.size(); ++j) {
      if (choice_[j] < 0) choice_[j] = static_cast<long>(edges_[matching_[j]].find_first());
      cover.push_back(static_cast<HyperVertex>(choice_[j]));
    }
    std::sort(cover.begin(), cover.end());
    return cover;
  }

 private:
  bool hit(std::size_t e) const {
    for (long c : choice_)
      if (c >= 0 && edges_[e].test(static_cast<std::size_t>(c))) return true;
    return false;
  }

  bool search() {
    if (++nodes_ > cap_) throw CapExceeded(cap_);
    // The uncovered hyperedge with the fewest (member, vertex) options.
    std::size_t best_e = edges_.size();
    std::size_t best_opts = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (hit(e)) continue;
      std::size_t opts = 0;
      for (std::size_t j = 0; j < matching_.size(); ++j)
        if (choice_[j] < 0) opts += (edges_[e] & edges_[matching_[j]]).count();
      if (opts == 0) return false;
      if (best_e == edges_.size() || opts < best_opts) {
        best_e = e;
        best_opts = opts;
      }
    }
    if (best_e == edges_.size()) return true;
    for (std::size_t j = 0; j < matching_.size(); ++j) {
      if (choice_[j] >= 0) continue;
      const Bits opts = edges_[best_e] & edges_[matching_[j]];
      for (auto v = opts.find_first(); v != Bits::npos; v = opts.find_next(v)) {
        choice_[j] = static_cast<long>(v);
        if (search()) return true;
      }
      choice_[j] = -1;
    }
    return false;
  }

  const std::vector<Bits>& edges_;
  const std::vector<std::size_t>& matching_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
  std::vector<long> choice_;
};

}  // namespace

std::optional<KonigPair> konig_property(const Hypergraph& h, std::size_t cap) {
  detail::PackingProblem p;
  p.num_elements = h.num_vertices();
  p.members = edge_bits(h);
  auto try_matching = [&](const std::vector<std::size_t>& m) -> std::optional<KonigPair> {
    TransversalSearch t(p.members, m, cap);
    auto cover = t.run();
    if (!cover) return std::nullopt;
    return KonigPair{m, *cover};
  };
  const auto first = detail::max_packing(p);
  if (auto kp = try_matching(first)) return kp;
  for (const auto& m : detail::all_max_packings(p, cap)) {
    if (m == first) continue;
    if (auto kp = try_matching(m)) return kp;
  }
  return std::nullopt;
}

PairVerdict verify_konig_pair(const Hypergraph& h, const KonigPair& pair) {
  const auto bits = edge_bits(h);
  Bits cover(h.num_vertices());
  for (HyperVertex v : pair.cover) {
    if (v >= h.num_vertices()) return {false, "cover vertex out of range"};
    cover.set(v);
  }
  Bits matched(h.num_vertices());
  for (std::size_t i : pair.matching) {
    if (i >= h.num_edges()) return {false, "matching member out of range"};
    if (bits[i].intersects(matched)) return {false, "(1) matching members intersect"};
    matched |= bits[i];
  }
  for (std::size_t e = 0; e < bits.size(); ++e)
    if (!bits[e].intersects(cover)) return {false, "(2) hyperedge " + std::to_string(e) + " uncovered"};
  if (!cover.is_subset_of(matched)) return {false, "(3) cover leaves the matching's union"};
  for (std::size_t i : pair.matching)
    if ((bits[i] & cover).count() != 1) return {false, "(4) member " + std::to_string(i) + " not hit once"};
  return {};
}

namespace {

Hypergraph edge_vertices(const Digraph& d) {
  std::map<std::pair<VertexId, VertexId>, int> multiplicity;
  for (const Edge& e : d.edges()) ++multiplicity[{e.tail, e.head}];
  Hypergraph h;
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    std::string label = d.edge_label(e);
    if (multiplicity[{d.edge(e).tail, d.edge(e).head}] > 1) label += "#" + std::to_string(e);
    h.add_vertex(std::move(label));
  }
  return h;
}

void add_dicut_edges(Hypergraph& h, const std::vector<Dicut>& members) {
  for (const auto& b : members) {
    std::vector<HyperVertex> e;
    b.edges().for_each([&](EdgeId id) { e.push_back(id); });
    h.add_edge(std::move(e));
  }
}

}  // namespace

Hypergraph dibond_hypergraph(const Digraph& d, std::size_t cap) {
  Hypergraph h = edge_vertices(d);
  add_dicut_edges(h, enumerate_dibonds(d, cap));
  return h;
}

Hypergraph class_hypergraph(const Digraph& d, const DibondClass& cls) {
  Hypergraph h = edge_vertices(d);
  add_dicut_edges(h, cls.members);
  return h;
}

OptimalPair pair_from_konig(const Digraph& d, const DibondClass& cls, const KonigPair& kp) {
  OptimalPair out;
  out.dijoin = EdgeSet::of(d.num_edges(), kp.cover);
  for (std::size_t i : kp.matching) out.family.push_back(cls.members.at(i));
  sort_canonical(out.family);
  out.nested = pairwise_nested(out.family);
  out.class_tag = cls.tag();
  return out;
}

UndirectedGraph::UndirectedGraph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
}

std::uint32_t UndirectedGraph::add_vertex(std::string name) {
  names.push_back(std::move(name));
  return static_cast<std::uint32_t>(names.size() - 1);
}

void UndirectedGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= names.size() || v >= names.size()) throw std::invalid_argument("unknown endpoint");
  edges.emplace_back(u, v);
}

Hypergraph menger_hypergraph(const UndirectedGraph& g, const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (auto v : a) in_a.at(v) = 1;
  for (auto v : b) in_b.at(v) = 1;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }

  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::vector<std::uint32_t>> order;
  std::size_t paths = 0;
  auto record = [&](std::vector<std::uint32_t> vs) {
    if (++paths > cap) throw CapExceeded(cap);
    std::sort(vs.begin(), vs.end());
    if (found.insert(vs).second) order.push_back(std::move(vs));
  };

  std::vector<std::uint32_t> path;
  std::vector<char> on_path(n, 0);
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    for (std::uint32_t u : adj[v]) {
      if (on_path[u]) continue;
      if (in_b[u]) {
        path.push_back(u);
        record(path);
        path.pop_back();
        continue;
      }
      if (in_a[u]) continue;
      on_path[u] = 1;
      path.push_back(u);
      self(self, u);
      path.pop_back();
      on_path[u] = 0;
    }
  };
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!in_a[s]) continue;
    if (in_b[s]) record({s});
    on_path[s] = 1;
    path.assign(1, s);
    dfs(dfs, s);
    on_path[s] = 0;
  }

  std::vector<char> used(n, 0);
  for (const auto& vs : order)
    for (auto v : vs) used[v] = 1;
  Hypergraph h;
  std::vector<HyperVertex> local(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    if (used[v]) local[v] = h.add_vertex(g.names[v]);
  for (const auto& vs : order) {
    std::vector<HyperVertex> e;
    for (auto v : vs) e.push_back(local[v]);
    h.add_edge(std::move(e));
  }
  return h;
}

FinParameterCheck fin_parameter_check(const Hypergraph& h) {
  FinParameterCheck out;
  detail::PackingProblem p;
  p.num_elements = h.num_vertices();
  p.members = edge_bits(h);
  out.max_matching = detail::max_packing(p).size();
  out.min_cover = detail::min_hitting_set(h.num_vertices(), p.members).count();
  Bits used(h.num_vertices());
  for (std::size_t e = 0; e < p.members.size(); ++e) {
    if (p.members[e].intersects(used)) continue;
    out.maximal_matching.push_back(e);
    used |= p.members[e];
  }
  out.union_covers = std::all_of(p.members.begin(), p.members.end(),
                                 [&](const Bits& e) { return e.intersects(used); });
  out.ok = out.min_cover >= out.max_matching && out.union_covers;
  return out;
}

}  // namespace dicut
