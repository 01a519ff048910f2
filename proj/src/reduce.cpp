#include "dicut/reduce.hpp"

#include "dicut/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dicut {

VertexSet QuotientMap::lift_vertices(const VertexSet& q, std::size_t num_vertices) const {
  VertexSet out(num_vertices);
  q.for_each([&](VertexId c) {
    for (VertexId v : classes[c]) out.insert(v);
  });
  return out;
}

std::optional<EdgeSet> QuotientMap::project_edges(const EdgeSet& e) const {
  EdgeSet out(quotient.num_edges());
  std::size_t hits = 0;
  for (EdgeId q = 0; q < edge_provenance.size(); ++q) {
    if (e.contains(edge_provenance[q])) {
      out.insert(q);
      ++hits;
    }
  }
  if (hits != e.size()) return std::nullopt;
  return out;
}

EdgeSet QuotientMap::lift_edges(const EdgeSet& q, std::size_t num_edges) const {
  EdgeSet out(num_edges);
  q.for_each([&](EdgeId e) { out.insert(edge_provenance[e]); });
  return out;
}

namespace {

QuotientMap build_quotient(const Digraph& d, const std::vector<int>& raw_label) {
  QuotientMap qm;
  std::map<int, int> renumber;
  qm.class_of.assign(d.num_vertices(), -1);
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    auto [it, fresh] = renumber.emplace(raw_label[v], static_cast<int>(qm.classes.size()));
    if (fresh) qm.classes.emplace_back();
    qm.class_of[v] = it->second;
    qm.classes[it->second].push_back(v);
  }
  for (const auto& members : qm.classes) {
    std::string name;
    if (members.size() == 1) {
      name = d.name(members[0]);
    } else {
      name = "{";
      for (std::size_t i = 0; i < members.size(); ++i) name += (i ? "," : "") + d.name(members[i]);
      name += "}";
    }
    qm.quotient.add_vertex(name);
  }
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    const int a = qm.class_of[d.edge(e).tail];
    const int b = qm.class_of[d.edge(e).head];
    if (a == b) continue;
    qm.quotient.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    qm.edge_provenance.push_back(e);
  }
  return qm;
}

}  // namespace

QuotientMap equivalence_classes(const Digraph& d, const std::vector<Cut>& cuts) {
  std::map<std::vector<bool>, int> signature_ids;
  std::vector<int> label(d.num_vertices());
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::vector<bool> sig;
    sig.reserve(cuts.size());
    for (const auto& c : cuts) sig.push_back(c.in_side().contains(v));
    auto [it, fresh] = signature_ids.emplace(std::move(sig), static_cast<int>(signature_ids.size()));
    label[v] = it->second;
  }
  return build_quotient(d, label);
}

QuotientMap equivalence_classes(const Digraph& d, const std::vector<Dicut>& family) {
  std::vector<Cut> cuts;
  for (const auto& b : family)
    if (!b.in_shore().empty() && !b.in_shore().is_full()) cuts.push_back(b.as_cut());
  return equivalence_classes(d, cuts);
}

QuotientMap contract_to(const Digraph& d, const EdgeSet& n) {
  const Components comp = weak_components(d, d.all_edges() - n, d.all_vertices());
  return build_quotient(d, comp.label);
}

EdgeSetCutStatus cut_status(const Digraph& d, const EdgeSet& b) {
  EdgeSetCutStatus s;
  if (b.empty()) return s;
  const Components comp = weak_components(d, d.all_edges() - b, d.all_vertices());
  std::vector<char> head(comp.count, 0), tail(comp.count, 0);
  bool ok = true;
  b.for_each([&](EdgeId e) {
    const int t = comp.label[d.edge(e).tail];
    const int h = comp.label[d.edge(e).head];
    if (t == h) ok = false;
    tail[t] = 1;
    head[h] = 1;
  });
  for (int c = 0; c < comp.count && ok; ++c)
    if (head[c] && tail[c]) ok = false;
  s.dicut = ok;
  s.dibond = ok && comp.count == 2;
  return s;
}

bool verify_cut_lift(const Digraph& d, const EdgeSet& n, const EdgeSet& b) {
  if (!b.subset_of(n)) throw std::invalid_argument("B must be a subset of N");
  const EdgeSetCutStatus in_d = cut_status(d, b);
  const QuotientMap minor = contract_to(d, n);
  EdgeSetCutStatus in_minor;
  if (auto projected = minor.project_edges(b)) in_minor = cut_status(minor.quotient, *projected);
  return in_d.dicut == in_minor.dicut && in_d.dibond == in_minor.dibond;
}

std::size_t BlockTree::block_of(EdgeId e) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].contains(e)) return i;
  throw std::out_of_range("edge lies in no block");
}

BlockTree block_cut_tree(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<EdgeId> stack;
  int timer = 0;
  BlockTree bt;

  std::function<void(VertexId, std::optional<EdgeId>)> dfs = [&](VertexId v,
                                                                 std::optional<EdgeId> parent) {
    disc[v] = low[v] = ++timer;
    for (EdgeId e : d.incident_edges(v)) {
      if (parent && e == *parent) continue;
      const VertexId u = d.other_end(e, v);
      if (disc[u] == 0) {
        stack.push_back(e);
        dfs(u, e);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          EdgeSet block = d.no_edges();
          EdgeId top;
          do {
            top = stack.back();
            stack.pop_back();
            block.insert(top);
          } while (top != e);
          bt.blocks.push_back(std::move(block));
        }
      } else if (disc[u] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (disc[v] == 0) dfs(v, std::nullopt);

  std::sort(bt.blocks.begin(), bt.blocks.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.first() < b.first(); });
  std::vector<std::vector<std::size_t>> blocks_at(n);
  for (std::size_t i = 0; i < bt.blocks.size(); ++i) {
    VertexSet touched = d.no_vertices();
    bt.blocks[i].for_each([&](EdgeId e) {
      touched.insert(d.edge(e).tail);
      touched.insert(d.edge(e).head);
    });
    touched.for_each([&](VertexId v) { blocks_at[v].push_back(i); });
  }
  bt.cutvertices = d.no_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (blocks_at[v].size() < 2) continue;
    bt.cutvertices.insert(v);
    for (std::size_t i : blocks_at[v]) bt.incidences.emplace_back(v, i);
  }
  return bt;
}

OptimalPair split_solve_merge(const Digraph& d, const DibondClass& cls) {
  if (!is_weakly_connected(d)) throw PreconditionViolated("digraph is not weakly connected");
  const BlockTree bt = block_cut_tree(d);
  std::vector<std::vector<Dicut>> per_block(bt.blocks.size());
  for (const auto& b : cls.members) {
    std::size_t home = bt.blocks.size();
    for (std::size_t i = 0; i < bt.blocks.size(); ++i) {
      if (!b.edges().intersects(bt.blocks[i])) continue;
      if (home != bt.blocks.size()) throw VerificationFailed("dibond meets two blocks");
      home = i;
    }
    if (home == bt.blocks.size() || !b.edges().subset_of(bt.blocks[home]))
      throw VerificationFailed("dibond is not inside one block");
    per_block[home].push_back(b);
  }

  OptimalPair merged;
  merged.dijoin = d.no_edges();
  merged.class_tag = cls.tag();
  merged.nested = true;
  for (std::size_t i = 0; i < bt.blocks.size(); ++i) {
    if (per_block[i].empty()) continue;
    const EdgeInducedSubdigraph sub = edge_induced_subdigraph(d, bt.blocks[i]);
    std::vector<EdgeId> local_of(d.num_edges(), 0);
    for (EdgeId le = 0; le < sub.edge_origin.size(); ++le) local_of[sub.edge_origin[le]] = le;
    std::vector<Dicut> local_members;
    for (const auto& b : per_block[i]) {
      EdgeSet le = sub.digraph.no_edges();
      b.edges().for_each([&](EdgeId e) { le.insert(local_of[e]); });
      auto local = dicut_from_edge_set(sub.digraph, le);
      if (!local || !local->is_dibond()) throw VerificationFailed("dibond does not restrict to its block");
      local_members.push_back(std::move(*local));
    }
    const DibondClass local_cls = cls.is_full ? DibondClass::all(sub.digraph)
                                              : DibondClass::from_members(sub.digraph, local_members);
    const OptimalPair local = nested_optimal_pair(sub.digraph, local_cls);
    local.dijoin.for_each([&](EdgeId le) { merged.dijoin.insert(sub.edge_origin[le]); });
    for (const auto& lb : local.family) {
      EdgeSet e = d.no_edges();
      lb.edges().for_each([&](EdgeId le) { e.insert(sub.edge_origin[le]); });
      auto lifted = dicut_from_edge_set(d, e);
      if (!lifted) throw VerificationFailed("block dicut does not lift to D");
      merged.family.push_back(std::move(*lifted));
    }
  }
  const PairVerdict v = verify_pair(d, merged, cls);
  if (!v.ok) throw VerificationFailed(v.failed);
  return merged;
}

DibondClass project_class(const Digraph& d, const QuotientMap& qm, const DibondClass& cls) {
  std::vector<Dicut> out;
  for (const auto& b : cls.members) {
    VertexSet y(qm.quotient.num_vertices());
    b.in_shore().for_each([&](VertexId v) { y.insert(static_cast<VertexId>(qm.class_of[v])); });
    if (qm.lift_vertices(y, d.num_vertices()) != b.in_shore())
      throw VerificationFailed("class member splits a quotient class");
    Dicut q(qm.quotient, y);
    if (!q.is_dibond()) throw VerificationFailed("class member is not a dibond of the quotient");
    out.push_back(std::move(q));
  }
  return DibondClass::from_members(qm.quotient, std::move(out));
}

OptimalPair quotient_lift(const Digraph& d, const QuotientMap& qm, const OptimalPair& pair,
                          const DibondClass& cls) {
  OptimalPair out;
  out.class_tag = pair.class_tag;
  out.nested = pair.nested;
  out.dijoin = qm.lift_edges(pair.dijoin, d.num_edges());
  for (const auto& b : pair.family) {
    const VertexSet y = qm.lift_vertices(b.in_shore(), d.num_vertices());
    if (!out_cut(d, y).empty()) throw VerificationFailed("(ii) lifted member is not a dicut");
    Dicut lifted(d, y);
    if (lifted.edges() != qm.lift_edges(b.edges(), d.num_edges()))
      throw VerificationFailed("(ii) lifted member changed its edges");
    out.family.push_back(std::move(lifted));
  }
  const PairVerdict v = verify_pair(d, out, cls);
  if (!v.ok) throw VerificationFailed(v.failed);
  return out;
}

OptimalPair quotient_project(const Digraph& d, const QuotientMap& qm, const OptimalPair& pair,
                             const DibondClass& quotient_cls) {
  OptimalPair out;
  out.class_tag = pair.class_tag;
  out.nested = pair.nested;
  auto f = qm.project_edges(pair.dijoin);
  if (!f) throw VerificationFailed("(i) dijoin uses an edge inside a quotient class");
  out.dijoin = *f;
  for (const auto& b : pair.family) {
    VertexSet y(qm.quotient.num_vertices());
    b.in_shore().for_each([&](VertexId v) { y.insert(static_cast<VertexId>(qm.class_of[v])); });
    if (qm.lift_vertices(y, d.num_vertices()) != b.in_shore())
      throw VerificationFailed("(ii) member splits a quotient class");
    out.family.emplace_back(qm.quotient, y);
  }
  const PairVerdict v = verify_pair(qm.quotient, out, quotient_cls);
  if (!v.ok) throw VerificationFailed(v.failed);
  return out;
}

}  // namespace dicut
