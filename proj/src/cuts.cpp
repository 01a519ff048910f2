#include "dicut/cuts.hpp"

#include <algorithm>
#include <stdexcept>

namespace dicut {

Components weak_components(const Digraph& d, const EdgeSet& edges, const VertexSet& within) {
  Components c;
  c.label.assign(d.num_vertices(), -1);
  std::vector<VertexId> stack;
  within.for_each([&](VertexId start) {
    if (c.label[start] != -1) return;
    const int id = c.count++;
    c.label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : d.incident_edges(v)) {
        if (!edges.contains(e)) continue;
        const VertexId u = d.other_end(e, v);
        if (!within.contains(u) || c.label[u] != -1) continue;
        c.label[u] = id;
        stack.push_back(u);
      }
    }
  });
  return c;
}

Components weak_components(const Digraph& d) {
  return weak_components(d, d.all_edges(), d.all_vertices());
}

bool is_weakly_connected(const Digraph& d) { return weak_components(d).count <= 1; }

bool induces_weakly_connected(const Digraph& d, const VertexSet& s) {
  return weak_components(d, d.all_edges(), s).count <= 1;
}

EdgeSet in_cut(const Digraph& d, const VertexSet& y) {
  EdgeSet out = d.no_edges();
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    if (y.contains(d.edge(e).head) && !y.contains(d.edge(e).tail)) out.insert(e);
  }
  return out;
}

EdgeSet out_cut(const Digraph& d, const VertexSet& y) {
  EdgeSet out = d.no_edges();
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    if (y.contains(d.edge(e).tail) && !y.contains(d.edge(e).head)) out.insert(e);
  }
  return out;
}

Cut::Cut(VertexSet in_side) : in_side_(std::move(in_side)) {
  if (in_side_.empty() || in_side_.is_full())
    throw std::invalid_argument("a cut needs two nonempty sides");
}

EdgeSet Cut::edges(const Digraph& d) const { return in_cut(d, in_side_) | out_cut(d, in_side_); }

Dicut::Dicut(const Digraph& d, VertexSet in_shore) : in_shore_(std::move(in_shore)) {
  if (in_shore_.universe() != d.num_vertices())
    throw std::invalid_argument("in-shore has the wrong universe");
  if (!out_cut(d, in_shore_).empty())
    throw std::invalid_argument("an edge leaves the in-shore: " + format_vertices(d, in_shore_));
  edges_ = in_cut(d, in_shore_);
  dibond_ = !in_shore_.empty() && !in_shore_.is_full() && induces_weakly_connected(d, in_shore_) &&
            induces_weakly_connected(d, in_shore_.complement());
}

std::optional<Dicut> dicut_from_shore(const Digraph& d, const VertexSet& y) {
  if (y.empty() || y.is_full())
    throw std::invalid_argument("in-shore must be a nonempty proper subset");
  if (!out_cut(d, y).empty()) return std::nullopt;
  return Dicut(d, y);
}

std::optional<Dicut> dicut_from_edge_set(const Digraph& d, const EdgeSet& b) {
  if (b.empty()) return std::nullopt;
  const Components comp = weak_components(d, d.all_edges() - b, d.all_vertices());
  std::vector<char> is_head(comp.count, 0), is_tail(comp.count, 0);
  bool ok = true;
  b.for_each([&](EdgeId e) {
    const int t = comp.label[d.edge(e).tail];
    const int h = comp.label[d.edge(e).head];
    if (t == h) ok = false;
    is_tail[t] = 1;
    is_head[h] = 1;
  });
  if (!ok) return std::nullopt;
  VertexSet y = d.no_vertices();
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    const int c = comp.label[v];
    if (is_head[c] && is_tail[c]) return std::nullopt;
    if (is_head[c]) y.insert(v);
  }
  Dicut out(d, y);
  if (out.edges() != b) return std::nullopt;
  return out;
}

namespace {

// The other four comparisons are complements of these.
bool nested_sides(const VertexSet& y1, const VertexSet& y2) {
  const VertexSet x1 = y1.complement();
  const VertexSet x2 = y2.complement();
  return x1.subset_of(x2) || x2.subset_of(x1) || x1.subset_of(y2) || y2.subset_of(x1);
}

}  // namespace

bool nested(const Cut& c1, const Cut& c2) {
  return nested_sides(c1.in_side(), c2.in_side());
}

bool nested(const Dicut& b1, const Dicut& b2) { return nested_sides(b1.in_shore(), b2.in_shore()); }

Dicut meet(const Digraph& d, const Dicut& b1, const Dicut& b2) {
  return Dicut(d, b1.in_shore() & b2.in_shore());
}

Dicut join(const Digraph& d, const Dicut& b1, const Dicut& b2) {
  return Dicut(d, b1.in_shore() | b2.in_shore());
}

namespace {

void decompose_into(const Digraph& d, const Dicut& b, std::vector<Dicut>& out) {
  if (b.empty()) return;
  if (b.is_dibond()) {
    out.push_back(b);
    return;
  }
  const VertexSet& y = b.in_shore();
  const Components in_comp = weak_components(d, d.all_edges(), y);
  if (in_comp.count > 1) {
    for (int k = 0; k < in_comp.count; ++k) {
      VertexSet part = d.no_vertices();
      y.for_each([&](VertexId v) {
        if (in_comp.label[v] == k) part.insert(v);
      });
      decompose_into(d, Dicut(d, part), out);
    }
    return;
  }
  const VertexSet x = b.out_shore();
  const Components out_comp = weak_components(d, d.all_edges(), x);
  for (int k = 0; k < out_comp.count; ++k) {
    VertexSet part = d.all_vertices();
    x.for_each([&](VertexId v) {
      if (out_comp.label[v] == k) part.erase(v);
    });
    decompose_into(d, Dicut(d, part), out);
  }
}

}  // namespace

std::vector<Dicut> decompose_dicut(const Digraph& d, const Dicut& b) {
  if (b.empty()) throw std::invalid_argument("cannot decompose the empty dicut");
  if (!is_weakly_connected(d)) throw PreconditionViolated("digraph is not weakly connected");
  std::vector<Dicut> out;
  decompose_into(d, b, out);
  sort_canonical(out);
  return out;
}

void sort_canonical(std::vector<Dicut>& family) { std::sort(family.begin(), family.end()); }

bool pairwise_disjoint(const std::vector<Dicut>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].edges().intersects(family[j].edges())) return false;
  return true;
}

bool pairwise_nested(const std::vector<Dicut>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!nested(family[i], family[j])) return false;
  return true;
}

EdgeSet union_of(const Digraph& d, const std::vector<Dicut>& family) {
  EdgeSet out = d.no_edges();
  for (const auto& b : family) out |= b.edges();
  return out;
}

std::string format_edges(const Digraph& d, const EdgeSet& edges) {
  std::string s = "{";
  bool first = true;
  edges.for_each([&](EdgeId e) {
    if (!first) s += ", ";
    first = false;
    s += d.edge_label(e);
  });
  return s + "}";
}

std::string format_vertices(const Digraph& d, const VertexSet& vertices) {
  std::string s = "{";
  bool first = true;
  vertices.for_each([&](VertexId v) {
    if (!first) s += ", ";
    first = false;
    s += d.name(v);
  });
  return s + "}";
}

}  // namespace dicut
