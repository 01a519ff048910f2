#include "dicut/oracle.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace dicut::oracle {

Small small_of(const Digraph& d) {
  if (d.num_vertices() > 20 || d.num_edges() > 64)
    throw std::invalid_argument("oracle digraphs have at most 20 vertices and 64 edges");
  Small s;
  s.n = static_cast<int>(d.num_vertices());
  for (const Edge& e : d.edges()) s.edges.emplace_back(e.tail, e.head);
  return s;
}

Digraph digraph_of(const Small& s) {
  Digraph d(static_cast<std::size_t>(s.n));
  for (auto [t, h] : s.edges) d.add_edge(static_cast<VertexId>(t), static_cast<VertexId>(h));
  return d;
}

bool weakly_connected(const Small& s) {
  if (s.n == 0) return true;
  Mask seen = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [t, h] : s.edges) {
      const bool in_t = seen >> t & 1, in_h = seen >> h & 1;
      if (in_t != in_h) {
        seen |= Mask{1} << t | Mask{1} << h;
        grew = true;
      }
    }
  }
  return seen == (Mask{1} << s.n) - 1;
}

std::vector<Shore> dicuts(const Small& s) {
  std::vector<Shore> out;
  const Mask full = (Mask{1} << s.n) - 1;
  for (Mask y = 1; y < full; ++y) {
    Mask entering = 0;
    bool leaves = false;
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      const bool t = y >> s.edges[i].first & 1, h = y >> s.edges[i].second & 1;
      if (t && !h) leaves = true;
      if (h && !t) entering |= Mask{1} << i;
    }
    if (!leaves) out.push_back({y, entering});
  }
  return out;
}

std::vector<Mask> dicut_edge_sets(const Small& s) {
  std::vector<Mask> out;
  for (const auto& c : dicuts(s))
    if (c.edges) out.push_back(c.edges);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> dibond_edge_sets(const Small& s) {
  const auto all = dicut_edge_sets(s);
  std::vector<Mask> out;
  for (Mask b : all) {
    const bool minimal = std::none_of(all.begin(), all.end(), [&](Mask c) {
      return c != b && (c & b) == c;
    });
    if (minimal) out.push_back(b);
  }
  return out;
}

bool is_dijoin(const Small& s, Mask f) {
  for (Mask b : dicut_edge_sets(s))
    if (!(b & f)) return false;
  return true;
}

int min_dijoin_size(const Small& s) {
  if (s.edges.size() > 24) throw std::invalid_argument("too many edges for the oracle");
  const auto sets = dicut_edge_sets(s);
  int best = static_cast<int>(s.edges.size());
  const Mask limit = Mask{1} << s.edges.size();
  for (Mask f = 0; f < limit; ++f) {
    const int k = std::popcount(f);
    if (k >= best) continue;
    if (std::all_of(sets.begin(), sets.end(), [&](Mask b) { return (b & f) != 0; })) best = k;
  }
  return best;
}

int max_disjoint_dicuts(const Small& s) {
  const auto sets = dicut_edge_sets(s);
  std::unordered_map<Mask, int> memo;
  // Either the lowest available edge is in no chosen dicut, or the chosen
  // dicut holding it is picked now.
  std::function<int(Mask)> best = [&](Mask avail) -> int {
    if (!avail) return 0;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    const Mask low = avail & (~avail + 1);
    int r = best(avail & ~low);
    for (Mask b : sets)
      if ((b & low) && (b & avail) == b) r = std::max(r, 1 + best(avail & ~b));
    memo[avail] = r;
    return r;
  };
  const Mask all = s.edges.size() == 64 ? ~Mask{0} : (Mask{1} << s.edges.size()) - 1;
  return best(all);
}

std::vector<std::vector<Mask>> dibond_partitions(const Small& s, Mask b) {
  const auto bonds = dibond_edge_sets(s);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> parts;
  std::function<void(Mask)> go = [&](Mask rem) {
    if (!rem) {
      auto sorted = parts;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    const Mask low = rem & (~rem + 1);
    for (Mask c : bonds) {
      if (!(c & low) || (c & rem) != c) continue;
      parts.push_back(c);
      go(rem & ~c);
      parts.pop_back();
    }
  };
  go(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> scc_labels(const Small& s) {
  std::vector<Mask> reach(s.n);
  for (int v = 0; v < s.n; ++v) {
    reach[v] = Mask{1} << v;
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [t, h] : s.edges)
        if ((reach[v] >> t & 1) && !(reach[v] >> h & 1)) {
          reach[v] |= Mask{1} << h;
          grew = true;
        }
    }
  }
  std::vector<int> label(s.n, -1);
  int next = 0;
  for (int v = 0; v < s.n; ++v) {
    if (label[v] != -1) continue;
    label[v] = next;
    for (int w = v + 1; w < s.n; ++w)
      if ((reach[v] >> w & 1) && (reach[w] >> v & 1)) label[w] = next;
    ++next;
  }
  return label;
}

bool nested_shores(const Small& s, Mask y1, Mask y2) {
  const Mask full = (Mask{1} << s.n) - 1;
  const Mask sides1[] = {y1, full & ~y1};
  const Mask sides2[] = {y2, full & ~y2};
  for (Mask p : sides1)
    for (Mask q : sides2)
      if ((p & q) == p || (p & q) == q) return true;
  return false;
}

std::string verify_pair(const Small& s, Mask f, const std::vector<Mask>& shores, bool nested,
                        bool dibonds_only) {
  if (!is_dijoin(s, f)) return "(i) F is not a dijoin";
  const auto all = dicuts(s);
  const auto bonds = dibond_edge_sets(s);
  std::vector<Mask> members;
  for (Mask y : shores) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Shore& c) { return c.shore == y; });
    if (it == all.end() || !it->edges) return "(ii) member is not a nonempty dicut";
    if (dibonds_only && !std::binary_search(bonds.begin(), bonds.end(), it->edges))
      return "(ii) member is not a dibond";
    members.push_back(it->edges);
  }
  Mask used = 0;
  for (Mask b : members) {
    if (b & used) return "(ii) members intersect";
    used |= b;
  }
  if ((f & used) != f) return "(iii) F leaves the union";
  for (Mask b : members)
    if (std::popcount(f & b) != 1) return "(iv) |F & B| != 1";
  if (nested)
    for (std::size_t i = 0; i < shores.size(); ++i)
      for (std::size_t j = i + 1; j < shores.size(); ++j)
        if (!nested_shores(s, shores[i], shores[j])) return "nested flag set on crossing members";
  return {};
}

int max_disjoint_paths(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<int>& a, const std::vector<int>& b) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  // v_in = 2v, v_out = 2v + 1, then source and sink.
  Graph g(2 * n + 2);
  const int source = 2 * n, sink = 2 * n + 1;
  auto cap = get(boost::edge_capacity, g);
  auto rev = get(boost::edge_reverse, g);
  auto arc = [&](int u, int v, long c) {
    auto e = add_edge(u, v, g).first;
    auto r = add_edge(v, u, g).first;
    cap[e] = c;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
  };
  for (int v = 0; v < n; ++v) arc(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    arc(2 * u + 1, 2 * v, 1);
    arc(2 * v + 1, 2 * u, 1);
  }
  for (int v : a) arc(source, 2 * v, 1);
  for (int v : b) arc(2 * v + 1, sink, 1);
  return static_cast<int>(boost::edmonds_karp_max_flow(g, source, sink));
}

std::vector<Small> exhaustive(int n, int max_edges, int max_mult, bool connected_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t < n; ++t)
    for (int h = 0; h < n; ++h)
      if (t != h) pairs.emplace_back(t, h);
  std::vector<Small> out;
  std::vector<int> mult(pairs.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int used) {
    if (i == pairs.size()) {
      Small s;
      s.n = n;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        for (int c = 0; c < mult[k]; ++c) s.edges.push_back(pairs[k]);
      if (!connected_only || weakly_connected(s)) out.push_back(std::move(s));
      return;
    }
    for (int c = 0; c <= max_mult && used + c <= max_edges; ++c) {
      mult[i] = c;
      go(i + 1, used + c);
    }
    mult[i] = 0;
  };
  go(0, 0);
  return out;
}

Small random_weakly_connected(std::mt19937_64& rng, int n, int m, bool parallel) {
  Small s;
  s.n = n;
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  for (int v = 1; v < n; ++v) {
    const int u = pick(v - 1);
    if (pick(1)) s.edges.emplace_back(u, v);
    else s.edges.emplace_back(v, u);
  }
  const int max_simple = n * (n - 1);
  int attempts = 0;
  while (static_cast<int>(s.edges.size()) < m && attempts++ < 1000) {
    const int t = pick(n - 1), h = pick(n - 1);
    if (t == h) continue;
    const std::pair<int, int> e{t, h};
    if (!parallel) {
      if (static_cast<int>(s.edges.size()) >= max_simple) break;
      if (std::find(s.edges.begin(), s.edges.end(), e) != s.edges.end()) continue;
    }
    s.edges.push_back(e);
  }
  return s;
}

std::vector<Small> lucchesi_younger_corpus(std::uint64_t seed, int random_count) {
  auto out = exhaustive(3, 6, 2);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, 14)(rng);
    const bool parallel = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
    out.push_back(random_weakly_connected(rng, n, m, parallel));
  }
  return out;
}

}  // namespace dicut::oracle
