#include "dicut/families.hpp"

#include "dicut/enumerate.hpp"
#include "dicut/reduce.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace dicut {

namespace {

std::string idx(const char* base, int i) { return base + std::to_string(i); }

WindowSkeleton ladder_skeleton(int n) {
  WindowSkeleton s;
  for (int i = -n; i <= n; ++i) {
    s.vertices.push_back(idx("t", i));
    s.vertices.push_back(idx("b", i));
  }
  for (int i = -n; i < n; ++i) {
    s.edges.push_back({idx("t", i), idx("t", i + 1), {"top"}});
    s.edges.push_back({idx("b", i + 1), idx("b", i), {"bottom"}});
  }
  for (int i = -n; i <= n; ++i) s.edges.push_back({idx("t", i), idx("b", i), {"vertical"}});
  s.remainders.push_back({"left", "t_i,b_i for i<" + std::to_string(-n)});
  s.remainders.push_back({"right", "t_i,b_i for i>" + std::to_string(n)});
  s.links = {{idx("t", -n), 0}, {idx("b", -n), 0}, {idx("t", n), 1}, {idx("b", n), 1}};
  return s;
}

WindowSkeleton zigzag_skeleton(int n) {
  WindowSkeleton s;
  for (int i = 0; i <= n; ++i) s.vertices.push_back(idx("a", i));
  for (int i = 0; i <= n; ++i) s.vertices.push_back(idx("b", i));
  s.vertices.push_back("r");
  for (int i = 0; i <= n; ++i) s.edges.push_back({idx("a", i), idx("b", i), {"E1", "F_R"}});
  for (int i = 0; i < n; ++i) s.edges.push_back({idx("a", i), idx("b", i + 1), {"E2", "F_L"}});
  for (int i = 0; i <= n; ++i) {
    if (i == 0)
      s.edges.push_back({idx("b", i), "r", {"E3", "F_R"}});
    else
      s.edges.push_back({idx("b", i), "r", {"E3", "E3_minus_b0r"}});
  }
  s.remainders.push_back({"inf", "a_i,b_i for i>" + std::to_string(n)});
  s.links = {{idx("a", n), 0}, {"r", 0}};
  return s;
}

// Lowest row of column x: y >= m(x) exactly when x/2 - y <= 1.
int grid_floor(int x) {
  const int t = x - 1;
  return t >= 0 ? t / 2 : -((1 - t) / 2);
}

struct GridBand {
  int lo;
  int hi;
  int height;
};

GridBand grid_band(int n) { return {-n, n, n < 3 ? 2 : 3}; }

std::string grid_name(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

WindowSkeleton grid_skeleton(int n) {
  const GridBand band = grid_band(n);
  auto inside = [&](int x, int y) {
    return x >= band.lo && x <= band.hi && y >= grid_floor(x) && y < grid_floor(x) + band.height;
  };
  auto in_d2 = [](int x, int y) { return y >= grid_floor(x); };
  WindowSkeleton s;
  for (int x = band.lo; x <= band.hi; ++x)
    for (int y = grid_floor(x); y < grid_floor(x) + band.height; ++y) s.vertices.push_back(grid_name(x, y));
  for (int x = band.lo; x <= band.hi; ++x) {
    for (int y = grid_floor(x); y < grid_floor(x) + band.height; ++y) {
      const bool bottom = y == grid_floor(x);
      if (inside(x, y + 1)) {
        std::vector<std::string> tags{"E1"};
        if (bottom && x % 2 == 0) tags.push_back("F_d");
        s.edges.push_back({grid_name(x, y + 1), grid_name(x, y), tags});
      }
      if (inside(x - 1, y)) {
        std::vector<std::string> tags{"E2"};
        if (bottom) tags.push_back("F_s");
        s.edges.push_back({grid_name(x - 1, y), grid_name(x, y), tags});
      }
      const bool linked = (in_d2(x, y + 1) && !inside(x, y + 1)) ||
                          (in_d2(x - 1, y) && !inside(x - 1, y)) ||
                          (in_d2(x + 1, y) && !inside(x + 1, y)) ||
                          (in_d2(x, y - 1) && !inside(x, y - 1));
      if (linked) s.links.emplace_back(grid_name(x, y), 0);
    }
  }
  s.remainders.push_back({"inf", "all (x,y) of D2 outside the band"});
  return s;
}

WindowSkeleton tournament_skeleton(int n) {
  WindowSkeleton s;
  for (int i = 0; i <= n; ++i) s.vertices.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.edges.push_back({std::to_string(i), std::to_string(j), {"all"}});
  s.remainders.push_back({"inf", "k>" + std::to_string(n)});
  for (int i = 0; i <= n; ++i) s.links.emplace_back(std::to_string(i), 0);
  return s;
}

}  // namespace

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> all = {
      {"ladder",
       "double ladder: top row t_i->t_{i+1}, bottom row b_{i+1}->b_i, rungs t_i->b_i",
       {"top", "bottom", "vertical"},
       &ladder_skeleton},
      {"zigzag_d1",
       "A u B u {r}; a_i->b_i (E1), a_i->b_{i+1} (E2), b_i->r (E3)",
       {"E1", "E2", "E3", "F_L", "F_R", "E3_minus_b0r"},
       &zigzag_skeleton},
      {"grid_d2",
       "(x,y) with x/2-y<=1; (x,y+1)->(x,y) (E1), (x-1,y)->(x,y) (E2)",
       {"E1", "E2", "F_d", "F_s"},
       &grid_skeleton},
      {"transitive_tournament", "vertex set N, m->n for m<n", {"all"}, &tournament_skeleton},
  };
  return all;
}

const FamilySpec& family_spec(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown family: " + name);
}

std::optional<EdgeId> FamilyWindow::edge_by_name(const std::string& name) const {
  for (EdgeId e = 0; e < edge_names.size(); ++e)
    if (edge_names[e] == name) return e;
  return std::nullopt;
}

EdgeSet FamilyWindow::edges_by_name(const std::set<std::string>& names) const {
  EdgeSet out = digraph.no_edges();
  for (EdgeId e = 0; e < edge_names.size(); ++e)
    if (names.count(edge_names[e]) != 0) out.insert(e);
  return out;
}

std::set<std::string> FamilyWindow::names_of(const EdgeSet& edges) const {
  std::set<std::string> out;
  edges.for_each([&](EdgeId e) { out.insert(edge_names[e]); });
  return out;
}

const EdgeSet& FamilyWindow::named(const std::string& set) const {
  auto it = named_edge_sets.find(set);
  if (it == named_edge_sets.end())
    throw std::invalid_argument("family " + family + " has no edge set " + set);
  return it->second;
}

FamilyWindow window(const FamilySpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("window index must be at least 1");
  const WindowSkeleton s = spec.skeleton(n);
  const std::size_t nv = s.vertices.size();
  const std::size_t total = nv + s.remainders.size();

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nv; ++i) index.emplace(s.vertices[i], i);
  auto lookup = [&](const std::string& v) {
    auto it = index.find(v);
    if (it == index.end()) throw std::logic_error("skeleton names unknown vertex " + v);
    return it->second;
  };

  std::vector<std::size_t> rank(total, 0), parent(total);
  boost::disjoint_sets<std::size_t*, std::size_t*> uf(rank.data(), parent.data());
  for (std::size_t i = 0; i < total; ++i) uf.make_set(i);
  for (const auto& [v, r] : s.links) uf.union_set(lookup(v), nv + r);

  FamilyWindow w;
  w.family = spec.name;
  w.n = n;
  std::map<std::size_t, VertexId> class_of_root;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t root = uf.find_set(i);
    auto [it, fresh] = class_of_root.emplace(root, static_cast<VertexId>(groups.size()));
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  for (const auto& g : groups) {
    std::string name;
    std::vector<std::string> members;
    for (std::size_t i : g) {
      if (i < nv) {
        members.push_back(s.vertices[i]);
      } else {
        name += (name.empty() ? "" : "+") + s.remainders[i - nv].name;
        members.push_back(s.remainders[i - nv].description);
      }
    }
    if (name.empty()) name = members.front();
    w.digraph.add_vertex(name);
    w.class_members.push_back(std::move(members));
  }

  std::map<std::string, std::vector<EdgeId>> tagged;
  for (const auto& e : s.edges) {
    const std::string name = sym_edge_name(e.tail, e.head);
    w.window_edges.insert(name);
    for (const auto& t : e.tags) w.named_window_edges[t].insert(name);
    const VertexId a = class_of_root.at(uf.find_set(lookup(e.tail)));
    const VertexId b = class_of_root.at(uf.find_set(lookup(e.head)));
    if (a == b) {
      w.contracted_edges.insert(name);
      continue;
    }
    const EdgeId id = w.digraph.add_edge(a, b);
    w.edge_names.push_back(name);
    for (const auto& t : e.tags) tagged[t].push_back(id);
  }
  for (const auto& set : spec.edge_sets) {
    w.named_edge_sets[set] = EdgeSet::of(w.digraph.num_edges(), tagged[set]);
    w.named_window_edges[set];
  }
  return w;
}

std::vector<Dicut> finite_dibonds_in_window(const FamilyWindow& w, std::size_t cap) {
  return enumerate_dibonds(w.digraph, cap);
}

bool window_coherent(const FamilySpec& spec, int m, int n) {
  if (m > n) std::swap(m, n);
  const FamilyWindow small = window(spec, m);
  const FamilyWindow big = window(spec, n);
  if (!std::includes(big.window_edges.begin(), big.window_edges.end(), small.window_edges.begin(),
                     small.window_edges.end()))
    return false;
  for (const auto& [set, names] : small.named_window_edges) {
    std::set<std::string> restricted;
    for (const auto& e : big.named_window_edges.at(set))
      if (small.window_edges.count(e) != 0) restricted.insert(e);
    if (restricted != names) return false;
  }
  for (const auto& e : big.contracted_edges)
    if (small.window_edges.count(e) != 0 && small.contracted_edges.count(e) == 0) return false;

  const QuotientMap qm = contract_to(big.digraph, big.edges_by_name(small.window_edges));
  const Digraph& q = qm.quotient;
  if (q.num_vertices() != small.digraph.num_vertices() || q.num_edges() != small.digraph.num_edges())
    return false;
  std::vector<int> to_small(q.num_vertices(), -1), from_small(q.num_vertices(), -1);
  auto bind = [&](VertexId a, VertexId b) {
    if (to_small[a] == -1 && from_small[b] == -1) {
      to_small[a] = static_cast<int>(b);
      from_small[b] = static_cast<int>(a);
      return true;
    }
    return to_small[a] == static_cast<int>(b);
  };
  for (EdgeId qe = 0; qe < q.num_edges(); ++qe) {
    const std::string& name = big.edge_names[qm.edge_provenance[qe]];
    const auto se = small.edge_by_name(name);
    if (!se) return false;
    if (!bind(q.edge(qe).tail, small.digraph.edge(*se).tail)) return false;
    if (!bind(q.edge(qe).head, small.digraph.edge(*se).head)) return false;
  }
  return true;
}

FinitaryCheck check_finitary_dijoin(const FamilyWindow& w, const std::string& set, std::size_t cap) {
  const EdgeSet& f = w.named(set);
  FinitaryCheck out;
  for (auto& b : finite_dibonds_in_window(w, cap)) {
    if (b.edges().intersects(f)) continue;
    out.hit_all = false;
    out.missed.push_back(std::move(b));
  }
  return out;
}

ExtensionResult nested_extension_search(const FamilyWindow& w, const std::string& set,
                                        std::size_t cap, bool nested) {
  using Bits = boost::dynamic_bitset<>;
  const EdgeSet& f = w.named(set);
  const std::vector<Dicut> dibonds = finite_dibonds_in_window(w, cap);
  ExtensionResult out;

  for (const auto& name : w.named_window_edges.at(set))
    if (w.contracted_edges.count(name) != 0) out.unwitnessed.push_back(name);

  std::vector<EdgeId> vars;
  std::vector<std::size_t> cand;  // indices into dibonds
  std::vector<std::size_t> owner;  // variable of each candidate
  std::vector<std::vector<std::size_t>> domain_list;
  f.for_each([&](EdgeId e) {
    bool on_some = false;
    std::vector<std::size_t> dom;
    for (std::size_t i = 0; i < dibonds.size(); ++i) {
      if (!dibonds[i].edges().contains(e)) continue;
      on_some = true;
      if ((dibonds[i].edges() & f).size() == 1) dom.push_back(i);
    }
    if (!on_some) {
      out.unwitnessed.push_back(w.edge_names[e]);
      return;
    }
    vars.push_back(e);
    domain_list.push_back(std::move(dom));
  });
  std::sort(out.unwitnessed.begin(), out.unwitnessed.end());

  const std::size_t nvars = vars.size();
  std::vector<Bits> domain(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (std::size_t i : domain_list[v]) {
      cand.push_back(i);
      owner.push_back(v);
    }
  }
  out.candidates = cand.size();
  for (std::size_t v = 0; v < nvars; ++v) domain[v].resize(cand.size());
  for (std::size_t c = 0; c < cand.size(); ++c) domain[owner[c]].set(c);
  for (std::size_t v = 0; v < nvars; ++v)
    if (domain[v].none()) return out;

  std::vector<Bits> compat(cand.size(), Bits(cand.size()));
  for (std::size_t a = 0; a < cand.size(); ++a) {
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      const Dicut& x = dibonds[cand[a]];
      const Dicut& y = dibonds[cand[b]];
      if (x.edges().intersects(y.edges())) continue;
      if (nested && !dicut::nested(x, y)) continue;
      compat[a].set(b);
      compat[b].set(a);
    }
  }

  std::vector<std::size_t> assignment(nvars, 0);
  std::vector<char> assigned(nvars, 0);
  std::function<bool(std::vector<Bits>&, std::size_t)> search = [&](std::vector<Bits>& dom,
                                                                    std::size_t left) {
    if (left == 0) return true;
    std::size_t pick = nvars;
    for (std::size_t v = 0; v < nvars; ++v)
      if (!assigned[v] && (pick == nvars || dom[v].count() < dom[pick].count())) pick = v;
    assigned[pick] = 1;
    for (auto c = dom[pick].find_first(); c != Bits::npos; c = dom[pick].find_next(c)) {
      std::vector<Bits> next = dom;
      bool wiped = false;
      for (std::size_t v = 0; v < nvars && !wiped; ++v) {
        if (assigned[v]) continue;
        next[v] &= compat[c];
        wiped = next[v].none();
      }
      if (wiped) continue;
      assignment[pick] = c;
      if (search(next, left - 1)) return true;
    }
    assigned[pick] = 0;
    return false;
  };
  if (!search(domain, nvars)) return out;
  out.found = true;
  for (std::size_t v = 0; v < nvars; ++v)
    out.selection.emplace_back(w.edge_names[vars[v]], dibonds[cand[assignment[v]]]);
  return out;
}

std::vector<std::size_t> dibond_growth(const FamilySpec& spec, const std::string& edge, int n_max,
                                       std::size_t cap) {
  if (window(spec, n_max).window_edges.count(edge) == 0)
    throw std::invalid_argument("edge " + edge + " is not in window " + std::to_string(n_max));
  std::vector<std::size_t> counts;
  for (int n = 1; n <= n_max; ++n) {
    const FamilyWindow w = window(spec, n);
    const auto e = w.edge_by_name(edge);
    counts.push_back(e ? dibonds_containing_edge(w.digraph, *e, cap).size() : 0);
  }
  return counts;
}

std::string to_string(CompactnessStatus s) {
  switch (s) {
    case CompactnessStatus::Stable:
      return "Stable";
    case CompactnessStatus::Unstable:
      return "Unstable";
    case CompactnessStatus::NotFiniteParameter:
      return "NotFiniteParameter";
  }
  return "?";
}

CompactnessReport compactness_run(const FamilySpec& spec, int n_max,
                                  const std::optional<std::vector<std::set<std::string>>>& restriction,
                                  std::size_t cap) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  CompactnessReport rep;
  std::vector<FamilyWindow> windows;
  std::vector<DibondClass> classes;
  std::vector<std::vector<Dicut>> packings;

  for (int n = 1; n <= n_max; ++n) {
    FamilyWindow w = window(spec, n);
    DibondClass cls;
    for (auto& b : finite_dibonds_in_window(w, cap)) {
      if (restriction && std::find(restriction->begin(), restriction->end(), w.names_of(b.edges())) ==
                             restriction->end())
        continue;
      cls.members.push_back(std::move(b));
    }
    cls.is_full = !restriction;
    cls.corner_closed = cls.is_full || is_corner_closed(w.digraph, cls.members);
    std::vector<Dicut> packing = max_disjoint_dicuts(w.digraph, cls);
    rep.packing.push_back(packing.size());
    std::optional<std::size_t> nested;
    try {
      nested = nested_optimal_pair(w.digraph, cls).family.size();
    } catch (const Error&) {
    }
    rep.nested_pair_size.push_back(nested.value_or(0));
    windows.push_back(std::move(w));
    classes.push_back(std::move(cls));
    packings.push_back(std::move(packing));
  }

  int n0 = n_max;
  while (n0 > 1 && rep.packing[n0 - 2] == rep.packing[n_max - 1]) --n0;
  rep.stable_from = n0;
  if (n0 == n_max && n_max > 1) {
    rep.status = CompactnessStatus::NotFiniteParameter;
    return rep;
  }

  const FamilyWindow& w0 = windows[n0 - 1];
  std::vector<std::vector<std::string>> options;
  std::size_t combos = 1;
  for (const auto& b : packings[n0 - 1]) {
    std::set<std::string> names = w0.names_of(b.edges());
    rep.family.push_back(names);
    options.emplace_back(names.begin(), names.end());
    combos *= names.size();
    if (combos > cap) throw CapExceeded(cap);
  }
  std::vector<std::set<std::string>> survivors;
  std::vector<std::size_t> pos(options.size(), 0);
  for (std::size_t k = 0; k < combos; ++k) {
    std::set<std::string> f;
    for (std::size_t i = 0; i < options.size(); ++i) f.insert(options[i][pos[i]]);
    survivors.push_back(std::move(f));
    for (std::size_t i = options.size(); i-- > 0;) {
      if (++pos[i] < options[i].size()) break;
      pos[i] = 0;
    }
  }

  for (int n = n0; n <= n_max; ++n) {
    const FamilyWindow& w = windows[n - 1];
    std::vector<std::set<std::string>> kept;
    for (auto& f : survivors)
      if (is_dijoin(w.digraph, w.edges_by_name(f), classes[n - 1]).ok) kept.push_back(std::move(f));
    survivors = std::move(kept);
    rep.consistent_choices.push_back(survivors.size());
    if (survivors.empty()) {
      rep.status = CompactnessStatus::Unstable;
      rep.unstable_at = n;
      return rep;
    }
  }
  rep.status = CompactnessStatus::Stable;
  rep.stable_dijoin = survivors.front();
  return rep;
}

}  // namespace dicut
