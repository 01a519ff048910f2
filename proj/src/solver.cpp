#include "dicut/solver.hpp"

#include "dicut/enumerate.hpp"
#include "packing.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace dicut {

namespace {

std::vector<detail::Bits> member_bits(const std::vector<Dicut>& members) {
  std::vector<detail::Bits> out;
  out.reserve(members.size());
  for (const auto& b : members) out.push_back(b.edges().bits());
  return out;
}

void dedup_sorted(std::vector<Dicut>& v) {
  sort_canonical(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool full_class_equals(const Digraph& d, const std::vector<Dicut>& members, std::size_t cap) {
  if (!is_weakly_connected(d)) return false;
  return enumerate_dibonds(d, cap) == members;
}

}  // namespace

DibondClass DibondClass::all(const Digraph& d, std::size_t cap) {
  DibondClass c;
  c.members = enumerate_dibonds(d, cap);
  c.corner_closed = true;
  c.is_full = true;
  return c;
}

DibondClass DibondClass::from_members(const Digraph& d, std::vector<Dicut> members,
                                      std::size_t cap) {
  for (const auto& b : members) {
    if (b.in_shore().universe() != d.num_vertices())
      throw std::invalid_argument("class member belongs to another digraph");
    if (!b.is_dibond())
      throw std::invalid_argument("class member is not a dibond: " + format_edges(d, b.edges()));
  }
  DibondClass c;
  c.members = std::move(members);
  dedup_sorted(c.members);
  c.is_full = full_class_equals(d, c.members, cap);
  c.corner_closed = c.is_full || is_corner_closed(d, c.members);
  return c;
}

bool DibondClass::contains(const Dicut& b) const {
  return std::binary_search(members.begin(), members.end(), b);
}

DijoinCheck is_dijoin(const Digraph& d, const EdgeSet& f, const DibondClass& cls) {
  (void)d;
  for (const auto& b : cls.members)
    if (!b.edges().intersects(f)) return {false, b};
  return {true, std::nullopt};
}

std::vector<Dicut> missed_members(const Digraph& d, const EdgeSet& f, const DibondClass& cls) {
  (void)d;
  std::vector<Dicut> out;
  for (const auto& b : cls.members)
    if (!b.edges().intersects(f)) out.push_back(b);
  return out;
}

bool is_full_dijoin(const Digraph& d, const EdgeSet& f) {
  if (d.num_vertices() == 0) return true;
  // Reversing copies of the F-edges must make D strongly connected.
  auto sweep = [&](bool forward) {
    VertexSet seen = d.no_vertices();
    seen.insert(0);
    std::vector<VertexId> stack{0};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      auto visit = [&](VertexId u) {
        if (!seen.contains(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
      };
      for (EdgeId e : d.out_edges(v))
        if (forward || f.contains(e)) visit(d.edge(e).head);
      for (EdgeId e : d.in_edges(v))
        if (!forward || f.contains(e)) visit(d.edge(e).tail);
    }
    return seen.is_full();
  };
  return sweep(true) && sweep(false);
}

std::optional<std::vector<Dicut>> sum_decomposition(const DibondClass& cls, const Dicut& b) {
  std::vector<const Dicut*> parts;
  for (const auto& m : cls.members)
    if (m.edges().subset_of(b.edges())) parts.push_back(&m);
  std::vector<Dicut> chosen;
  std::function<bool(const EdgeSet&)> cover = [&](const EdgeSet& remaining) {
    if (remaining.empty()) return true;
    const auto e = static_cast<EdgeId>(remaining.first());
    for (const Dicut* m : parts) {
      if (!m->edges().contains(e) || !m->edges().subset_of(remaining)) continue;
      chosen.push_back(*m);
      if (cover(remaining - m->edges())) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!cover(b.edges())) return std::nullopt;
  sort_canonical(chosen);
  return chosen;
}

bool in_sum_closure(const DibondClass& cls, const Dicut& b) {
  return sum_decomposition(cls, b).has_value();
}

bool is_corner_closed(const Digraph& d, const std::vector<Dicut>& members) {
  DibondClass c;
  c.members = members;
  dedup_sorted(c.members);
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    for (std::size_t j = i + 1; j < c.members.size(); ++j) {
      if (!in_sum_closure(c, meet(d, c.members[i], c.members[j]))) return false;
      if (!in_sum_closure(c, join(d, c.members[i], c.members[j]))) return false;
    }
  }
  return true;
}

EdgeSet min_dijoin(const Digraph& d, const DibondClass& cls) {
  return EdgeSet(detail::min_hitting_set(d.num_edges(), member_bits(cls.members)));
}

std::vector<Dicut> max_disjoint_dicuts(const Digraph& d, const DibondClass& cls) {
  detail::PackingProblem p;
  p.num_elements = d.num_edges();
  p.members = member_bits(cls.members);
  std::vector<Dicut> out;
  for (std::size_t i : detail::max_packing(p)) out.push_back(cls.members[i]);
  return out;
}

OptimalPair optimal_pair(const Digraph& d, const DibondClass& cls) {
  OptimalPair pair;
  pair.dijoin = min_dijoin(d, cls);
  pair.family = max_disjoint_dicuts(d, cls);
  pair.class_tag = cls.tag();
  pair.nested = pairwise_nested(pair.family);
  if (pair.dijoin.size() != pair.family.size())
    throw DualityGapDetected(pair.dijoin.size(), pair.family.size());
  return pair;
}

PairVerdict verify_pair(const Digraph& d, const OptimalPair& pair, const DibondClass& cls) {
  auto fail = [](std::string what) { return PairVerdict{false, std::move(what)}; };
  if (pair.dijoin.universe() != d.num_edges()) return fail("dijoin has the wrong universe");
  if (!is_dijoin(d, pair.dijoin, cls).ok) return fail("(i) F misses a class member");
  if (cls.is_full && !is_full_dijoin(d, pair.dijoin)) return fail("(i) F misses a dicut");
  for (const auto& b : pair.family) {
    if (b.in_shore().universe() != d.num_vertices()) return fail("(ii) member of another digraph");
    if (b.empty()) return fail("(ii) empty member");
    if (!out_cut(d, b.in_shore()).empty() || in_cut(d, b.in_shore()) != b.edges())
      return fail("(ii) member is not a dicut");
    if (!cls.is_full && !cls.contains(b)) return fail("(ii) member is not in the class");
  }
  if (!pairwise_disjoint(pair.family)) return fail("(ii) members are not disjoint");
  if (!pair.dijoin.subset_of(union_of(d, pair.family))) return fail("(iii) F is not covered");
  for (const auto& b : pair.family)
    if ((b.edges() & pair.dijoin).size() != 1) return fail("(iv) |F & B| != 1");
  if (pair.nested && !pairwise_nested(pair.family)) return fail("nested flag but crossing members");
  return {};
}

std::vector<Dicut> uncross(const Digraph& d, const EdgeSet& f, std::vector<Dicut> family,
                           bool refine_to_dibonds, const DibondClass* ambient) {
  if (!pairwise_disjoint(family)) throw PreconditionViolated("family is not pairwise disjoint");
  for (const auto& b : family)
    if ((b.edges() & f).size() != 1)
      throw PreconditionViolated("|F & B| != 1 for B = " + format_edges(d, b.edges()));
  if (ambient == nullptr ? !is_full_dijoin(d, f) : !is_dijoin(d, f, *ambient).ok)
    throw PreconditionViolated("F is not a dijoin");

  auto measure = [&] {
    std::size_t sum = 0;
    std::size_t squares = 0;
    for (const auto& b : family) {
      sum += b.in_shore().size();
      squares += b.in_shore().size() * b.in_shore().size();
    }
    return std::pair{sum, squares};
  };

  for (;;) {
    auto first_crossing = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
          if (crossing(family[a], family[b])) return std::pair{a, b};
      return std::nullopt;
    };
    const auto hit = first_crossing();
    if (!hit) break;
    const auto [i, j] = *hit;
    const auto before = measure();
    Dicut m = meet(d, family[i], family[j]);
    Dicut n = join(d, family[i], family[j]);
    if (m.empty() || n.empty()) throw VerificationFailed("crossing pair with an empty corner");
    if ((m.edges() & f).size() != 1 || (n.edges() & f).size() != 1)
      throw PreconditionViolated("a corner does not carry exactly one F-edge");
    family[i] = std::move(m);
    family[j] = std::move(n);
    const auto after = measure();
    if (after.first != before.first || after.second <= before.second)
      throw VerificationFailed("uncrossing measure did not increase");
  }

  if (refine_to_dibonds) {
    for (auto& b : family) {
      if (b.is_dibond() && (ambient == nullptr || ambient->contains(b))) continue;
      std::vector<Dicut> parts;
      if (ambient == nullptr) {
        parts = decompose_dicut(d, b);
      } else if (auto dec = sum_decomposition(*ambient, b)) {
        parts = std::move(*dec);
      } else {
        throw PreconditionViolated("member is not a disjoint union of class members");
      }
      for (auto& p : parts)
        if (p.edges().intersects(f)) {
          b = std::move(p);
          break;
        }
    }
    if (!pairwise_nested(family)) throw VerificationFailed("refined family is not nested");
  }
  return family;
}

OptimalPair nested_optimal_pair(const Digraph& d, const DibondClass& cls) {
  OptimalPair pair = optimal_pair(d, cls);
  if (cls.is_full)
    pair.family = uncross(d, pair.dijoin, std::move(pair.family));
  else
    pair.family = uncross(d, pair.dijoin, std::move(pair.family), true, &cls);
  pair.nested = true;
  const PairVerdict v = verify_pair(d, pair, cls);
  if (!v.ok) throw VerificationFailed(v.failed);
  return pair;
}

DibondClass corner_closure(const Digraph& d, const DibondClass& seed, std::size_t cap) {
  std::vector<Dicut> members = seed.members;
  dedup_sorted(members);
  if (members.size() > cap) throw CapExceeded(cap);
  std::unordered_set<VertexSet> present;
  for (const auto& b : members) present.insert(b.in_shore());
  auto add_parts = [&](const Dicut& corner) {
    if (corner.empty()) return;
    for (auto& p : decompose_dicut(d, corner)) {
      if (present.count(p.in_shore()) != 0) continue;
      if (members.size() >= cap) throw CapExceeded(cap);
      present.insert(p.in_shore());
      members.push_back(std::move(p));
    }
  };
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Dicut a = members[i];
      const Dicut b = members[j];
      add_parts(meet(d, a, b));
      add_parts(join(d, a, b));
    }
  }
  DibondClass out;
  out.members = std::move(members);
  sort_canonical(out.members);
  out.corner_closed = true;
  out.is_full = seed.is_full || full_class_equals(d, out.members, kDefaultCap);
  return out;
}

std::vector<Dicut> maximal_nested_disjoint_family(const Digraph& d, const DibondClass& cls) {
  if (!cls.is_full && !is_corner_closed(d, cls.members))
    throw NotCornerClosed("class is not finitely corner-closed");
  detail::PackingProblem p;
  p.num_elements = d.num_edges();
  p.members = member_bits(cls.members);
  const std::size_t m = cls.members.size();
  p.extra_conflict.assign(m, detail::Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (crossing(cls.members[i], cls.members[j])) {
        p.extra_conflict[i].set(j);
        p.extra_conflict[j].set(i);
      }
  std::vector<Dicut> out;
  for (std::size_t i : detail::max_packing(p)) out.push_back(cls.members[i]);
  if (!is_dijoin(d, union_of(d, out), cls).ok)
    throw VerificationFailed("union of the nested family is not a dijoin");
  return out;
}

}  // namespace dicut
