// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance        run all criteria
//   acceptance 6      run criterion 6 only

#include "checks.hpp"
#include "dicut/enumerate.hpp"
#include "dicut/families.hpp"
#include "dicut/hypergraph.hpp"
#include "dicut/oracle.hpp"
#include "dicut/reduce.hpp"
#include "dicut/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace dicut;

namespace {

// Pinned parameters.
constexpr std::uint64_t kCorpusSeed = 1;
constexpr int kCorpusRandom = 1000;
constexpr std::uint64_t kSeed = 20240601;
constexpr int kQuotientRounds = 500;
constexpr int kSplitRounds = 200;
constexpr int kMengerRounds = 100;
constexpr int kZigzagMax = 20;
constexpr int kZigzagThreshold = 3;
constexpr int kGridMax = 10;
constexpr int kLadderMax = 50;
constexpr double kBudgetC1Seconds = 300;
constexpr double kBudgetC6Seconds = 120;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

const std::vector<oracle::Small>& corpus() {
  static const auto c = oracle::lucchesi_younger_corpus(kCorpusSeed, kCorpusRandom);
  return c;
}

template <class Tag>
oracle::Mask mask_of(const IdSet<Tag>& s) {
  oracle::Mask m = 0;
  s.for_each([&](auto i) { m |= oracle::Mask{1} << i; });
  return m;
}

std::vector<oracle::Mask> shores_of(const std::vector<Dicut>& family) {
  std::vector<oracle::Mask> out;
  for (const auto& b : family) out.push_back(mask_of(b.in_shore()));
  return out;
}

std::string describe(const oracle::Small& s) {
  std::ostringstream o;
  o << "n=" << s.n << " edges=";
  for (auto [t, h] : s.edges) o << t << ">" << h << " ";
  return o.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome c1() {
  Outcome r;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  for (const auto& s : corpus()) {
    const Digraph d = oracle::digraph_of(s);
    const auto all = DibondClass::all(d);
    const auto f = min_dijoin(d, all).size();
    const auto k = max_disjoint_dicuts(d, all).size();
    if (f != k) r.fail("min dijoin " + std::to_string(f) + " != packing " + std::to_string(k) + " on " + describe(s));
    if (static_cast<int>(f) != oracle::min_dijoin_size(s)) r.fail("min dijoin disagrees with brute force on " + describe(s));
    if (static_cast<int>(k) != oracle::max_disjoint_dicuts(s)) r.fail("packing disagrees with brute force on " + describe(s));
    ++count;
  }
  const double secs = seconds_since(t0);
  if (secs > kBudgetC1Seconds) r.fail("runtime " + std::to_string(secs) + "s over budget");
  r.detail = std::to_string(count) + " digraphs, " + std::to_string(static_cast<int>(secs)) + "s";
  return r;
}

Outcome c2() {
  Outcome r;
  std::size_t count = 0;
  for (const auto& s : corpus()) {
    const Digraph d = oracle::digraph_of(s);
    const auto all = DibondClass::all(d);
    const auto op = optimal_pair(d, all);
    if (auto why = oracle::verify_pair(s, mask_of(op.dijoin), shores_of(op.family), false, true); !why.empty())
      r.fail("optimal_pair: " + why + " on " + describe(s));
    const auto np = nested_optimal_pair(d, all);
    if (!np.nested) r.fail("nested flag false on " + describe(s));
    if (auto why = oracle::verify_pair(s, mask_of(np.dijoin), shores_of(np.family), true, false); !why.empty())
      r.fail("nested_optimal_pair: " + why + " on " + describe(s));
    ++count;
  }
  r.detail = std::to_string(count) + " digraphs, both pairs verified";
  return r;
}

Outcome c3() {
  Outcome r;
  std::vector<oracle::Small> graphs;
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : oracle::exhaustive(n, 6, n <= 3 ? 2 : 1)) graphs.push_back(s);
  std::size_t pairs = 0;
  for (const auto& s : graphs) {
    const Digraph d = oracle::digraph_of(s);
    const auto list = enumerate_dicuts(d);
    const oracle::Mask full = s.edges.size() == 64 ? ~oracle::Mask{0} : (oracle::Mask{1} << s.edges.size()) - 1;
    for (const auto& b1 : list)
      for (const auto& b2 : list) {
        const Dicut m = meet(d, b1, b2), j = join(d, b1, b2);
        if (!m.empty() && !out_cut(d, m.in_shore()).empty()) r.fail("meet is not a dicut on " + describe(s));
        if (!j.empty() && !out_cut(d, j.in_shore()).empty()) r.fail("join is not a dicut on " + describe(s));
        const auto e1 = mask_of(b1.edges()), e2 = mask_of(b2.edges());
        const auto em = mask_of(m.edges()), ej = mask_of(j.edges());
        for (oracle::Mask f = 0; f <= full; ++f) {
          if (((e1 & f) | (e2 & f)) != ((em & f) | (ej & f))) r.fail("set identity on " + describe(s));
          if (__builtin_popcountll(e1 & f) + __builtin_popcountll(e2 & f) !=
              __builtin_popcountll(em & f) + __builtin_popcountll(ej & f))
            r.fail("cardinality identity on " + describe(s));
        }
        if (!(e1 & e2) && (em & ej)) r.fail("disjointness not propagated on " + describe(s));
        if (crossing(b1, b2) && (m.empty() || j.empty())) r.fail("crossing pair with empty corner on " + describe(s));
        ++pairs;
      }
  }
  r.detail = std::to_string(graphs.size()) + " digraphs, " + std::to_string(pairs) + " ordered dicut pairs, all F";
  return r;
}

Outcome c4() {
  Outcome r;
  std::vector<oracle::Small> graphs = oracle::exhaustive(3, 6, 2);
  for (const auto& s : oracle::exhaustive(4, 6, 1)) graphs.push_back(s);
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 300; ++i) graphs.push_back(oracle::random_weakly_connected(rng, 5, 4 + i % 7, i % 2));
  std::size_t dicuts = 0, ambiguous = 0;
  for (const auto& s : graphs) {
    const Digraph d = oracle::digraph_of(s);
    for (const auto& b : enumerate_dicuts(d)) {
      const auto parts = decompose_dicut(d, b);
      std::vector<oracle::Mask> got;
      oracle::Mask u = 0;
      for (const auto& p : parts) {
        const auto m = mask_of(p.edges());
        if (u & m) r.fail("parts overlap on " + describe(s));
        u |= m;
        got.push_back(m);
      }
      const auto want = mask_of(b.edges());
      if (u != want) r.fail("union of parts differs from the dicut on " + describe(s));
      std::sort(got.begin(), got.end());
      const auto brute = oracle::dibond_partitions(s, want);
      if (brute.size() > 1) ++ambiguous;
      if (std::find(brute.begin(), brute.end(), got) == brute.end())
        r.fail("decomposition is not a brute-force dibond partition on " + describe(s));
      ++dicuts;
    }
  }
  r.detail = std::to_string(dicuts) + " dicuts on " + std::to_string(graphs.size()) + " digraphs (" +
             std::to_string(ambiguous) + " with several dibond partitions)";
  return r;
}

Outcome c5() {
  Outcome r;
  std::mt19937_64 rng(kSeed + 5);
  for (int round = 0; round < kQuotientRounds; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto s = oracle::random_weakly_connected(rng, n, n - 1 + static_cast<int>(rng() % 8), round % 3 == 0);
    const Digraph d = oracle::digraph_of(s);
    const auto dicuts = enumerate_dicuts(d);
    if (equivalence_classes(d, dicuts).class_of != oracle::scc_labels(s))
      r.fail("classes differ from SCCs on " + describe(s));
    if (auto why = checks::quotient_statements(d, dicuts); !why.empty()) r.fail(why + " on " + describe(s));
    std::vector<Dicut> gens;
    for (const auto& b : dicuts)
      if (rng() % 2) gens.push_back(b);
    if (auto why = checks::quotient_statements(d, gens); !why.empty()) r.fail(why + " on " + describe(s));
  }
  int split = 0, tries = 0;
  while (split < kSplitRounds && tries < 100 * kSplitRounds) {
    ++tries;
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto s = oracle::random_weakly_connected(rng, n, n - 1 + static_cast<int>(rng() % 4), rng() % 2);
    const Digraph d = oracle::digraph_of(s);
    if (block_cut_tree(d).blocks.size() < 2) continue;
    const auto all = DibondClass::all(d);
    const auto merged = split_solve_merge(d, all);
    if (merged.dijoin.size() != min_dijoin(d, all).size()) r.fail("split-solve-merge size differs on " + describe(s));
    if (!verify_pair(d, merged, all).ok) r.fail("merged pair fails verification on " + describe(s));
    ++split;
  }
  if (split < kSplitRounds) r.fail("only " + std::to_string(split) + " multi-block digraphs generated");
  r.detail = std::to_string(kQuotientRounds) + " quotient digraphs, " + std::to_string(split) + " multi-block digraphs";
  return r;
}

// Smallest t such that `absent` holds for every n in [t, n_max]; n_max + 1 if none.
int absence_threshold(const std::vector<bool>& absent) {
  int t = static_cast<int>(absent.size());
  while (t >= 1 && absent[t - 1]) --t;
  return t + 1;
}

Outcome c6() {
  Outcome r;
  const auto t0 = std::chrono::steady_clock::now();
  const auto& z = family_spec("zigzag_d1");
  std::vector<bool> absent;
  for (int n = 1; n <= kZigzagMax; ++n) {
    const auto w = window(z, n);
    const std::string at = " at n=" + std::to_string(n);
    if (!check_finitary_dijoin(w, "F_L").hit_all) r.fail("F_L misses a dibond" + at);
    if (!nested_extension_search(w, "F_L").found) r.fail("F_L has no nested extension" + at);
    if (!check_finitary_dijoin(w, "F_R").hit_all) r.fail("F_R misses a dibond" + at);
    absent.push_back(!nested_extension_search(w, "F_R").found);
  }
  for (int n = kZigzagThreshold; n <= kZigzagMax; ++n)
    if (!absent[n - 1]) r.fail("F_R nested extension found at n=" + std::to_string(n));
  const int threshold = absence_threshold(absent);
  if (threshold != kZigzagThreshold)
    r.fail("F_R absence threshold is n=" + std::to_string(threshold) + ", expected n=" +
           std::to_string(kZigzagThreshold));
  const double secs = seconds_since(t0);
  if (secs > kBudgetC6Seconds) r.fail("runtime over budget");
  r.detail = "n<=" + std::to_string(kZigzagMax) + ", F_R absence threshold n=" + std::to_string(threshold);
  return r;
}

Outcome c7() {
  Outcome r;
  const auto& g = family_spec("grid_d2");
  int first_absent = 0;
  for (int n = 1; n <= kGridMax; ++n) {
    const auto w = window(g, n);
    const std::string at = " at n=" + std::to_string(n);
    if (!nested_extension_search(w, "F_d").found) r.fail("F_d has no nested extension" + at);
    if (!check_finitary_dijoin(w, "F_s").hit_all) r.fail("F_s misses a dibond" + at);
    if (!first_absent && !nested_extension_search(w, "F_s").found) first_absent = n;
  }
  if (!first_absent) r.fail("F_s nested extension found in every window");
  r.detail = "n<=" + std::to_string(kGridMax) + ", F_s nested extension first absent at n=" + std::to_string(first_absent);
  return r;
}

Outcome c8() {
  Outcome r;
  const auto& l = family_spec("ladder");
  for (int n = 1; n <= kLadderMax; ++n) {
    const auto w = window(l, n);
    if (condensation(w.digraph).count() != 1) r.fail("window not strongly connected at n=" + std::to_string(n));
    if (!finite_dibonds_in_window(w).empty()) r.fail("dibond in window at n=" + std::to_string(n));
  }
  for (const auto* e : {"t0->t1", "b1->b0", "t0->b0", "t5->b5"}) {
    const auto c = dibond_growth(l, e, kLadderMax);
    if (std::any_of(c.begin(), c.end(), [](std::size_t x) { return x != 0; }))
      r.fail(std::string("nonzero growth for ") + e);
  }
  r.detail = "n<=" + std::to_string(kLadderMax);
  return r;
}

Outcome c9() {
  Outcome r;
  std::mt19937_64 rng(kSeed + 9);
  std::size_t closures = 0;
  for (const auto& s : corpus()) {
    const Digraph d = oracle::digraph_of(s);
    const auto h = dibond_hypergraph(d);
    const auto kp = konig_property(h);
    const auto all = DibondClass::all(d);
    if (!kp) {
      r.fail("no Konig pair on " + describe(s));
      continue;
    }
    if (!verify_konig_pair(h, *kp).ok) r.fail("Konig pair fails verification on " + describe(s));
    if (kp->matching.size() != max_disjoint_dicuts(d, all).size()) r.fail("|M| differs from packing on " + describe(s));

    std::vector<Dicut> seed;
    for (const auto& b : all.members)
      if (rng() % 2) seed.push_back(b);
    try {
      const auto closed = corner_closure(d, DibondClass::from_members(d, seed));
      if (!is_corner_closed(d, closed.members)) r.fail("closure not corner-closed on " + describe(s));
      ++closures;
    } catch (const CapExceeded&) {
      r.fail("closure exceeded cap on " + describe(s));
    }
  }
  for (int round = 0; round < kMengerRounds; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % 10);
    UndirectedGraph g(n);
    std::vector<std::pair<int, int>> raw;
    for (int i = 0; i < m; ++i) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      g.add_edge(u, v);
      raw.emplace_back(u, v);
    }
    std::vector<std::uint32_t> a, b;
    std::vector<int> ai, bi;
    for (int x = 0; x < n; ++x) {
      if (rng() % 3 == 0) a.push_back(x), ai.push_back(x);
      if (rng() % 3 == 0) b.push_back(x), bi.push_back(x);
    }
    const auto h = menger_hypergraph(g, a, b);
    const auto kp = konig_property(h);
    if (!kp) {
      r.fail("no Konig pair for A-B paths in round " + std::to_string(round));
      continue;
    }
    if (static_cast<int>(kp->matching.size()) != oracle::max_disjoint_paths(n, raw, ai, bi))
      r.fail("A-B path matching differs from max-flow in round " + std::to_string(round));
  }
  r.detail = std::to_string(corpus().size()) + " dibond hypergraphs, " + std::to_string(closures) + " closures, " +
             std::to_string(kMengerRounds) + " A-B path hypergraphs";
  return r;
}

Outcome c10() {
  Outcome r;
  std::mt19937_64 rng(kSeed + 10);
  std::size_t classes = 0;
  for (const auto& s : corpus()) {
    const Digraph d = oracle::digraph_of(s);
    const auto all = DibondClass::all(d);
    std::vector<Dicut> seed;
    for (const auto& b : all.members)
      if (rng() % 2) seed.push_back(b);
    for (const auto& cls : {all, corner_closure(d, DibondClass::from_members(d, seed))}) {
      if (!is_corner_closed(d, cls.members)) continue;
      const auto fam = maximal_nested_disjoint_family(d, cls);
      if (!pairwise_disjoint(fam) || !pairwise_nested(fam)) r.fail("family not disjoint and nested on " + describe(s));
      if (!is_dijoin(d, union_of(d, fam), cls).ok) r.fail("union is not a dijoin on " + describe(s));
      if (fam.size() != max_disjoint_dicuts(d, cls).size()) r.fail("size differs from packing on " + describe(s));
      ++classes;
    }
  }
  r.detail = std::to_string(classes) + " corner-closed classes";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "usage: acceptance [1-%zu]\n", criteria.size());
    return 1;
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu: %s  %s%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                o.pass ? "" : "  first failure: ", o.first_failure.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
