#include <doctest.h>

#include "dicut/enumerate.hpp"
#include "dicut/hypergraph.hpp"
#include "dicut/oracle.hpp"
#include "fixtures.hpp"

#include <random>

using namespace dicut;
using namespace fixtures;

namespace {

Hypergraph hyper(const std::vector<std::vector<std::string>>& edges) {
  Hypergraph h;
  for (const auto& e : edges) h.add_edge_by_names(e);
  return h;
}

UndirectedGraph ugraph(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  UndirectedGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("hypergraph construction") {
  Hypergraph h;
  const auto x = h.add_vertex("x");
  const auto y = h.add_vertex("y");
  CHECK_THROWS_AS(h.add_vertex("x"), std::invalid_argument);
  CHECK(h.add_edge({y, x, y}) == 0);
  CHECK(h.edge(0) == std::vector<HyperVertex>{x, y});
  CHECK_THROWS_AS(h.add_edge({}), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge({7}), std::invalid_argument);
  CHECK(h.find_vertex("y") == y);
  CHECK_FALSE(h.find_vertex("z"));
  CHECK(h.is_simple());
  h.add_edge({x});
  CHECK_FALSE(h.is_simple());

  const auto big = hyper({{"1", "2"}, {"3", "4"}, {"2", "3"}});
  const auto sub = big.restrict_to({0, 1});
  CHECK(sub.num_edges() == 2);
  CHECK(sub.num_vertices() == 4);
}

TEST_CASE("konig property examples") {
  const auto two = hyper({{"1", "2"}, {"3", "4"}});
  const auto kp = konig_property(two);
  REQUIRE(kp);
  CHECK(kp->matching.size() == 2);
  CHECK(kp->cover.size() == 2);
  CHECK(verify_konig_pair(two, *kp).ok);

  const auto tri = hyper({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK_FALSE(konig_property(tri));

  CHECK(konig_property(Hypergraph{})->matching.empty());

  const Digraph p = path3();
  const auto hp = dibond_hypergraph(p);
  const auto pk = konig_property(hp);
  REQUIRE(pk);
  CHECK(pk->matching.size() == 2);
  const auto pair = pair_from_konig(p, DibondClass::all(p), *pk);
  CHECK(pair.dijoin == p.all_edges());
  CHECK(verify_pair(p, pair, DibondClass::all(p)).ok);

  CHECK_THROWS_AS(konig_property(tri, 1), CapExceeded);
}

TEST_CASE("verify_konig_pair rejections") {
  const auto h = hyper({{"1", "2"}, {"2", "3"}, {"4"}});
  const auto v1 = *h.find_vertex("1"), v2 = *h.find_vertex("2"), v4 = *h.find_vertex("4");
  CHECK(verify_konig_pair(h, {{0, 2}, {v2, v4}}).ok);
  CHECK(verify_konig_pair(h, {{0, 1}, {v2, v4}}).failed.find("(1)") != std::string::npos);
  CHECK(verify_konig_pair(h, {{0, 2}, {v1, v4}}).failed.find("(2)") != std::string::npos);
  CHECK(verify_konig_pair(h, {{2}, {v2, v4}}).failed.find("(3)") != std::string::npos);
  const auto h2 = hyper({{"1", "2"}, {"3"}});
  const auto w1 = *h2.find_vertex("1"), w2 = *h2.find_vertex("2"), w3 = *h2.find_vertex("3");
  CHECK(verify_konig_pair(h2, {{0, 1}, {w1, w2, w3}}).failed.find("(4)") != std::string::npos);
}

TEST_CASE("dibond hypergraph shapes") {
  const auto h2 = dibond_hypergraph(c2());
  CHECK(h2.num_vertices() == 2);
  CHECK(h2.num_edges() == 0);

  const auto hd = dibond_hypergraph(diamond());
  CHECK(hd.num_vertices() == 4);
  CHECK(hd.num_edges() == 4);
  CHECK(hd.is_simple());

  const Digraph par = make({{"x", "y"}, {"x", "y"}});
  const auto hp = dibond_hypergraph(par);
  CHECK(hp.find_vertex("x->y#0"));
  CHECK(hp.find_vertex("x->y#1"));
  CHECK(hp.num_edges() == 1);
}

TEST_CASE("menger hypergraph examples") {
  const auto path = ugraph(3, {{0, 1}, {1, 2}});
  const auto hp = menger_hypergraph(path, {0}, {2});
  REQUIRE(hp.num_edges() == 1);
  CHECK(hp.edge(0).size() == 3);

  const auto square = ugraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  const auto hs = menger_hypergraph(square, {0}, {3});
  CHECK(hs.num_edges() == 2);
  CHECK(konig_property(hs)->matching.size() == 1);

  const auto two = ugraph(4, {{0, 2}, {1, 3}, {0, 3}});
  CHECK(konig_property(menger_hypergraph(two, {0, 1}, {2, 3}))->matching.size() == 2);

  // Shared endpoint is a trivial path; inner vertices avoid A ∪ B.
  const auto shared = menger_hypergraph(ugraph(3, {{0, 1}, {1, 2}}), {0, 1}, {1, 2});
  CHECK(konig_property(shared)->matching.size() == 1);
  for (const auto& e : shared.edges()) CHECK(e.size() <= 2);
  const auto beside = menger_hypergraph(ugraph(3, {{0, 2}, {0, 1}}), {0, 1}, {1, 2});
  CHECK(konig_property(beside)->matching.size() == 2);

  CHECK_THROWS_AS(menger_hypergraph(square, {0}, {3}, 1), CapExceeded);
  CHECK(menger_hypergraph(ugraph(2, {}), {0}, {1}).num_edges() == 0);
}

TEST_CASE("fin parameter check") {
  const auto tri = fin_parameter_check(hyper({{"1", "2"}, {"2", "3"}, {"1", "3"}}));
  CHECK(tri.max_matching == 1);
  CHECK(tri.min_cover == 2);
  CHECK(tri.union_covers);
  CHECK(tri.ok);

  const auto dm = fin_parameter_check(dibond_hypergraph(diamond()));
  CHECK(dm.max_matching == 2);
  CHECK(dm.min_cover == 2);
  CHECK(dm.ok);
  CHECK(dm.maximal_matching.size() >= 1);
}

TEST_CASE("menger pairs match max-flow on random graphs") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % 9);
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
    REQUIRE(kp);
    CHECK(verify_konig_pair(h, *kp).ok);
    CHECK(static_cast<int>(kp->matching.size()) == oracle::max_disjoint_paths(n, raw, ai, bi));
  }
}

TEST_CASE("dibond hypergraphs have the konig property") {
  std::mt19937_64 rng(43);
  auto corpus = oracle::exhaustive(3, 6, 2);
  for (int i = 0; i < 150; ++i) corpus.push_back(oracle::random_weakly_connected(rng, 5, 4 + i % 6, i % 2));
  for (const auto& s : corpus) {
    const Digraph d = oracle::digraph_of(s);
    const auto h = dibond_hypergraph(d);
    const auto kp = konig_property(h);
    REQUIRE(kp);
    CHECK(verify_konig_pair(h, *kp).ok);
    CHECK(static_cast<int>(kp->matching.size()) == oracle::max_disjoint_dicuts(s));
    CHECK(fin_parameter_check(h).ok);

    const auto all = DibondClass::all(d);
    CHECK(verify_pair(d, pair_from_konig(d, all, *kp), all).ok);

    std::vector<Dicut> seed;
    for (const auto& b : all.members)
      if (rng() % 2) seed.push_back(b);
    const auto closed = corner_closure(d, DibondClass::from_members(d, seed));
    CHECK(is_corner_closed(d, closed.members));
    const auto hc = class_hypergraph(d, closed);
    const auto ck = konig_property(hc);
    REQUIRE(ck);
    CHECK(verify_konig_pair(hc, *ck).ok);
  }
}
