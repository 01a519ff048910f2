#include <doctest.h>

#include "dicut/enumerate.hpp"
#include "dicut/families.hpp"
#include "dicut/reduce.hpp"

#include <algorithm>

using namespace dicut;

namespace {

using Names = std::set<std::string>;

std::vector<Names> dibond_names(const FamilyWindow& w) {
  std::vector<Names> out;
  for (const auto& b : finite_dibonds_in_window(w)) out.push_back(w.names_of(b.edges()));
  return out;
}

bool has(const std::vector<Names>& list, const Names& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

std::string ab(char x, int i, char y, int j) {
  return std::string(1, x) + std::to_string(i) + "->" + std::string(1, y) + std::to_string(j);
}

Names star(int i) { return {ab('a', i, 'b', i), ab('a', i, 'b', i + 1)}; }

Names b_k(int k) {
  Names s{ab('a', k - 1, 'b', k)};
  for (int j = 0; j < k; ++j) s.insert("b" + std::to_string(j) + "->r");
  return s;
}

}  // namespace

TEST_CASE("window basics") {
  const auto& z = family_spec("zigzag_d1");
  CHECK_THROWS_AS(window(z, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_spec("nope"), std::invalid_argument);
  CHECK(families().size() == 4);

  // a_n and r both touch the infinite remainder, so they share its class.
  const auto w2 = window(z, 2);
  CHECK(w2.digraph.num_vertices() == 6);
  CHECK(w2.digraph.num_edges() == 8);
  CHECK(is_weakly_connected(w2.digraph));
  std::size_t members = 0;
  for (const auto& c : w2.class_members) {
    CHECK_FALSE(c.empty());
    members += c.size();
  }
  CHECK(members >= w2.digraph.num_vertices());
  CHECK(w2.named("F_L").size() == 2);
  CHECK(w2.named("F_R").size() == 4);
  CHECK_THROWS_AS(w2.named("F_d"), std::invalid_argument);
  CHECK(w2.edge_by_name("a2->b3") == std::nullopt);
  CHECK(w2.edge_by_name("b0->r").has_value());

  for (const auto& f : families())
    for (int n = 1; n <= 4; ++n) {
      const auto w = window(f, n);
      CHECK(is_weakly_connected(w.digraph));
      CHECK(w.digraph.num_vertices() >= 1);
      CHECK(w.digraph.num_edges() + w.contracted_edges.size() == w.window_edges.size());
    }
}

TEST_CASE("zigzag window dibonds") {
  const auto w = window(family_spec("zigzag_d1"), 3);
  const auto names = dibond_names(w);
  for (int i = 0; i <= 2; ++i) CHECK(has(names, star(i)));
  for (int k = 1; k <= 3; ++k) CHECK(has(names, b_k(k)));
  CHECK(names.size() == 9);

  std::vector<std::size_t> counts;
  for (int n = 1; n <= 6; ++n) counts.push_back(finite_dibonds_in_window(window(family_spec("zigzag_d1"), n)).size());
  CHECK(counts == std::vector<std::size_t>{2, 5, 9, 14, 20, 27});
}

TEST_CASE("zigzag star dibonds are nested and disjoint, F_L meets each once") {
  const auto w = window(family_spec("zigzag_d1"), 5);
  std::vector<Dicut> stars;
  for (const auto& b : finite_dibonds_in_window(w))
    for (int i = 0; i < 5; ++i)
      if (w.names_of(b.edges()) == star(i)) stars.push_back(b);
  REQUIRE(stars.size() == 5);
  CHECK(pairwise_disjoint(stars));
  CHECK(pairwise_nested(stars));
  for (const auto& s : stars) CHECK((s.edges() & w.named("F_L")).size() == 1);
}

TEST_CASE("finitary dijoin checks") {
  const auto& z = family_spec("zigzag_d1");
  for (int n = 1; n <= 8; ++n) {
    const auto w = window(z, n);
    CHECK(check_finitary_dijoin(w, "F_L").hit_all);
    CHECK(check_finitary_dijoin(w, "F_R").hit_all);
    const auto miss = check_finitary_dijoin(w, "E3_minus_b0r");
    CHECK_FALSE(miss.hit_all);
    std::vector<Names> missed;
    for (const auto& b : miss.missed) missed.push_back(w.names_of(b.edges()));
    CHECK(has(missed, Names{"b0->r", "a0->b1"}));
  }
  CHECK_THROWS_AS(check_finitary_dijoin(window(z, 2), "F_s"), std::invalid_argument);
}

TEST_CASE("nested extension search on zigzag") {
  const auto& z = family_spec("zigzag_d1");
  for (int n = 1; n <= 6; ++n) {
    const auto w = window(z, n);
    const auto left = nested_extension_search(w, "F_L");
    REQUIRE(left.found);
    CHECK(left.selection.size() == static_cast<std::size_t>(n));
    for (const auto& [edge, b] : left.selection) {
      CHECK(b.edges().contains(*w.edge_by_name(edge)));
      CHECK(w.names_of(b.edges()) == star(edge[1] - '0'));
    }
    const auto right = nested_extension_search(w, "F_R");
    CHECK_FALSE(right.found);
    // a_n->b_n sits on a cycle through the remainder class.
    CHECK(right.unwitnessed == std::vector<std::string>{ab('a', n, 'b', n)});
  }
}

TEST_CASE("grid_d2 windows") {
  const auto& g = family_spec("grid_d2");
  for (int n = 1; n <= 4; ++n) {
    const auto w = window(g, n);
    CHECK(nested_extension_search(w, "F_d").found);
    CHECK(check_finitary_dijoin(w, "F_s").hit_all);
  }
  CHECK_FALSE(nested_extension_search(window(g, 2), "F_s").found);
}

TEST_CASE("ladder windows are strongly connected") {
  const auto& l = family_spec("ladder");
  for (int n = 1; n <= 50; ++n) {
    const auto w = window(l, n);
    CHECK(condensation(w.digraph).count() == 1);
  }
  CHECK(finite_dibonds_in_window(window(l, 3)).empty());
  const auto growth = dibond_growth(l, "t0->t1", 8);
  CHECK(growth == std::vector<std::size_t>(8, 0));
}

TEST_CASE("window coherence and named set consistency") {
  for (const auto& f : families()) {
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= n; ++m) CHECK(window_coherent(f, m, n));
    for (const auto& set : f.edge_sets)
      for (int n = 2; n <= 4; ++n) {
        const auto big = window(f, n).named_window_edges.at(set);
        const auto small = window(f, n - 1);
        Names restricted;
        for (const auto& e : big)
          if (small.window_edges.count(e)) restricted.insert(e);
        CHECK(restricted == small.named_window_edges.at(set));
      }
    for (int n = 1; n < 4; ++n) {
      const auto& a = window(f, n).window_edges;
      const auto& b = window(f, n + 1).window_edges;
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST_CASE("dibond growth") {
  const auto& z = family_spec("zigzag_d1");
  const auto c = dibond_growth(z, "b0->r", 6);
  REQUIRE(c.size() == 6);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] > c[i - 1]);
  CHECK(c[0] >= 1);
  const auto late = dibond_growth(z, "a3->b3", 5);
  CHECK(late[0] == 0);
  CHECK(std::is_sorted(late.begin(), late.end()));
}

TEST_CASE("compactness runs") {
  const auto lad = compactness_run(family_spec("ladder"), 5);
  CHECK(lad.status == CompactnessStatus::Stable);
  REQUIRE(lad.stable_dijoin);
  CHECK(lad.stable_dijoin->empty());
  CHECK(lad.packing == std::vector<std::size_t>(5, 0));

  std::vector<Names> stars{star(0), star(1), star(2)};
  const auto zz = compactness_run(family_spec("zigzag_d1"), 6, stars);
  CHECK(zz.status == CompactnessStatus::Stable);
  REQUIRE(zz.stable_dijoin);
  CHECK(zz.stable_dijoin->size() == 3);
  CHECK(zz.family.size() == 3);
  CHECK(to_string(zz.status) == "Stable");

  const auto tt = compactness_run(family_spec("transitive_tournament"), 4);
  CHECK(tt.packing.size() == 4);
}
