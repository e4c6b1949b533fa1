#include <doctest.h>

#include <algorithm>

#include "../common/fixtures.hpp"
#include "pfactor/errors.hpp"
#include "pfactor/ideal_graph.hpp"

using namespace pfactor;
using fixtures::set;

namespace {

int vertex(const IdealGraph& g, const Ideal& j) {
  auto idx = g.index_of(j);
  REQUIRE(idx.has_value());
  return *idx;
}

Ideal lambda(const Poset& p, std::initializer_list<int> gens) {
  Ideal j = p.empty_set();
  for (int i : gens) j |= principal_ideal(p, i);
  return j;
}

}  // namespace

TEST_CASE("connected ideals of the six-element example") {
  const Poset p = fixtures::fig1();
  const auto ideals = enumerate_connected_ideals(p);
  const std::vector<Ideal> expected{
      set(6, {3}),          set(6, {6}),          set(6, {4, 6}),          set(6, {4, 5, 6}),
      set(6, {1, 3, 4, 6}), set(6, {1, 2, 3, 4, 6}), set(6, {1, 3, 4, 5, 6}), set(6, {1, 2, 3, 4, 5, 6})};
  CHECK(ideals == expected);
  CHECK(ideals == oracle::connected_ideals(p));
}

TEST_CASE("connected ideals of chains and antichains") {
  const auto chain = enumerate_connected_ideals(fixtures::chain(5));
  REQUIRE(chain.size() == 5);
  for (int k = 1; k <= 5; ++k) {
    Ideal prefix(5);
    for (int i = 1; i <= k; ++i) prefix.insert(i);
    CHECK(chain[static_cast<std::size_t>(k - 1)] == prefix);
  }
  CHECK(enumerate_connected_ideals(fixtures::antichain(3)) ==
        std::vector<Ideal>{set(3, {1}), set(3, {2}), set(3, {3})});
}

TEST_CASE("ideal cap is enforced") {
  CHECK_THROWS_AS(enumerate_connected_ideals(fixtures::fig5(), 10), CapExceeded);
  CHECK_NOTHROW(enumerate_connected_ideals(fixtures::fig1(), 8));
}

TEST_CASE("closure enumeration agrees with the subset scan") {
  for (const auto& e : fixtures::corpus()) {
    INFO(fixtures::describe(e));
    REQUIRE(enumerate_connected_ideals(e.poset) == oracle::connected_ideals(e.poset));
  }
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Poset p = random_poset(10, 0.25, s, false);
    INFO("seed " << s);
    REQUIRE(enumerate_connected_ideals(p) == oracle::connected_ideals(p));
  }
}

TEST_CASE("G_P of the six-element example") {
  const Poset p = fixtures::fig1();
  const IdealGraph g = build_ideal_graph(p);
  const int l1 = vertex(g, lambda(p, {1})), l2 = vertex(g, lambda(p, {2})), l5 = vertex(g, lambda(p, {5}));
  const int l15 = vertex(g, lambda(p, {1, 5}));
  CHECK(g.adjacent(l1, l5));
  CHECK(g.adjacent(l5, l2));
  CHECK(g.adjacent(l2, l15));
  CHECK_FALSE(g.adjacent(l1, l2));
  CHECK_FALSE(g.adjacent(l1, l15));
  CHECK_FALSE(g.adjacent(l5, l15));
  CHECK(g.edges().size() == 3);

  CHECK(g.component_count() == 5);
  int big = -1;
  for (int r = 0; r < g.component_count(); ++r)
    if (g.component(r).size() > 1) big = r;
  REQUIRE(big >= 0);
  std::vector<int> expected{l1, l2, l5, l15};
  std::sort(expected.begin(), expected.end());
  CHECK(g.component(big) == expected);
  for (const auto& j : {lambda(p, {3}), lambda(p, {4}), lambda(p, {6}), lambda(p, {2, 5})})
    CHECK(g.degree(vertex(g, j)) == 0);

  CHECK(component_jmax(g, big) == set(6, {1, 2, 3, 4, 5, 6}));
  CHECK(component_jmax(g, g.component_of(vertex(g, lambda(p, {3})))) == set(6, {3}));
  CHECK_FALSE(is_forest_with_duplications(g));
}

TEST_CASE("G_P of the seventeen-element example") {
  const Poset p = fixtures::fig5();
  const IdealGraph g = build_ideal_graph(p);
  CHECK(g.component_count() == 13);

  std::vector<std::vector<Ideal>> big;
  for (int r = 0; r < g.component_count(); ++r) {
    if (g.component(r).size() < 2) continue;
    std::vector<Ideal> members;
    for (int v : g.component(r)) members.push_back(g.vertex(v));
    big.push_back(members);
  }
  REQUIRE(big.size() == 4);

  auto sorted = [](std::vector<Ideal> v) {
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
  };
  const auto c1 = sorted({lambda(p, {4}), lambda(p, {5}), lambda(p, {6}), lambda(p, {4, 5}), lambda(p, {4, 6}),
                          lambda(p, {5, 6})});
  const auto c2 = sorted({lambda(p, {10}), lambda(p, {13}), lambda(p, {14}), lambda(p, {15}), lambda(p, {10, 13}),
                          lambda(p, {13, 15})});
  const auto c3 = sorted({lambda(p, {9}), lambda(p, {11}), lambda(p, {12}), lambda(p, {9, 11})});
  const auto c4 = sorted({lambda(p, {16}), lambda(p, {17})});
  for (const auto& want : {c1, c2, c3, c4}) CHECK(std::find(big.begin(), big.end(), want) != big.end());

  for (const auto& gens : std::vector<std::vector<int>>{{1}, {2}, {3}, {7}, {8}, {4, 5, 6}, {14, 15}, {11, 12}, {16, 17}}) {
    Ideal j = p.empty_set();
    for (int i : gens) j |= principal_ideal(p, i);
    CHECK(g.degree(vertex(g, j)) == 0);
  }
  CHECK(g.vertex_count() == 13 - 4 + 6 + 6 + 4 + 2);

  const int c1_id = g.component_of(vertex(g, lambda(p, {4})));
  CHECK(component_jmax(g, c1_id) == lambda(p, {4, 5, 6}));
}

TEST_CASE("chi subgraphs") {
  const Poset p5 = fixtures::fig5();
  const IdealGraph g5 = build_ideal_graph(p5);
  const auto chi = chi_subgraph(p5, g5, lambda(p5, {4, 5, 6}));
  CHECK(chi.generators == std::vector<int>{4, 5, 6});
  CHECK(chi.vertices.size() == 3);
  CHECK(induced_connected(g5, chi.vertices));

  const Poset p1 = fixtures::fig1();
  const IdealGraph g1 = build_ideal_graph(p1);
  const auto single = chi_subgraph(p1, g1, lambda(p1, {2}));
  CHECK(single.generators == std::vector<int>{2});
  CHECK(single.vertices == std::vector<int>{g1.principal_vertex(2)});

  const auto pair = chi_subgraph(p1, g1, lambda(p1, {1, 5}));
  CHECK(pair.generators == std::vector<int>{1, 5});
  CHECK(g1.adjacent(pair.vertices[0], pair.vertices[1]));

  CHECK_THROWS_AS(chi_subgraph(p1, g1, set(6, {3, 6})), InputError);
}

TEST_CASE("chains have only isolated vertices") {
  const IdealGraph g = build_ideal_graph(fixtures::chain(6));
  CHECK(g.component_count() == 6);
  CHECK(g.edges().empty());
  CHECK(is_forest_with_duplications(g));
}

TEST_CASE("forests with duplications") {
  // A naturally labelled rooted forest: every pair of principal ideals is nested or disjoint.
  const Poset forest = build_poset(5, {{1, 3}, {2, 3}, {4, 5}});
  const IdealGraph gf = build_ideal_graph(forest);
  CHECK(is_forest_with_duplications(gf));
  for (int v = 0; v < gf.vertex_count(); ++v) CHECK(gf.degree(v) == 0);
  CHECK(is_forest_with_duplications(build_ideal_graph(build_poset(3, {{1, 2}}))));
  // Two elements sharing two lower covers: the principal ideals overlap.
  CHECK(is_forest_with_duplications(build_ideal_graph(build_poset(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}))));
}

TEST_CASE("H_P components") {
  const Poset p = fixtures::fig1();
  const IdealGraph g = build_ideal_graph(p);
  CHECK(g.principal_component_of(1) == g.principal_component_of(5));
  CHECK(g.principal_component_of(1) == g.principal_component_of(2));
  CHECK(g.principal_component_of(3) != g.principal_component_of(1));
  CHECK(g.principal_component_count() == 4);
}

TEST_CASE("IdealGraph rejects the empty ideal and missing principal ideals") {
  const Poset p = fixtures::chain(2);
  CHECK_THROWS_AS(IdealGraph(p, {set(2, {}), set(2, {1}), set(2, {1, 2})}), InputError);
  CHECK_THROWS_AS(IdealGraph(p, {set(2, {1})}), InputError);
}

TEST_CASE("structural properties on the random corpus") {
  for (const auto& e : fixtures::corpus()) {
    INFO(fixtures::describe(e));
    const Poset& p = e.poset;
    const IdealGraph g = build_ideal_graph(p);
    std::vector<int> home(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto chi = chi_subgraph(p, g, g.vertex(v));
      REQUIRE(induced_connected(g, chi.vertices));
      home[static_cast<std::size_t>(v)] = g.principal_component_of(chi.generators.front());
    }
    // Vertices whose chi subgraphs sit in different H_P components are never adjacent.
    for (const auto& [a, b] : g.edges()) REQUIRE(home[static_cast<std::size_t>(a)] == home[static_cast<std::size_t>(b)]);

    for (int r = 0; r < g.component_count(); ++r) {
      const auto& comp = g.component(r);
      // Absorption.
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.component_of(v) == r) continue;
        const Ideal& j = g.vertex(v);
        const bool touches = std::any_of(comp.begin(), comp.end(), [&](int a) { return g.vertex(a).is_proper_subset_of(j); });
        if (touches)
          for (int b : comp) REQUIRE(g.vertex(b).is_proper_subset_of(j));
      }
      if (comp.size() < 2) continue;
      const Ideal jmax = component_jmax(g, r);
      REQUIRE(is_connected_ideal(p, jmax));
      for (int v = 0; v < g.vertex_count(); ++v) {
        const auto chi = chi_subgraph(p, g, g.vertex(v));
        const bool inside = std::all_of(chi.vertices.begin(), chi.vertices.end(), [&](int w) { return g.component_of(w) == r; });
        if (inside && g.vertex(v) != jmax) REQUIRE(g.component_of(v) == r);
      }
    }
  }
}
