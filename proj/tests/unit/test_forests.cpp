#include <doctest.h>

#include <algorithm>

#include "../common/fixtures.hpp"
#include "pfactor/errors.hpp"
#include "pfactor/forests.hpp"

using namespace pfactor;
using fixtures::set;

namespace {

Ideal lambda(const Poset& p, std::initializer_list<int> gens) {
  Ideal j = p.empty_set();
  for (int i : gens) j |= principal_ideal(p, i);
  return j;
}

MaxIndSet make(const Poset& p, std::vector<std::vector<int>> gens) {
  MaxIndSet m;
  for (const auto& g : gens) {
    Ideal j = p.empty_set();
    for (int i : g) j |= principal_ideal(p, i);
    m.ideals.push_back(j);
  }
  std::sort(m.ideals.begin(), m.ideals.end(), canonical_less);
  return m;
}

// Parent arrays of the three P-forests of the six-element example.
const PForest kF1({2, 5, 1, 1, 5, 4});
const PForest kF2({5, 2, 1, 1, 2, 4});
const PForest kF3({2, 2, 1, 5, 1, 4});

}  // namespace

TEST_CASE("PForest basics") {
  CHECK(kF1.is_root(5));
  CHECK(kF1.children(1) == std::vector<int>{3, 4});
  CHECK(kF1.subtree(1) == set(6, {1, 3, 4, 6}));
  CHECK(kF1.subtree(5) == set(6, {1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(PForest({2, 1}), InputError);
  CHECK_THROWS_AS(PForest({3, 1}), InputError);
  CHECK(render_forest(PForest({2, 2, 2})) == "2\n  1\n  3\n");
}

TEST_CASE("forest descents") {
  CHECK(forest_descents(kF1) == std::vector<int>{3, 4, 6});
  CHECK(forest_descents(kF2) == std::vector<int>{3, 4, 5, 6});
  CHECK(forest_descents(kF3) == std::vector<int>{3, 5, 6});
  CHECK(forest_descents(PForest({2, 3, 4, 4})).empty());
  CHECK(forest_descents(PForest({1, 1})) == std::vector<int>{2});
}

TEST_CASE("P-forest conditions") {
  const Poset p = fixtures::fig1();
  for (const auto& f : {kF1, kF2, kF3}) CHECK(is_pforest(p, f));
  std::string why;
  CHECK_FALSE(is_pforest(p, PForest({1, 2, 3, 4, 5, 6}), &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(is_pforest(fixtures::antichain(2), PForest({2, 2})));
  CHECK(is_pforest(fixtures::antichain(2), PForest({1, 2})));
}

TEST_CASE("phi and psi on the six-element example") {
  const Poset p = fixtures::fig1();
  const MaxIndSet m1 = make(p, {{3}, {4}, {6}, {1}, {2}, {2, 5}});
  const MaxIndSet m2 = make(p, {{3}, {4}, {6}, {1}, {1, 5}, {2, 5}});
  const MaxIndSet m3 = make(p, {{3}, {4}, {6}, {5}, {1, 5}, {2, 5}});
  CHECK(phi(p, kF1) == m1);
  CHECK(phi(p, kF2) == m2);
  CHECK(phi(p, kF3) == m3);
  CHECK(psi(p, m1) == kF1);
  CHECK(psi(p, m2) == kF2);
  CHECK(psi(p, m3) == kF3);
  CHECK_THROWS_AS(phi(p, PForest({1, 2, 3, 4, 5, 6})), InputError);

  const IdealGraph g = build_ideal_graph(p);
  const auto forests = enumerate_pforests(p, g, enumerate_all_component_mis(g));
  std::vector<PForest> expected{kF1, kF2, kF3};
  std::sort(expected.begin(), expected.end());
  CHECK(forests == expected);
  CHECK(oracle::pforests(p) == expected);
}

TEST_CASE("phi and psi on chains and antichains") {
  const Poset chain = fixtures::chain(4);
  const PForest path({2, 3, 4, 4});
  const MaxIndSet prefixes = phi(chain, path);
  CHECK(prefixes.ideals == std::vector<Ideal>{set(4, {1}), set(4, {1, 2}), set(4, {1, 2, 3}), set(4, {1, 2, 3, 4})});
  CHECK(psi(chain, prefixes) == path);

  const Poset anti = fixtures::antichain(3);
  const auto all = enumerate_global_mis(build_ideal_graph(anti));
  REQUIRE(all.size() == 1);
  CHECK(psi(anti, all[0]) == PForest({1, 2, 3}));
}

TEST_CASE("descent data of a maximum independent set") {
  const Poset p = fixtures::fig1();
  const MaxIndSet m1 = make(p, {{3}, {4}, {6}, {1}, {2}, {2, 5}});
  const DescentData d = mis_descents(p, m1);
  CHECK(d.element_descents == std::vector<int>{3, 4, 6});
  std::vector<Ideal> ideals{lambda(p, {3}), lambda(p, {4}), lambda(p, {6})};
  std::sort(ideals.begin(), ideals.end(), canonical_less);
  CHECK(d.ideal_descents == ideals);

  const Poset chain = fixtures::chain(3);
  CHECK(mis_descents(chain, enumerate_global_mis(build_ideal_graph(chain))[0]).element_descents.empty());
}

TEST_CASE("component descents refuse non-natural input") {
  const Poset p = fixtures::fig1();
  const IdealGraph g = build_ideal_graph(p);
  const MisCatalog cat = enumerate_all_component_mis(g);
  CHECK_THROWS_AS(component_descents(p, g, cat, 0, cat.component(0)[0]), InputError);
}

TEST_CASE("component descents of the seventeen-element example") {
  const Poset p = fixtures::fig5();
  const IdealGraph g = build_ideal_graph(p);
  const MisCatalog cat = enumerate_all_component_mis(g);
  const int c1 = g.component_of(*g.index_of(lambda(p, {4})));
  const int c2 = g.component_of(*g.index_of(lambda(p, {10})));

  const MaxIndSet a{make(p, {{4}, {4, 6}}).ideals, c1};
  const DescentData da = component_descents(p, g, cat, c1, a, true);
  CHECK(da.element_descents == std::vector<int>{6});
  CHECK(da.ideal_descents == std::vector<Ideal>{lambda(p, {4, 6})});

  const MaxIndSet b{make(p, {{10}, {10, 13}, {14}}).ideals, c2};
  const DescentData db = component_descents(p, g, cat, c2, b, false);
  CHECK(db.element_descents.empty());
  CHECK(db.ideal_descents.empty());

  const int iso = g.component_of(*g.index_of(lambda(p, {4, 5, 6})));
  CHECK(component_descents(p, g, cat, iso, cat.component(iso)[0], true).element_descents.empty());

  // Any global set containing {L6, L56} has 5 and 6 among its descents.
  const MaxIndSet c{make(p, {{6}, {5, 6}}).ideals, c1};
  for (const auto& m : enumerate_global_mis(cat, 1000)) {
    if (!m.contains(c.ideals[0]) || !m.contains(c.ideals[1])) continue;
    const auto des = mis_descents(p, m).element_descents;
    CHECK(std::binary_search(des.begin(), des.end(), 5));
    CHECK(std::binary_search(des.begin(), des.end(), 6));
  }
  CHECK_THROWS_AS(component_descents(p, g, cat, c2, a), InputError);
}

TEST_CASE("linear extensions split over the P-forests") {
  const Poset p = fixtures::fig1();
  const std::vector<PForest> forests{kF1, kF2, kF3};
  const auto rep = verify_decomposition(p, forests, 1000);
  CHECK(rep.total == 10);
  CHECK(rep.poset_extensions == 10);
  std::size_t sum = 0;
  for (auto c : rep.per_forest) sum += c;
  CHECK(sum == 10);

  const std::vector<PForest> missing{kF1, kF2};
  CHECK_THROWS_AS(verify_decomposition(p, missing, 1000), TheoremViolation);
  const std::vector<PForest> twice{kF1, kF1, kF2, kF3};
  CHECK_THROWS_AS(verify_decomposition(p, twice, 1000), TheoremViolation);
  CHECK_THROWS_AS(verify_decomposition(p, forests, 5), CapExceeded);

  const auto chain = verify_decomposition(fixtures::chain(4), std::vector<PForest>{PForest({2, 3, 4, 4})}, 10);
  CHECK(chain.total == 1);
  const auto anti = verify_decomposition(fixtures::antichain(3), std::vector<PForest>{PForest({1, 2, 3})}, 10);
  CHECK(anti.total == 6);
}

TEST_CASE("bijection and decomposition on the random corpus") {
  for (const auto& e : fixtures::corpus()) {
    INFO(fixtures::describe(e));
    const Poset& p = e.poset;
    const IdealGraph g = build_ideal_graph(p);
    const MisCatalog cat = enumerate_all_component_mis(g);
    const auto all = enumerate_global_mis(cat, 100000);
    std::vector<PForest> forests;
    for (const auto& m : all) {
      const PForest f = psi(p, m);
      REQUIRE(phi(p, f) == m);
      const LabelMap labels = label_map(p, m);
      for (int k = 0; k < m.size(); ++k) REQUIRE(f.subtree(labels.label(k)) == m.ideals[static_cast<std::size_t>(k)]);
      forests.push_back(f);
    }
    std::sort(forests.begin(), forests.end());
    REQUIRE(forests == oracle::pforests(p));
    for (const auto& f : forests) REQUIRE(psi(p, phi(p, f)) == f);
    const auto rep = verify_decomposition(p, forests, 100000);
    REQUIRE(rep.total == oracle::count_extensions(p));
  }
}

TEST_CASE("extension independence on the random corpus") {
  for (const auto& e : fixtures::corpus()) {
    INFO(fixtures::describe(e));
    const Poset& p = e.poset;
    const IdealGraph g = build_ideal_graph(p);
    const MisCatalog cat = enumerate_all_component_mis(g);
    if (cat.global_count() > 50) continue;
    for (int r = 0; r < cat.component_count(); ++r)
      for (const auto& mr : cat.component(r)) CHECK_NOTHROW(component_descents(p, g, cat, r, mr, true));
  }
}
