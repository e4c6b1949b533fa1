// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../common/fixtures.hpp"
#include "pfactor/errors.hpp"
#include "pfactor/forests.hpp"
#include "pfactor/genfun.hpp"
#include "pfactor/oracle.hpp"

using namespace pfactor;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Ideal lambda(const Poset& p, const std::vector<int>& gens) {
  Ideal j = p.empty_set();
  for (int i : gens) j |= principal_ideal(p, i);
  return j;
}

std::vector<Ideal> lambdas(const Poset& p, const std::vector<std::vector<int>>& gens) {
  std::vector<Ideal> out;
  for (const auto& g : gens) out.push_back(lambda(p, g));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

MaxIndSet make(const Poset& p, const std::vector<std::vector<int>>& gens, int component = -1) {
  return MaxIndSet{lambdas(p, gens), component};
}

std::string ideal_list(const std::vector<Ideal>& ideals) {
  std::string out;
  for (const auto& j : ideals) out += (out.empty() ? "" : " ") + j.to_string();
  return "[" + out + "]";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string status = "PASS", details;
  try {
    details = body();
  } catch (const Failure& f) {
    status = "FAIL";
    details = f.what;
  } catch (const std::exception& e) {
    status = "FAIL";
    details = std::string("exception: ") + e.what();
  }
  if (status == "FAIL") ++failures;
  std::printf("%s %d %s (%.2f s): %s\n", status.c_str(), id, title.c_str(), seconds_since(t0), details.c_str());
  std::fflush(stdout);
}

std::string headline_count() {
  const Poset p = fixtures::fig5();
  const auto t0 = std::chrono::steady_clock::now();
  const BigInt count = count_linear_extensions(p);
  const double fast = seconds_since(t0);
  expect(count == BigInt(2851200), "count = " + count.str());
  expect(fast < 10.0, "count took " + std::to_string(fast) + " s");
  const auto t1 = std::chrono::steady_clock::now();
  const std::size_t brute = oracle::count_extensions(p, 10'000'000);
  expect(brute == 2851200, "enumeration finds " + std::to_string(brute));
  std::ostringstream os;
  os << "count 2851200 in " << fast << " s; enumeration agrees in " << seconds_since(t1) << " s";
  return os.str();
}

std::string six_element_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const Poset p = fixtures::fig1();
  const auto set = [](std::initializer_list<int> e) { return fixtures::set(6, e); };
  const std::vector<Ideal> listing{set({3}),          set({6}),
                                   set({4, 6}),       set({4, 5, 6}),
                                   set({1, 3, 4, 6}), set({1, 2, 3, 4, 6}),
                                   set({1, 3, 4, 5, 6}), set({1, 2, 3, 4, 5, 6})};
  const IdealGraph g = build_ideal_graph(p);
  expect(g.vertices() == listing, "connected ideals differ from the listing");
  expect(oracle::connected_ideals(p) == listing, "subset scan differs from the listing");

  const auto all = enumerate_global_mis(g);
  expect(all.size() == 3, std::to_string(all.size()) + " global MIS");
  expect(oracle::global_mis(g.vertices()).size() == 3, "subset scan disagrees on the MIS count");

  const std::vector<MaxIndSet> m{make(p, {{3}, {4}, {6}, {1}, {2}, {2, 5}}),
                                 make(p, {{3}, {4}, {6}, {1}, {1, 5}, {2, 5}}),
                                 make(p, {{3}, {4}, {6}, {5}, {1, 5}, {2, 5}})};
  const std::vector<PForest> f{PForest({2, 5, 1, 1, 5, 4}), PForest({5, 2, 1, 1, 2, 4}), PForest({2, 2, 1, 5, 1, 4})};
  for (const auto& mi : m) expect(std::find(all.begin(), all.end(), mi) != all.end(), "missing M^i");

  const auto forests = enumerate_pforests(p, g, enumerate_all_component_mis(g));
  expect(forests.size() == 3, std::to_string(forests.size()) + " P-forests");
  expect(oracle::pforests(p).size() == 3, "oracle disagrees on the forest count");
  for (std::size_t i = 0; i < 3; ++i) {
    expect(std::find(forests.begin(), forests.end(), f[i]) != forests.end(), "missing F_" + std::to_string(i + 1));
    expect(phi(p, f[i]) == m[i], "phi(F_" + std::to_string(i + 1) + ") != M^" + std::to_string(i + 1));
    expect(psi(p, m[i]) == f[i], "psi(M^" + std::to_string(i + 1) + ") != F_" + std::to_string(i + 1));
  }
  const BigInt count = count_linear_extensions(p);
  expect(count == 10, "count = " + count.str());
  expect(oracle::count_extensions(p) == 10, "enumeration disagrees");
  const double t = seconds_since(t0);
  expect(t < 1.0, "took " + std::to_string(t) + " s");
  return "8 ideals, 3 MIS, 3 forests, phi/psi match, count 10";
}

struct TableRow {
  std::vector<std::vector<int>> mis;
  std::vector<int> des;
  std::vector<std::vector<int>> ideal_des;
};

std::string descent_tables() {
  const Poset p = fixtures::fig5();
  expect(is_naturally_labeled(p), "fixture is not naturally labelled");
  const IdealGraph g = build_ideal_graph(p);
  const MisCatalog cat = enumerate_all_component_mis(g);

  const std::vector<std::pair<int, std::vector<TableRow>>> tables{
      {4,
       {{{{4}, {4, 5}}, {}, {}},
        {{{4}, {4, 6}}, {6}, {{4, 6}}},
        {{{5}, {4, 5}}, {5}, {{5}}},
        {{{5}, {5, 6}}, {6}, {{5, 6}}},
        {{{6}, {4, 6}}, {6}, {{6}}},
        {{{6}, {5, 6}}, {5, 6}, {{6}, {5, 6}}}}},
      {10,
       {{{{10}, {15}, {13, 15}}, {15}, {{15}}},
        {{{10}, {10, 13}, {14}}, {}, {}},
        {{{10}, {10, 13}, {13, 15}}, {15}, {{13, 15}}},
        {{{13}, {10, 13}, {14}}, {13}, {{13}}},
        {{{13}, {10, 13}, {13, 15}}, {13, 15}, {{13}, {13, 15}}}}},
      {9,
       {{{{11}, {9, 11}}, {11}, {{11}}},
        {{{9}, {9, 11}}, {}, {}},
        {{{9}, {12}}, {12}, {{12}}}}},
      {16, {{{{16}}, {}, {}}, {{{17}}, {17}, {{17}}}}},
  };

  int rows = 0;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& [anchor, table] = tables[t];
    const std::string name = "C" + std::to_string(t + 1);
    const int r = g.component_of(*g.index_of(lambda(p, {anchor})));
    const auto& sets = cat.component(r);
    expect(sets.size() == table.size(),
           name + " has " + std::to_string(sets.size()) + " MIS, expected " + std::to_string(table.size()));
    for (const auto& row : table) {
      const MaxIndSet mr = make(p, row.mis, r);
      expect(std::find(sets.begin(), sets.end(), mr) != sets.end(), name + " is missing " + ideal_list(mr.ideals));
      const DescentData d = component_descents(p, g, cat, r, mr, true);
      expect(d.element_descents == row.des, name + " Des mismatch for " + ideal_list(mr.ideals));
      expect(d.ideal_descents == lambdas(p, row.ideal_des), name + " ideal Des mismatch for " + ideal_list(mr.ideals));
      ++rows;
    }
  }
  return "component MIS counts 6, 5, 3, 2; " + std::to_string(rows) + " table rows match";
}

std::string generating_functions() {
  constexpr int kDegree = 6;
  int duplication = 0;
  for (const auto& e : fixtures::corpus()) {
    const std::string who = " (" + fixtures::describe(e) + ")";
    const Poset& p = e.poset;
    expect(e.n <= 7 && is_naturally_labeled(p), "corpus entry out of range" + who);
    const IdealGraph g = build_ideal_graph(p);
    const MisCatalog cat = enumerate_all_component_mis(g);
    const FactoredGF gf = factored_fpx(p, g, cat);
    const QPoly q = fpq(p, gf);
    expect(q == oracle::maj_polynomial(p), "fpq differs from the maj polynomial" + who);
    expect(q.value_at_one() == count_linear_extensions(p, g, cat), "fpq(1) differs from count" + who);
    const MonomialCoeffs series = expand_series(gf, kDegree);
    expect(series == oracle::ppartition_coeffs(p, kDegree), "series differs from P-partition counts" + who);
    if (is_forest_with_duplications(g)) {
      expect(expand_series(fpx_duplication_path(p, g), kDegree) == series, "duplication product differs" + who);
      ++duplication;
    }
  }
  return std::to_string(fixtures::corpus().size()) + " posets to degree " + std::to_string(kDegree) + ", " +
         std::to_string(duplication) + " with the duplication product";
}

std::string bijection_and_structure() {
  std::size_t exhaustive = 0, sets = 0;
  for (const auto& e : fixtures::corpus()) {
    const std::string who = " (" + fixtures::describe(e) + ")";
    const Poset& p = e.poset;
    const auto report = verify_all(p);
    for (const auto& c : report.checks) {
      if (c.name == "decomposition" || c.name.rfind("series", 0) == 0) continue;
      expect(!c.skipped, c.name + " skipped" + who);
      expect(c.passed, c.name + ": " + c.details + who);
      if (c.name == "extension-independence" && c.details.rfind("all extensions", 0) == 0) ++exhaustive;
    }

    const IdealGraph g = build_ideal_graph(p);
    const MisCatalog cat = enumerate_all_component_mis(g);
    const auto all = enumerate_global_mis(cat, 100'000);
    sets += all.size();
    for (const auto& m : all) {
      expect(m.size() == e.n, "MIS of size " + std::to_string(m.size()) + who);
      const LabelMap labels = label_map(p, m);
      std::vector<int> seen;
      for (int k = 0; k < m.size(); ++k) {
        const Ideal& j = m.ideals[static_cast<std::size_t>(k)];
        const Ideal rest = j - mu(m, j);
        expect(rest.size() == 1 && rest.first() == labels.label(k), "J \\ mu(M, J) is not the label" + who);
        expect(generating_set(p, j).contains(labels.label(k)), "label is not maximal in J" + who);
        seen.push_back(labels.label(k));
      }
      std::sort(seen.begin(), seen.end());
      for (int i = 1; i <= e.n; ++i) expect(seen[static_cast<std::size_t>(i - 1)] == i, "label map is not onto" + who);
      const PForest f = psi(p, m);
      expect(phi(p, f) == m && psi(p, phi(p, f)) == f, "phi and psi do not invert" + who);
    }
    if (cat.global_count() <= 50)
      for (int r = 0; r < cat.component_count(); ++r)
        for (const auto& mr : cat.component(r)) component_descents(p, g, cat, r, mr, true);
  }
  return std::to_string(sets) + " global MIS checked; extension independence exhaustive on " +
         std::to_string(exhaustive) + " posets";
}

std::string decomposition() {
  std::size_t posets = 0, extensions = 0;
  for (const auto& e : fixtures::corpus()) {
    const Poset& p = e.poset;
    const std::size_t total = oracle::count_extensions(p);
    if (total > 50'000) continue;
    std::vector<PForest> forests;
    for (const auto& m : enumerate_global_mis(build_ideal_graph(p))) forests.push_back(psi(p, m));
    const auto rep = verify_decomposition(p, forests, 50'000);
    expect(rep.total == total, "forest extensions do not cover L(P) (" + fixtures::describe(e) + ")");
    ++posets;
    extensions += total;
  }
  return std::to_string(posets) + " posets, " + std::to_string(extensions) + " extensions partitioned";
}

std::string exactness_guards() {
  // Tampered inputs must be caught.
  FactoredGF doubled;
  doubled.n = 1;
  doubled.factors.push_back(GFFactor{0, {GFTerm{1, {}, {fixtures::set(1, {1}), fixtures::set(1, {1})}}}});
  bool caught = false;
  try {
    fpq(fixtures::chain(1), doubled);
  } catch (const TheoremViolation&) {
    caught = true;
  }
  expect(caught, "non-polynomial fpq was accepted");

  const Poset p = fixtures::fig5();
  const IdealGraph g = build_ideal_graph(p);
  const MisCatalog cat = enumerate_all_component_mis(g);
  std::vector<std::vector<MaxIndSet>> tampered;
  for (int r = 0; r < cat.component_count(); ++r) tampered.push_back(cat.component(r));
  const int c4 = g.component_of(*g.index_of(lambda(p, {17})));
  tampered[static_cast<std::size_t>(c4)].back() = MaxIndSet{{lambda(p, {10})}, c4};
  caught = false;
  try {
    count_linear_extensions(p, g, MisCatalog(tampered));
  } catch (const TheoremViolation&) {
    caught = true;
  }
  expect(caught, "non-integral count was accepted");

  // Untampered inputs must pass every guard.
  std::size_t runs = 0;
  const auto clean = [&](const Poset& q) {
    const IdealGraph gq = build_ideal_graph(q);
    const MisCatalog cq = enumerate_all_component_mis(gq);
    const QPoly f = fpq(q, factored_fpx(q, gq, cq));
    expect(f.value_at_one() == count_linear_extensions(q, gq, cq), "fpq(1) != count");
    ++runs;
  };
  clean(p);
  clean(natural_relabel(fixtures::fig1()).first);
  for (const auto& e : fixtures::corpus()) clean(e.poset);
  return "both tampered inputs rejected; " + std::to_string(runs) + " clean inputs pass";
}

}  // namespace

int main() {
  criterion(1, "headline count", headline_count);
  criterion(2, "six-element example", six_element_suite);
  criterion(3, "descent tables", descent_tables);
  criterion(4, "generating function identities", generating_functions);
  criterion(5, "bijection and structure", bijection_and_structure);
  criterion(6, "extension decomposition", decomposition);
  criterion(7, "exactness guards", exactness_guards);
  std::printf("%s: %d of 7 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
