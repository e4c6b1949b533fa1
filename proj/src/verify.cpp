#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include "json.hpp"
#include <optional>
#include <sstream>

#include "pfactor/errors.hpp"
#include "pfactor/oracle.hpp"

namespace pfactor {

namespace {

struct Skip {
  std::string why;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw TheoremViolation(what);
}

std::string ideal_list(const std::vector<Ideal>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].to_string();
  return out + "]";
}

std::string monomial_text(const std::vector<int>& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(k + 1);
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

// First monomial on which the two maps disagree, or nullopt.
std::optional<std::string> series_mismatch(const MonomialCoeffs& a, const MonomialCoeffs& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
      return monomial_text(ia->first) + ": " + ia->second.str() + " vs 0";
    if (ia == a.end() || ib->first < ia->first) return monomial_text(ib->first) + ": 0 vs " + ib->second.str();
    if (ia->second != ib->second)
      return monomial_text(ia->first) + ": " + ia->second.str() + " vs " + ib->second.str();
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

double binomial(int top, int bottom) {
  double r = 1.0;
  for (int k = 1; k <= bottom; ++k) r = r * (top - bottom + k) / k;
  return r;
}

// Everything the checks share, built lazily so a cap only skips what depends on it.
struct Pipeline {
  const Poset& p;
  const VerifyBudgets& budgets;
  std::optional<IdealGraph> g;
  std::optional<MisCatalog> catalog;
  std::optional<std::vector<MaxIndSet>> global;

  const IdealGraph& graph() {
    if (!g) g.emplace(build_ideal_graph(p, budgets.max_ideals));
    return *g;
  }
  const MisCatalog& mis() {
    if (!catalog) catalog.emplace(enumerate_all_component_mis(graph(), budgets.max_mis));
    return *catalog;
  }
  const std::vector<MaxIndSet>& all_mis() {
    if (!global) global.emplace(enumerate_global_mis(mis(), budgets.max_mis));
    return *global;
  }
};

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.skipped; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "poset n=" << n << " covers=" << cover_count << " natural=" << (naturally_labeled ? "yes" : "no") << '\n';
  for (const auto& c : checks) {
    out << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << ' ' << c.name << " (" << std::fixed
        << std::setprecision(1) << c.millis << " ms)";
    if (!c.details.empty()) out << ": " << c.details;
    out << '\n';
  }
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["covers"] = cover_count;
  j["naturally_labeled"] = naturally_labeled;
  j["all_passed"] = all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"status", c.skipped ? "skip" : c.passed ? "pass" : "fail"},
                           {"details", c.details},
                           {"millis", c.millis}});
  }
  return j.dump(2);
}

VerificationReport verify_all(const Poset& p, const VerifyBudgets& budgets) {
  VerificationReport report;
  report.n = p.size();
  report.cover_count = p.covers().size();
  report.naturally_labeled = is_naturally_labeled(p);

  const Poset natural = report.naturally_labeled ? p : natural_relabel(p).first;
  const std::string relabel_note = report.naturally_labeled ? "" : " (on natural relabeling)";
  Pipeline pipe{p, budgets, {}, {}, {}};
  Pipeline npipe{natural, budgets, {}, {}, {}};
  Pipeline& nat = report.naturally_labeled ? pipe : npipe;

  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult res;
    res.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      res.details = body();
      res.passed = true;
    } catch (const Skip& s) {
      res.skipped = true;
      res.details = s.why;
    } catch (const CapExceeded& e) {
      res.skipped = true;
      res.details = e.what();
    } catch (const std::exception& e) {
      res.details = e.what();
    }
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(res));
  };

  const int n = p.size();

  run("connected-ideals", [&] {
    const auto& g = pipe.graph();
    if (n > oracle::kSubsetMaxElements) throw Skip{"n exceeds subset oracle limit"};
    const auto expected = oracle::connected_ideals(p);
    require(g.vertices() == expected, "closure enumeration found " + std::to_string(g.vertex_count()) +
                                          " ideals, subset scan found " + std::to_string(expected.size()));
    return std::to_string(expected.size()) + " ideals";
  });

  run("mis-size", [&] {
    const auto& catalog = pipe.mis();
    int total = 0;
    for (int r = 0; r < catalog.component_count(); ++r) total += catalog.mis_size(r);
    require(total == n, "component MIS sizes sum to " + std::to_string(total));
    const auto& all = pipe.all_mis();
    for (const auto& m : all) require(m.size() == n, "global MIS " + ideal_list(m.ideals) + " has wrong size");
    std::string extra;
    if (pipe.graph().vertex_count() <= oracle::kSubsetMaxVertices) {
      const auto expected = oracle::global_mis(pipe.graph().vertices());
      std::vector<std::vector<Ideal>> got;
      for (const auto& m : all) got.push_back(m.ideals);
      std::sort(got.begin(), got.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), canonical_less);
      });
      require(got == expected, "component product gives " + std::to_string(got.size()) +
                                   " sets, subset search gives " + std::to_string(expected.size()));
      extra = ", matches subset search";
    }
    return std::to_string(all.size()) + " global MIS" + extra;
  });

  run("label-map", [&] {
    for (const auto& m : pipe.all_mis()) label_map(p, m);
    return std::to_string(pipe.all_mis().size()) + " label maps bijective";
  });

  run("bijection", [&] {
    const auto& all = pipe.all_mis();
    std::vector<PForest> forests;
    for (const auto& m : all) {
      PForest f = psi(p, m);
      require(phi(p, f) == m, "phi(psi(M)) != M for M = " + ideal_list(m.ideals));
      const LabelMap labels = label_map(p, m);
      for (int k = 0; k < m.size(); ++k)
        require(f.subtree(labels.label(k)) == m.ideals[static_cast<std::size_t>(k)],
                "subtree mismatch for label " + std::to_string(labels.label(k)));
      forests.push_back(std::move(f));
    }
    std::sort(forests.begin(), forests.end());
    require(std::adjacent_find(forests.begin(), forests.end()) == forests.end(), "psi is not injective");
    if (n > oracle::kForestMaxN) return std::to_string(forests.size()) + " forests (oracle skipped, n too large)";
    const auto expected = oracle::pforests(p);
    require(forests == expected, "psi image has " + std::to_string(forests.size()) + " forests, oracle finds " +
                                     std::to_string(expected.size()));
    for (const auto& f : expected) require(psi(p, phi(p, f)) == f, "psi(phi(F)) != F");
    return std::to_string(forests.size()) + " forests, round trips hold";
  });

  run("structure", [&] {
    const auto& g = pipe.graph();
    // chi_J connectivity, and which H_P component each vertex lives in.
    std::vector<int> home(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto chi = chi_subgraph(p, g, g.vertex(v));
      home[static_cast<std::size_t>(v)] = g.principal_component_of(chi.generators.front());
      for (int i : chi.generators)
        require(g.principal_component_of(i) == home[static_cast<std::size_t>(v)],
                "chi of " + g.vertex(v).to_string() + " spans two H_P components");
    }
    for (const auto& [a, b] : g.edges())
      require(home[static_cast<std::size_t>(a)] == home[static_cast<std::size_t>(b)],
              "adjacent " + g.vertex(a).to_string() + " and " + g.vertex(b).to_string() +
                  " live in different H_P components");
    // Absorption: outside vertices containing one member of a component contain all of it.
    for (int r = 0; r < g.component_count(); ++r) {
      const auto& comp = g.component(r);
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.component_of(v) == r) continue;
        const Ideal& j = g.vertex(v);
        const bool holds_one = std::any_of(comp.begin(), comp.end(), [&](int a) { return g.vertex(a).is_proper_subset_of(j); });
        if (!holds_one) continue;
        for (int b : comp)
          require(g.vertex(b).is_proper_subset_of(j),
                  j.to_string() + " contains part of a component but not " + g.vertex(b).to_string());
      }
    }
    // J^max isolation, and every chi_J inside C_r puts J in C_r unless J = J^max.
    for (int r = 0; r < g.component_count(); ++r) {
      const auto& comp = g.component(r);
      if (comp.size() < 2) continue;
      const Ideal jmax = component_jmax(g, r);
      for (int v = 0; v < g.vertex_count(); ++v) {
        const auto chi = chi_subgraph(p, g, g.vertex(v));
        const bool inside = std::all_of(chi.vertices.begin(), chi.vertices.end(),
                                        [&](int w) { return g.component_of(w) == r; });
        if (inside && g.vertex(v) != jmax)
          require(g.component_of(v) == r, g.vertex(v).to_string() + " has chi inside a component it is not in");
      }
    }
    // U_max disjointness and cover-inside-U_max over every global MIS.
    for (const auto& m : pipe.all_mis()) {
      for (const auto& b : m.ideals) {
        const auto um = u_max(m, b);
        for (const auto& a : m.ideals)
          if (prec(m, a, b))
            require(std::find(um.begin(), um.end(), a) != um.end(),
                    a.to_string() + " is covered by " + b.to_string() + " but not in U_max");
      }
    }
    return std::to_string(g.component_count()) + " components";
  });

  run("descents", [&] {
    for (const auto& m : pipe.all_mis()) mis_descents(p, m);
    return std::to_string(pipe.all_mis().size()) + " sets agree";
  });

  run("extension-independence", [&] {
    const auto& catalog = nat.mis();
    const bool exhaustive = catalog.global_count() <= budgets.max_extension_checks;
    for (int r = 0; r < catalog.component_count(); ++r)
      for (const auto& mr : catalog.component(r)) component_descents(natural, nat.graph(), catalog, r, mr, exhaustive);
    // Des(M) splits as the disjoint union of the component restrictions.
    if (exhaustive) {
      for (const auto& m : nat.all_mis()) {
        std::vector<int> joined;
        for (int r = 0; r < catalog.component_count(); ++r) {
          for (const auto& mr : catalog.component(r)) {
            if (!std::all_of(mr.ideals.begin(), mr.ideals.end(), [&](const Ideal& j) { return m.contains(j); }))
              continue;
            const auto d = restricted_descents(natural, m, mr);
            joined.insert(joined.end(), d.element_descents.begin(), d.element_descents.end());
          }
        }
        std::sort(joined.begin(), joined.end());
        require(joined == mis_descents(natural, m).element_descents,
                "component descents do not partition Des(M) for M = " + ideal_list(m.ideals));
      }
    }
    return std::string(exhaustive ? "all extensions" : "first extension only") + relabel_note;
  });

  run("decomposition", [&] {
    std::vector<PForest> forests;
    for (const auto& m : pipe.all_mis()) forests.push_back(psi(p, m));
    const auto rep = verify_decomposition(p, forests, budgets.max_decomposition_extensions);
    return std::to_string(forests.size()) + " forests cover " + std::to_string(rep.total) + " extensions";
  });

  std::optional<BigInt> counted;
  run("count", [&] {
    const BigInt c = count_linear_extensions(p, pipe.graph(), pipe.mis());
    counted = c;
    const std::size_t direct = oracle::count_extensions(p, budgets.max_extensions);
    require(c == direct, "product formula gives " + c.str() + ", enumeration gives " + std::to_string(direct));
    return c.str();
  });

  std::optional<FactoredGF> gf;
  run("maj-polynomial", [&] {
    gf = factored_fpx(natural, nat.graph(), nat.mis());
    const QPoly poly = fpq(natural, *gf);
    if (counted) require(poly.value_at_one() == *counted, "fpq(1) = " + poly.value_at_one().str() + " but count = " + counted->str());
    const QPoly expected = oracle::maj_polynomial(natural, budgets.max_extensions);
    require(poly == expected, "product gives " + poly.to_string() + ", enumeration gives " + expected.to_string());
    return "degree " + std::to_string(poly.degree()) + relabel_note;
  });

  const int degree = budgets.series_degree;
  const auto series_in_budget = [&] {
    if (degree > oracle::kSeriesMaxDegree) throw Skip{"series degree above oracle limit"};
    if (binomial(n + degree, degree) > static_cast<double>(budgets.max_series_monomials))
      throw Skip{"monomial budget exceeded at degree " + std::to_string(degree)};
  };

  std::optional<MonomialCoeffs> nat_partitions;
  run("series-factored", [&] {
    series_in_budget();
    if (!gf) gf = factored_fpx(natural, nat.graph(), nat.mis());
    const auto got = expand_series(*gf, degree);
    nat_partitions = oracle::ppartition_coeffs(natural, degree);
    if (auto bad = series_mismatch(got, *nat_partitions)) throw TheoremViolation("coefficient mismatch at " + *bad);
    return std::to_string(got.size()) + " monomials to degree " + std::to_string(degree) + relabel_note;
  });

  run("series-forests", [&] {
    series_in_budget();
    if (n > oracle::kForestMaxN) throw Skip{"n exceeds forest oracle limit"};
    const auto got = expand_series(oracle::forest_sum(oracle::pforests(p), n), degree);
    const auto expected = oracle::ppartition_coeffs(p, degree);
    if (auto bad = series_mismatch(got, expected)) throw TheoremViolation("coefficient mismatch at " + *bad);
    return std::to_string(got.size()) + " monomials to degree " + std::to_string(degree);
  });

  run("series-duplication", [&] {
    series_in_budget();
    if (!is_forest_with_duplications(nat.graph())) throw Skip{"G_P has a vertex of degree two or more"};
    if (!gf) gf = factored_fpx(natural, nat.graph(), nat.mis());
    const auto got = expand_series(fpx_duplication_path(natural, nat.graph()), degree);
    const auto expected = expand_series(*gf, degree);
    if (auto bad = series_mismatch(got, expected)) throw TheoremViolation("coefficient mismatch at " + *bad);
    return std::to_string(got.size()) + " monomials to degree " + std::to_string(degree) + relabel_note;
  });

  return report;
}

}  // namespace pfactor
