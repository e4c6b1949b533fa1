#include "pfactor/forests.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "pfactor/errors.hpp"

namespace pfactor {

PForest::PForest(std::vector<int> parents) : parent_(std::move(parents)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int par = parent(i);
    if (par < 1 || par > n) throw InputError("parent of " + std::to_string(i) + " out of range");
  }
  // Walking up from any node must reach a root within n steps.
  for (int i = 1; i <= n; ++i) {
    int v = i;
    for (int steps = 0; !is_root(v); ++steps) {
      if (steps > n) throw InputError("parent array contains a cycle through " + std::to_string(i));
      v = parent(v);
    }
  }
}

std::vector<int> PForest::children(int i) const {
  std::vector<int> out;
  for (int c = 1; c <= size(); ++c)
    if (c != i && parent(c) == i) out.push_back(c);
  return out;
}

ElementSet PForest::subtree(int i) const {
  ElementSet s(size());
  for (int j = 1; j <= size(); ++j) {
    int v = j;
    while (true) {
      if (v == i) {
        s.insert(j);
        break;
      }
      if (is_root(v)) break;
      v = parent(v);
    }
  }
  return s;
}

Poset PForest::as_poset() const {
  std::vector<Cover> covers;
  for (int i = 1; i <= size(); ++i)
    if (!is_root(i)) covers.push_back({i, parent(i)});
  return build_poset(size(), covers);
}

std::vector<int> forest_descents(const PForest& f) {
  std::vector<int> des;
  for (int i = 1; i <= f.size(); ++i)
    if (!f.is_root(i) && i > f.parent(i)) des.push_back(i);
  return des;
}

bool is_pforest(const Poset& p, const PForest& f, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const int n = p.size();
  if (f.size() != n) return fail("forest has " + std::to_string(f.size()) + " nodes, poset has " + std::to_string(n));
  std::vector<ElementSet> sub;
  sub.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    sub.push_back(f.subtree(i));
    const auto& s = sub.back();
    if (!is_down_closed(p, s)) return fail("subtree at " + std::to_string(i) + " " + s.to_string() + " is not an order ideal");
    if (!is_connected_ideal(p, s)) return fail("subtree at " + std::to_string(i) + " " + s.to_string() + " is disconnected");
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto& a = sub[static_cast<std::size_t>(i - 1)];
      const auto& b = sub[static_cast<std::size_t>(j - 1)];
      if (a.contains(j) || b.contains(i)) continue;  // comparable in F
      if (is_connected_ideal(p, a | b))
        return fail("subtrees at " + std::to_string(i) + " and " + std::to_string(j) + " have a connected union");
    }
  }
  return true;
}

MaxIndSet phi(const Poset& p, const PForest& f) {
  std::string why;
  if (!is_pforest(p, f, &why)) throw InputError("not a P-forest: " + why);
  MaxIndSet m;
  for (int i = 1; i <= f.size(); ++i) m.ideals.push_back(f.subtree(i));
  std::sort(m.ideals.begin(), m.ideals.end(), canonical_less);
  if (std::adjacent_find(m.ideals.begin(), m.ideals.end()) != m.ideals.end())
    throw TheoremViolation("P-forest subtrees are not distinct");
  for (std::size_t a = 0; a < m.ideals.size(); ++a)
    for (std::size_t b = a + 1; b < m.ideals.size(); ++b)
      if (intersects_nontrivially(m.ideals[a], m.ideals[b]))
        throw TheoremViolation("P-forest subtrees " + m.ideals[a].to_string() + " and " + m.ideals[b].to_string() +
                               " are adjacent in G_P");
  return m;
}

PForest psi(const Poset& p, const MaxIndSet& m) {
  const LabelMap labels = label_map(p, m);
  const int n = p.size();
  std::vector<int> parents(static_cast<std::size_t>(n));
  for (int k = 0; k < m.size(); ++k) {
    const Ideal& j = m.ideals[static_cast<std::size_t>(k)];
    int best = -1;
    for (int t = 0; t < m.size(); ++t) {
      const Ideal& c = m.ideals[static_cast<std::size_t>(t)];
      if (!j.is_proper_subset_of(c)) continue;
      if (best < 0 || c.is_proper_subset_of(m.ideals[static_cast<std::size_t>(best)])) best = t;
    }
    const int label = labels.label(k);
    parents[static_cast<std::size_t>(label - 1)] = best < 0 ? label : labels.label(best);
  }
  PForest f(std::move(parents));
  std::string why;
  if (!is_pforest(p, f, &why)) throw TheoremViolation("psi produced a non-P-forest: " + why);
  for (int k = 0; k < m.size(); ++k)
    if (f.subtree(labels.label(k)) != m.ideals[static_cast<std::size_t>(k)])
      throw TheoremViolation("subtree of label " + std::to_string(labels.label(k)) + " differs from its member");
  return f;
}

std::vector<PForest> enumerate_pforests(const Poset& p, const IdealGraph& g, const MisCatalog& catalog,
                                        std::size_t cap) {
  (void)g;
  std::vector<PForest> out;
  for (const auto& m : enumerate_global_mis(catalog, cap)) out.push_back(psi(p, m));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

DescentData descents_from_labels(const MaxIndSet& m, const LabelMap& labels, const std::vector<int>& des) {
  DescentData d{des, {}};
  for (int i : des) d.ideal_descents.push_back(m.ideals[static_cast<std::size_t>(labels.member(i))]);
  std::sort(d.ideal_descents.begin(), d.ideal_descents.end(), canonical_less);
  return d;
}

}  // namespace

DescentData mis_descents(const Poset& p, const MaxIndSet& m) {
  const LabelMap labels = label_map(p, m);
  const std::vector<int> via_forest = forest_descents(psi(p, m));

  // i is a descent iff the member labelled i sits directly below a member with a smaller label.
  std::vector<int> via_prec;
  for (int a = 0; a < m.size(); ++a) {
    const int i = labels.label(a);
    for (int b = 0; b < m.size(); ++b) {
      if (labels.label(b) < i &&
          prec(m, m.ideals[static_cast<std::size_t>(a)], m.ideals[static_cast<std::size_t>(b)])) {
        via_prec.push_back(i);
        break;
      }
    }
  }
  std::sort(via_prec.begin(), via_prec.end());
  if (via_prec != via_forest) throw TheoremViolation("descent characterizations via psi and via cover disagree");
  return descents_from_labels(m, labels, via_forest);
}

DescentData restricted_descents(const Poset& p, const MaxIndSet& m, const MaxIndSet& mr) {
  const LabelMap labels = label_map(p, m);
  const DescentData all = mis_descents(p, m);
  std::vector<int> des;
  for (int i : all.element_descents) {
    if (mr.contains(m.ideals[static_cast<std::size_t>(labels.member(i))])) des.push_back(i);
  }
  return descents_from_labels(m, labels, des);
}

DescentData component_descents(const Poset& p, const IdealGraph& g, const MisCatalog& catalog, int r,
                               const MaxIndSet& mr, bool verify_all_extensions) {
  (void)g;
  if (!is_naturally_labeled(p))
    throw InputError("component descents are only defined for naturally labelled posets");
  if (r < 0 || r >= catalog.component_count()) throw InputError("component id out of range");
  const auto& own = catalog.component(r);
  auto it = std::find(own.begin(), own.end(), mr);
  if (it == own.end()) throw InputError("set is not a maximum independent set of component " + std::to_string(r));

  const int h = catalog.component_count();
  std::vector<int> choice(static_cast<std::size_t>(h), 0);
  choice[static_cast<std::size_t>(r)] = static_cast<int>(it - own.begin());
  const DescentData first = restricted_descents(p, catalog.assemble(choice), mr);
  if (!verify_all_extensions) return first;

  while (true) {
    int s = h - 1;
    for (; s >= 0; --s) {
      if (s == r) continue;
      if (++choice[static_cast<std::size_t>(s)] < static_cast<int>(catalog.component(s).size())) break;
      choice[static_cast<std::size_t>(s)] = 0;
    }
    if (s < 0) break;
    if (restricted_descents(p, catalog.assemble(choice), mr) != first)
      throw TheoremViolation("component descents depend on the chosen extension (component " + std::to_string(r) + ")");
  }
  return first;
}

DecompositionReport verify_decomposition(const Poset& p, std::span<const PForest> forests, std::size_t cap) {
  DecompositionReport report;
  std::set<Word> seen;
  for (const auto& f : forests) {
    std::size_t count = 0;
    bool overflow = false;
    std::string problem;
    for_each_linear_extension(f.as_poset(), [&](std::span<const int> w) {
      if (report.total + count >= cap) {
        overflow = true;
        return false;
      }
      if (!is_linear_extension(p, w)) {
        problem = "forest extension is not an extension of P";
        return false;
      }
      if (!seen.emplace(w.begin(), w.end()).second) {
        problem = "two forests share a linear extension";
        return false;
      }
      ++count;
      return true;
    });
    if (overflow) throw CapExceeded("forest linear extension enumeration", cap, report.total + count);
    if (!problem.empty()) throw TheoremViolation(problem);
    report.per_forest.push_back(count);
    report.total += count;
  }
  for_each_linear_extension(p, [&](std::span<const int> w) {
    ++report.poset_extensions;
    return report.poset_extensions <= report.total;
  });
  if (report.poset_extensions != report.total)
    throw TheoremViolation("forest extensions cover " + std::to_string(report.total) + " words but P has more");
  return report;
}

std::string render_forest(const PForest& f) {
  std::string out;
  auto walk = [&](auto&& self, int node, int depth) -> void {
    out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + std::to_string(node) + "\n";
    for (int c : f.children(node)) self(self, c, depth + 1);
  };
  for (int i = 1; i <= f.size(); ++i)
    if (f.is_root(i)) walk(walk, i, 0);
  return out;
}

}  // namespace pfactor
