#include "pfactor/mis.hpp"

#include <algorithm>
#include <limits>

#include "pfactor/errors.hpp"

namespace pfactor {

bool MaxIndSet::contains(const Ideal& j) const {
  return std::binary_search(ideals.begin(), ideals.end(), j, canonical_less);
}

int MaxIndSet::position_of(const Ideal& j) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), j, canonical_less);
  if (it == ideals.end() || *it != j) throw InputError(j.to_string() + " is not a member of the independent set");
  return static_cast<int>(it - ideals.begin());
}

Ideal mu(const MaxIndSet& m, const Ideal& j) {
  m.position_of(j);
  Ideal out(j.universe());
  for (const auto& other : m.ideals)
    if (other.is_proper_subset_of(j)) out |= other;
  return out;
}

std::vector<Ideal> u_max(const MaxIndSet& m, const Ideal& j) {
  m.position_of(j);
  std::vector<Ideal> inside;
  for (const auto& other : m.ideals)
    if (other.is_proper_subset_of(j)) inside.push_back(other);
  std::vector<Ideal> top;
  for (const auto& a : inside) {
    bool dominated = std::any_of(inside.begin(), inside.end(), [&](const Ideal& b) { return a.is_proper_subset_of(b); });
    if (!dominated) top.push_back(a);
  }
  for (std::size_t x = 0; x < top.size(); ++x)
    for (std::size_t y = x + 1; y < top.size(); ++y)
      if (top[x].intersects(top[y]))
        throw TheoremViolation("maximal sub-members " + top[x].to_string() + " and " + top[y].to_string() +
                               " of " + j.to_string() + " intersect");
  return top;
}

bool prec(const MaxIndSet& m, const Ideal& a, const Ideal& b) {
  m.position_of(a);
  m.position_of(b);
  if (!a.is_proper_subset_of(b)) return false;
  return std::none_of(m.ideals.begin(), m.ideals.end(),
                      [&](const Ideal& c) { return a.is_proper_subset_of(c) && c.is_proper_subset_of(b); });
}

LabelMap label_map(const Poset& p, const MaxIndSet& m) {
  const int n = p.size();
  if (m.size() != n)
    throw TheoremViolation("global independent set has " + std::to_string(m.size()) + " members, expected " +
                           std::to_string(n));
  LabelMap map;
  map.label_of_member.resize(m.ideals.size());
  map.member_of_label.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < m.ideals.size(); ++k) {
    const Ideal& j = m.ideals[k];
    const Ideal rest = j - mu(m, j);
    if (rest.size() != 1) throw TheoremViolation(j.to_string() + " minus mu is " + rest.to_string() + ", not a singleton");
    const int label = rest.first();
    if (!generating_set(p, j).contains(label))
      throw TheoremViolation("label " + std::to_string(label) + " is not maximal in " + j.to_string());
    if (map.member_of_label[static_cast<std::size_t>(label - 1)] != -1)
      throw TheoremViolation("label " + std::to_string(label) + " assigned twice");
    map.label_of_member[k] = label;
    map.member_of_label[static_cast<std::size_t>(label - 1)] = static_cast<int>(k);
  }
  return map;
}

namespace {

class ComponentSearch {
 public:
  ComponentSearch(const IdealGraph& g, const std::vector<int>& vertices, std::size_t cap)
      : vertices_(vertices), cap_(cap) {
    const int size = static_cast<int>(vertices.size());
    order_.resize(vertices.size());
    for (int k = 0; k < size; ++k) order_[static_cast<std::size_t>(k)] = k;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(vertices[static_cast<std::size_t>(a)]) < g.degree(vertices[static_cast<std::size_t>(b)]);
    });
    // Local indices follow the degree order; bit k+1 stands for order_[k].
    std::vector<int> rank(vertices.size());
    for (int k = 0; k < size; ++k) rank[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])] = k;
    closed_nb_.assign(vertices.size(), ElementSet(size));
    for (int a = 0; a < size; ++a) {
      ElementSet& nb = closed_nb_[static_cast<std::size_t>(rank[static_cast<std::size_t>(a)])];
      nb.insert(rank[static_cast<std::size_t>(a)] + 1);
      for (int b = 0; b < size; ++b)
        if (a != b && g.adjacent(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)]))
          nb.insert(rank[static_cast<std::size_t>(b)] + 1);
    }
    universe_ = size;
  }

  std::vector<std::vector<int>> run() {
    ElementSet chosen(universe_);
    search(chosen, 0, ElementSet::full(universe_));
    if (overflow_) throw CapExceeded("maximum independent set enumeration", cap_, found_.size());
    std::vector<std::vector<int>> out;
    for (const auto& set : found_) {
      std::vector<int> ids;
      set.for_each([&](int local) {
        ids.push_back(vertices_[static_cast<std::size_t>(order_[static_cast<std::size_t>(local - 1)])]);
      });
      std::sort(ids.begin(), ids.end());
      out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void search(ElementSet& chosen, int chosen_size, const ElementSet& candidates) {
    const int remaining = candidates.size();
    if (chosen_size + remaining < best_) return;
    if (remaining == 0) {
      if (chosen_size > best_) {
        best_ = chosen_size;
        found_.clear();
        overflow_ = false;
      }
      if (found_.size() == cap_) {
        overflow_ = true;
        return;
      }
      found_.push_back(chosen);
      return;
    }
    const int v = candidates.first();
    chosen.insert(v);
    search(chosen, chosen_size + 1, candidates - closed_nb_[static_cast<std::size_t>(v - 1)]);
    chosen.erase(v);
    ElementSet without = candidates;
    without.erase(v);
    search(chosen, chosen_size, without);
  }

  const std::vector<int>& vertices_;
  std::size_t cap_;
  std::vector<int> order_;
  std::vector<ElementSet> closed_nb_;
  int universe_ = 0;
  int best_ = 0;
  bool overflow_ = false;
  std::vector<ElementSet> found_;
};

}  // namespace

std::vector<MaxIndSet> enumerate_component_mis(const IdealGraph& g, int r, std::size_t cap) {
  if (r < 0 || r >= g.component_count()) throw InputError("component id out of range");
  if (cap < 1) throw InputError("MIS cap must be positive");
  ComponentSearch search(g, g.component(r), cap);
  std::vector<MaxIndSet> out;
  for (const auto& ids : search.run()) {
    MaxIndSet m;
    m.scope = r;
    for (int v : ids) m.ideals.push_back(g.vertex(v));
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t MisCatalog::global_count() const {
  std::size_t total = 1;
  for (const auto& list : per_component_) {
    if (list.size() != 0 && total > std::numeric_limits<std::size_t>::max() / list.size())
      return std::numeric_limits<std::size_t>::max();
    total *= list.size();
  }
  return total;
}

MaxIndSet MisCatalog::assemble(const std::vector<int>& choice) const {
  MaxIndSet m;
  for (std::size_t r = 0; r < per_component_.size(); ++r) {
    const auto& part = per_component_[r][static_cast<std::size_t>(choice[r])];
    m.ideals.insert(m.ideals.end(), part.ideals.begin(), part.ideals.end());
  }
  std::sort(m.ideals.begin(), m.ideals.end(), canonical_less);
  return m;
}

MisCatalog enumerate_all_component_mis(const IdealGraph& g, std::size_t cap_per_component) {
  std::vector<std::vector<MaxIndSet>> lists;
  lists.reserve(static_cast<std::size_t>(g.component_count()));
  for (int r = 0; r < g.component_count(); ++r) lists.push_back(enumerate_component_mis(g, r, cap_per_component));
  return MisCatalog(std::move(lists));
}

std::vector<MaxIndSet> enumerate_global_mis(const MisCatalog& catalog, std::size_t cap) {
  const std::size_t total = catalog.global_count();
  if (total > cap) throw CapExceeded("global maximum independent set enumeration", cap, cap);
  std::vector<MaxIndSet> out;
  out.reserve(total);
  const int h = catalog.component_count();
  std::vector<int> choice(static_cast<std::size_t>(h), 0);
  while (true) {
    out.push_back(catalog.assemble(choice));
    int r = h - 1;
    while (r >= 0) {
      if (++choice[static_cast<std::size_t>(r)] < static_cast<int>(catalog.component(r).size())) break;
      choice[static_cast<std::size_t>(r)] = 0;
      --r;
    }
    if (r < 0) break;
  }
  return out;
}

std::vector<MaxIndSet> enumerate_global_mis(const IdealGraph& g, std::size_t cap) {
  return enumerate_global_mis(enumerate_all_component_mis(g, cap), cap);
}

ComponentSummary summarize_component(const IdealGraph& g, const MisCatalog& catalog, int r) {
  ComponentSummary s;
  s.component_id = r;
  for (int v : g.component(r)) s.vertex_ideals.push_back(g.vertex(v));
  s.jmax = component_jmax(g, r);
  s.mis_size = catalog.mis_size(r);
  return s;
}

}  // namespace pfactor
