#include "pfactor/ideal_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pfactor/errors.hpp"

namespace pfactor {

std::vector<Ideal> enumerate_connected_ideals(const Poset& p, std::size_t cap) {
  if (cap < 1) throw InputError("ideal cap must be positive");
  const int n = p.size();
  std::unordered_set<Ideal, ElementSetHash> seen;
  std::vector<Ideal> found;
  auto add = [&](const Ideal& j) {
    if (!seen.insert(j).second) return;
    if (found.size() == cap) throw CapExceeded("connected order ideal enumeration", cap, found.size());
    found.push_back(j);
  };
  for (int i = 1; i <= n; ++i) add(p.down_set(i));
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int i = 1; i <= n; ++i) {
      const Ideal& lam = p.down_set(i);
      const Ideal base = found[k];
      if (!lam.intersects(base) || lam.is_subset_of(base)) continue;
      add(base | lam);
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Groups 0..size-1 by their root; groups ordered by smallest member.
std::vector<std::vector<int>> collect_groups(DisjointSets& ds, int size, std::vector<int>& group_of) {
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(static_cast<std::size_t>(size), -1);
  group_of.assign(static_cast<std::size_t>(size), -1);
  for (int v = 0; v < size; ++v) {
    const int root = ds.find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    const int g = slot[static_cast<std::size_t>(root)];
    groups[static_cast<std::size_t>(g)].push_back(v);
    group_of[static_cast<std::size_t>(v)] = g;
  }
  return groups;
}

}  // namespace

IdealGraph::IdealGraph(const Poset& p, std::vector<Ideal> vertices) : n_(p.size()), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end(), canonical_less);
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  const int count = vertex_count();
  for (int v = 0; v < count; ++v) {
    if (vertices_[static_cast<std::size_t>(v)].empty()) throw InputError("the empty ideal is not a vertex of G_P");
    index_.emplace(vertices_[static_cast<std::size_t>(v)], v);
  }

  adjacency_.assign(static_cast<std::size_t>(count), {});
  DisjointSets ds(count);
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (intersects_nontrivially(vertex(a), vertex(b))) {
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
        ds.unite(a, b);
      }
    }
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  components_ = collect_groups(ds, count, component_of_);

  principal_vertex_.resize(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    auto idx = index_of(p.down_set(i));
    if (!idx) throw InputError("vertex list is missing the principal ideal of " + std::to_string(i));
    principal_vertex_[static_cast<std::size_t>(i - 1)] = *idx;
  }
  DisjointSets hp(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (adjacent(principal_vertex(i), principal_vertex(j))) hp.unite(i - 1, j - 1);
  principal_components_ = collect_groups(hp, n_, principal_component_of_);
  for (auto& group : principal_components_)
    for (int& e : group) ++e;
}

std::optional<int> IdealGraph::index_of(const Ideal& j) const {
  auto it = index_.find(j);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool IdealGraph::adjacent(int a, int b) const {
  const auto& nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<int, int>> IdealGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < vertex_count(); ++a)
    for (int b : neighbors(a))
      if (a < b) out.push_back({a, b});
  return out;
}

IdealGraph build_ideal_graph(const Poset& p, std::vector<Ideal> ideals) { return IdealGraph(p, std::move(ideals)); }

bool induced_connected(const IdealGraph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) return false;
  std::vector<int> reached{vertices.front()};
  std::vector<bool> done(vertices.size(), false);
  done[0] = true;
  for (std::size_t k = 0; k < reached.size(); ++k) {
    for (std::size_t t = 0; t < vertices.size(); ++t) {
      if (!done[t] && g.adjacent(reached[k], vertices[t])) {
        done[t] = true;
        reached.push_back(vertices[t]);
      }
    }
  }
  return reached.size() == vertices.size();
}

ChiSubgraph chi_subgraph(const Poset& p, const IdealGraph& g, const Ideal& j) {
  if (!is_connected_ideal(p, j)) throw InputError(j.to_string() + " is not a connected order ideal");
  ChiSubgraph chi{j, generating_set(p, j).elements(), {}};
  for (int i : chi.generators) chi.vertices.push_back(g.principal_vertex(i));
  if (!induced_connected(g, chi.vertices))
    throw TheoremViolation("chi subgraph of " + j.to_string() + " is disconnected");
  return chi;
}

Ideal component_jmax(const IdealGraph& g, int r) {
  if (r < 0 || r >= g.component_count()) throw InputError("component id out of range");
  const auto& members = g.component(r);
  Ideal jmax(g.universe());
  for (int v : members) jmax |= g.vertex(v);
  auto idx = g.index_of(jmax);
  if (!idx) throw TheoremViolation("component union " + jmax.to_string() + " is not a connected order ideal");
  if (g.degree(*idx) != 0) throw TheoremViolation("component union " + jmax.to_string() + " is not isolated");
  if (members.size() >= 2 && g.component_of(*idx) == r)
    throw TheoremViolation("component union " + jmax.to_string() + " lies inside its own component");
  return jmax;
}

bool is_forest_with_duplications(const IdealGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 1) return false;
  return true;
}

}  // namespace pfactor
