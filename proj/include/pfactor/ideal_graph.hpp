#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfactor/element_set.hpp"
#include "pfactor/poset.hpp"

namespace pfactor {

inline constexpr std::size_t kDefaultIdealCap = 1'000'000;

/// Nonempty intersection with neither set containing the other.
inline bool intersects_nontrivially(const ElementSet& a, const ElementSet& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

/// All nonempty connected order ideals, sorted by (size, bitmask).
///
/// Grows the family from the principal ideals: a connected ideal with more
/// than one generator is the union of a smaller connected ideal and a
/// principal ideal meeting it. Throws CapExceeded past cap.
std::vector<Ideal> enumerate_connected_ideals(const Poset& p, std::size_t cap = kDefaultIdealCap);

/// The intersection graph on connected order ideals (G_P) together with its
/// connected components and the subgraph induced on principal ideals (H_P).
class IdealGraph {
 public:
  IdealGraph(const Poset& p, std::vector<Ideal> vertices);

  int universe() const { return n_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Ideal& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<Ideal>& vertices() const { return vertices_; }
  std::optional<int> index_of(const Ideal& j) const;

  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int a, int b) const;
  /// Edges (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Components C_0..C_{h-1}, ordered by their smallest vertex index; each
  /// lists its vertex indices in increasing order.
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<int>& component(int r) const { return components_[static_cast<std::size_t>(r)]; }
  int component_of(int v) const { return component_of_[static_cast<std::size_t>(v)]; }

  /// Vertex index of the principal ideal of element i.
  int principal_vertex(int i) const { return principal_vertex_[static_cast<std::size_t>(i - 1)]; }

  /// Components D_0..D_{l-1} of H_P, as sorted lists of elements i (standing for their principal ideals).
  int principal_component_count() const { return static_cast<int>(principal_components_.size()); }
  const std::vector<int>& principal_component(int k) const {
    return principal_components_[static_cast<std::size_t>(k)];
  }
  int principal_component_of(int i) const { return principal_component_of_[static_cast<std::size_t>(i - 1)]; }

 private:
  int n_;
  std::vector<Ideal> vertices_;
  std::unordered_map<Ideal, int, ElementSetHash> index_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
  std::vector<int> principal_vertex_;
  std::vector<std::vector<int>> principal_components_;
  std::vector<int> principal_component_of_;
};

/// Builds G_P over ideals previously produced by enumerate_connected_ideals.
IdealGraph build_ideal_graph(const Poset& p, std::vector<Ideal> ideals);
inline IdealGraph build_ideal_graph(const Poset& p, std::size_t cap = kDefaultIdealCap) {
  return build_ideal_graph(p, enumerate_connected_ideals(p, cap));
}

struct ChiSubgraph {
  Ideal ideal;
  std::vector<int> generators;  // gs(J), increasing
  std::vector<int> vertices;    // vertex indices of the principal ideals of the generators
};

/// The subgraph induced on the principal ideals of gs(J). Throws InputError if
/// j is not a connected ideal and TheoremViolation if the result is disconnected.
ChiSubgraph chi_subgraph(const Poset& p, const IdealGraph& g, const Ideal& j);

/// True iff the induced subgraph on the given vertices is connected.
bool induced_connected(const IdealGraph& g, const std::vector<int>& vertices);

/// Union of every vertex ideal of component r. Throws TheoremViolation if the
/// union is not an isolated vertex of G_P (or the component itself).
Ideal component_jmax(const IdealGraph& g, int r);

/// Every vertex of G_P has degree at most one.
bool is_forest_with_duplications(const IdealGraph& g);

struct ComponentSummary {
  int component_id = 0;
  std::vector<Ideal> vertex_ideals;
  Ideal jmax;
  int mis_size = 0;
};

}  // namespace pfactor
