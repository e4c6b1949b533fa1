#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pfactor/element_set.hpp"
#include "pfactor/ideal_graph.hpp"
#include "pfactor/mis.hpp"
#include "pfactor/poset.hpp"

namespace pfactor {

/// A rooted forest on {1..n}. Roots are their own parent; ordering compares
/// the parent arrays lexicographically.
class PForest {
 public:
  PForest() = default;
  /// parents[i - 1] is the parent of i (or i itself for a root).
  /// Throws InputError for out-of-range entries or cycles.
  explicit PForest(std::vector<int> parents);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int i) const { return parent_[static_cast<std::size_t>(i - 1)]; }
  bool is_root(int i) const { return parent(i) == i; }
  const std::vector<int>& parents() const { return parent_; }
  std::vector<int> children(int i) const;

  /// Subtree rooted at i, i.e. {j : j <=_F i}.
  ElementSet subtree(int i) const;
  /// The forest order as a poset (child covered by parent).
  Poset as_poset() const;

  friend bool operator==(const PForest&, const PForest&) = default;
  friend auto operator<=>(const PForest&, const PForest&) = default;

 private:
  std::vector<int> parent_;
};

/// {i : parent(i) < i}.
std::vector<int> forest_descents(const PForest& f);

/// Checks both P-forest conditions; on failure writes a reason when why != nullptr.
bool is_pforest(const Poset& p, const PForest& f, std::string* why = nullptr);

/// F -> {subtree(1), ..., subtree(n)}. Throws InputError if f is not a P-forest.
MaxIndSet phi(const Poset& p, const PForest& f);

/// M -> F_M: the parent of label i is the label of the smallest member of m
/// strictly containing the member labelled i. Throws TheoremViolation if the
/// result is not a P-forest.
PForest psi(const Poset& p, const MaxIndSet& m);

/// All P-forests as psi over every global maximum independent set, sorted.
std::vector<PForest> enumerate_pforests(const Poset& p, const IdealGraph& g, const MisCatalog& catalog,
                                        std::size_t cap = kDefaultMisCap);

struct DescentData {
  std::vector<int> element_descents;  // increasing
  std::vector<Ideal> ideal_descents;  // canonical order

  friend bool operator==(const DescentData&, const DescentData&) = default;
};

/// Des(M) and its ideal-level version. Computes the descents both through
/// psi and through the cover relation of m by inclusion; throws
/// TheoremViolation if they disagree.
DescentData mis_descents(const Poset& p, const MaxIndSet& m);

/// Des(M_r, M) for a specific global extension m of mr.
DescentData restricted_descents(const Poset& p, const MaxIndSet& m, const MaxIndSet& mr);

/// Des(M_r) for a naturally labelled poset. Uses the canonically first
/// extension of mr; with verify_all_extensions every extension is computed and
/// compared. Throws InputError for non-natural posets.
DescentData component_descents(const Poset& p, const IdealGraph& g, const MisCatalog& catalog, int r,
                               const MaxIndSet& mr, bool verify_all_extensions = false);

struct DecompositionReport {
  std::vector<std::size_t> per_forest;
  std::size_t total = 0;
  std::size_t poset_extensions = 0;
};

/// Checks that the linear extensions of the given forests partition L(P).
/// Throws CapExceeded past cap extensions and TheoremViolation on overlap or a gap.
DecompositionReport verify_decomposition(const Poset& p, std::span<const PForest> forests, std::size_t cap);

/// Indented tree rendering, one node per line, roots in increasing order.
std::string render_forest(const PForest& f);

}  // namespace pfactor
