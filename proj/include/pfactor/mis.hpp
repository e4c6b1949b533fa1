#pragma once

#include <cstddef>
#include <vector>

#include "pfactor/element_set.hpp"
#include "pfactor/ideal_graph.hpp"
#include "pfactor/poset.hpp"

namespace pfactor {

inline constexpr std::size_t kDefaultMisCap = 100'000;
inline constexpr int kGlobalScope = -1;

/// A maximum independent set of G_P (scope == kGlobalScope) or of one of its
/// components. Members are kept in canonical ideal order.
struct MaxIndSet {
  std::vector<Ideal> ideals;
  int scope = kGlobalScope;

  bool is_global() const { return scope == kGlobalScope; }
  int size() const { return static_cast<int>(ideals.size()); }
  bool contains(const Ideal& j) const;
  /// Position of j in ideals; throws InputError for non-members.
  int position_of(const Ideal& j) const;

  friend bool operator==(const MaxIndSet&, const MaxIndSet&) = default;
};

/// Union of the members of m strictly contained in j.
Ideal mu(const MaxIndSet& m, const Ideal& j);

/// Inclusion-maximal members strictly inside j. Throws TheoremViolation if two
/// of them meet.
std::vector<Ideal> u_max(const MaxIndSet& m, const Ideal& j);

/// a is strictly inside b with no member of m strictly between them.
bool prec(const MaxIndSet& m, const Ideal& a, const Ideal& b);

/// The bijection J -> j with J \ mu(m, J) = {j} for a global maximum independent set.
struct LabelMap {
  std::vector<int> label_of_member;  // aligned with MaxIndSet::ideals
  std::vector<int> member_of_label;  // index label - 1

  int label(int member) const { return label_of_member[static_cast<std::size_t>(member)]; }
  int member(int label) const { return member_of_label[static_cast<std::size_t>(label - 1)]; }
};

/// Throws TheoremViolation when a difference is not a singleton, its element is
/// not maximal in J, or two members share a label.
LabelMap label_map(const Poset& p, const MaxIndSet& m);

/// Every maximum independent set of component r, sorted canonically.
std::vector<MaxIndSet> enumerate_component_mis(const IdealGraph& g, int r, std::size_t cap = kDefaultMisCap);

/// Per-component maximum independent sets for all of G_P.
class MisCatalog {
 public:
  MisCatalog() = default;
  explicit MisCatalog(std::vector<std::vector<MaxIndSet>> per_component) : per_component_(std::move(per_component)) {}

  int component_count() const { return static_cast<int>(per_component_.size()); }
  const std::vector<MaxIndSet>& component(int r) const { return per_component_[static_cast<std::size_t>(r)]; }
  int mis_size(int r) const { return component(r).front().size(); }
  /// Product of the per-component counts, saturating at SIZE_MAX.
  std::size_t global_count() const;

  /// Union of one choice per component (choice[r] indexes component(r)).
  MaxIndSet assemble(const std::vector<int>& choice) const;

 private:
  std::vector<std::vector<MaxIndSet>> per_component_;
};

MisCatalog enumerate_all_component_mis(const IdealGraph& g, std::size_t cap_per_component = kDefaultMisCap);

/// Cartesian product of the per-component lists, in odometer order with the
/// last component varying fastest. Throws CapExceeded beyond cap.
std::vector<MaxIndSet> enumerate_global_mis(const MisCatalog& catalog, std::size_t cap);
std::vector<MaxIndSet> enumerate_global_mis(const IdealGraph& g, std::size_t cap = kDefaultMisCap);

ComponentSummary summarize_component(const IdealGraph& g, const MisCatalog& catalog, int r);

}  // namespace pfactor
