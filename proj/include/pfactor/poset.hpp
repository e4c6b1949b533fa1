#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfactor/element_set.hpp"

namespace pfactor {

/// (a, b) with a covered by b.
using Cover = std::pair<int, int>;
/// A permutation word w_1...w_n over {1..n}.
using Word = std::vector<int>;
/// relabel[old - 1] == new label.
using Permutation = std::vector<int>;

/// A finite poset on {1..n}, immutable after construction.
///
/// Stores the transitively reduced cover relation together with the
/// principal down-set and up-set of every element, so comparability and
/// ideal primitives are bitset operations.
class Poset {
 public:
  int size() const { return n_; }
  const std::vector<Cover>& covers() const { return covers_; }

  bool leq(int a, int b) const { return down_[static_cast<std::size_t>(b - 1)].contains(a); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// The principal ideal {k : k <= i}.
  const ElementSet& down_set(int i) const { return down_[static_cast<std::size_t>(i - 1)]; }
  /// {k : i <= k}.
  const ElementSet& up_set(int i) const { return up_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& lower_covers(int i) const { return lower_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& upper_covers(int i) const { return upper_[static_cast<std::size_t>(i - 1)]; }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet ground_set() const { return ElementSet::full(n_); }

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.covers_ == b.covers_; }

 private:
  friend struct PosetBuilder;

  int n_ = 0;
  std::vector<Cover> covers_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
};

struct BuildReport {
  /// Input pairs dropped because they were duplicates or transitively implied.
  std::vector<Cover> dropped;
  std::vector<std::string> warnings;
};

struct BuiltPoset {
  Poset poset;
  BuildReport report;
};

/// Builds a poset from order pairs (a, b) meaning a <_P b. Transitively implied
/// pairs are reduced away and recorded in the report.
/// Throws InputError for n < 1, out-of-range elements, or cycles.
BuiltPoset build_poset_with_report(int n, std::span<const Cover> pairs);
Poset build_poset(int n, std::span<const Cover> pairs);
inline Poset build_poset(int n, std::initializer_list<Cover> pairs) {
  return build_poset(n, std::span<const Cover>(pairs.begin(), pairs.size()));
}

bool is_naturally_labeled(const Poset& p);

/// Applies relabel (old -> new) to every cover.
Poset relabel(const Poset& p, const Permutation& relabel);

/// Relabels by the lexicographically smallest linear extension: its k-th
/// letter becomes k. Identity when p is already natural.
std::pair<Poset, Permutation> natural_relabel(const Poset& p);

Ideal principal_ideal(const Poset& p, int i);

bool is_down_closed(const Poset& p, const ElementSet& s);

/// Connectivity of the Hasse diagram restricted to j. The empty ideal is not
/// connected. Throws InputError if j is not down-closed.
bool is_connected_ideal(const Poset& p, const Ideal& j);

/// Maximal elements of a nonempty ideal.
ElementSet generating_set(const Poset& p, const Ideal& j);

/// Visits every linear extension in lexicographic order. Return false from the
/// visitor to stop early.
void for_each_linear_extension(const Poset& p, const std::function<bool(std::span<const int>)>& visit);

/// All linear extensions; throws CapExceeded when there are more than cap.
std::vector<Word> linear_extensions(const Poset& p, std::size_t cap);

bool is_linear_extension(const Poset& p, std::span<const int> w);

/// Positions i (1-based) with w_i > w_{i+1}.
std::vector<int> descent_set(std::span<const int> w);
int major_index(std::span<const int> w);

}  // namespace pfactor
