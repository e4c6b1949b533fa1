#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pfactor/element_set.hpp"
#include "pfactor/forests.hpp"
#include "pfactor/genfun.hpp"
#include "pfactor/poset.hpp"

// Brute-force reference implementations. Everything in namespace oracle works
// from poset-core primitives alone so it can check the fast paths without
// sharing code with them.
namespace pfactor::oracle {

inline constexpr std::size_t kExtensionCap = 5'000'000;
inline constexpr int kForestMaxN = 8;
inline constexpr int kSubsetMaxVertices = 20;
inline constexpr int kSubsetMaxElements = 20;
inline constexpr int kSeriesMaxDegree = 8;

/// Sum of q^maj(w) over all linear extensions.
QPoly maj_polynomial(const Poset& p, std::size_t cap = kExtensionCap);

/// Number of linear extensions by direct enumeration.
std::size_t count_extensions(const Poset& p, std::size_t cap = kExtensionCap);

/// Counts P-partitions f with sum f <= degree_bound, keyed by (f(1), ..., f(n)).
MonomialCoeffs ppartition_coeffs(const Poset& p, int degree_bound, std::size_t cap = 2'000'000);

/// All P-forests by filtering every rooted forest on {1..n}; n <= kForestMaxN.
std::vector<PForest> pforests(const Poset& p);

/// Connected order ideals by scanning all 2^n subsets; n <= kSubsetMaxElements.
std::vector<Ideal> connected_ideals(const Poset& p);

/// Maximum independent sets by subset search over the given vertices, using
/// nontrivial intersection as the edge rule; at most kSubsetMaxVertices.
/// Each set is returned in canonical order; the list is sorted.
std::vector<std::vector<Ideal>> global_mis(const std::vector<Ideal>& vertices);

/// Sum over forests of x^{Des ideals} / prod_j (1 - x^{subtree(j)}) as a single
/// factor, ready for expand_series.
FactoredGF forest_sum(const std::vector<PForest>& forests, int n);

}  // namespace pfactor::oracle

namespace pfactor {

/// Random poset on {1..n}: each pair of positions (a, b), a < b, in a random
/// permutation becomes a relation with probability density. natural keeps the
/// identity permutation. Deterministic in seed on every platform.
Poset random_poset(int n, double density, std::uint64_t seed, bool natural);

struct VerifyBudgets {
  std::size_t max_ideals = kDefaultIdealCap;
  std::size_t max_mis = kDefaultMisCap;
  std::size_t max_extensions = oracle::kExtensionCap;
  int series_degree = 4;
  std::size_t max_series_monomials = 50'000;
  /// Theorem-level extension independence is checked over all extensions only
  /// when the global MIS count is at most this.
  std::size_t max_extension_checks = 50;
  /// The forest decomposition stores every extension, so it has its own cap.
  std::size_t max_decomposition_extensions = 200'000;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string details;
  double millis = 0.0;
};

struct VerificationReport {
  int n = 0;
  std::size_t cover_count = 0;
  bool naturally_labeled = false;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every identity in scope against its oracle. Failures are report
/// entries, never exceptions.
VerificationReport verify_all(const Poset& p, const VerifyBudgets& budgets = {});

}  // namespace pfactor
