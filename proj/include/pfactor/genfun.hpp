#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pfactor/element_set.hpp"
#include "pfactor/ideal_graph.hpp"
#include "pfactor/mis.hpp"
#include "pfactor/poset.hpp"

namespace pfactor {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial in q with exact integer coefficients.
/// coeffs()[k] is the coefficient of q^k; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(const BigInt& c);
  static QPoly monomial(int power, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const;
  BigInt value_at_one() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  struct DivResult;
  /// Long division over the integers. The divisor's leading coefficient must
  /// divide every intermediate leading term; otherwise InputError.
  static DivResult divide(const QPoly& num, const QPoly& den);

  /// "c0 + c1*q + c2*q^2 + ...", lowest degree first; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct QPoly::DivResult {
  QPoly quotient;
  QPoly remainder;
};

/// 1 - q^i. The bracket follows the product-formula convention, not the
/// usual q-integer 1 + q + ... + q^{i-1}.
QPoly q_bracket(int i);
/// prod_{i=1..m} (1 - q^i).
QPoly q_factorial(int m);

/// One summand: coefficient * prod x^J (numerator) / prod (1 - x^J) (denominator).
struct GFTerm {
  long coefficient = 1;
  std::vector<Ideal> numerator_ideals;
  std::vector<Ideal> denominator_ideals;

  friend bool operator==(const GFTerm&, const GFTerm&) = default;
};

/// A sum of terms contributed by one component of G_P.
struct GFFactor {
  int component = 0;
  std::vector<GFTerm> terms;

  friend bool operator==(const GFFactor&, const GFFactor&) = default;
};

/// F_P(x) as an unexpanded product of per-component sums.
struct FactoredGF {
  int n = 0;
  std::vector<GFFactor> factors;

  friend bool operator==(const FactoredGF&, const FactoredGF&) = default;
};

/// Product over components of sum over M_r of x^{Des-bar(M_r)} / prod_{J in M_r} (1 - x^J).
/// Throws InputError if p is not naturally labelled.
FactoredGF factored_fpx(const Poset& p, const IdealGraph& g, const MisCatalog& catalog,
                        bool verify_all_extensions = false);

/// Factored form for forests with duplications: every two-vertex component
/// {J_a, J_b} contributes (1 - x^{J_a} x^{J_b}) / ((1 - x^{J_a})(1 - x^{J_b}))
/// and every isolated vertex 1 / (1 - x^J). Throws InputError when G_P has a
/// vertex of degree two or more, or p is not naturally labelled.
FactoredGF fpx_duplication_path(const Poset& p, const IdealGraph& g);

/// Sum over linear extensions of q^maj, from the factored form. Every division
/// is exact; a nonzero remainder raises TheoremViolation.
QPoly fpq(const Poset& p, const FactoredGF& gf);

/// n! * prod_r sum_{M_r} 1 / prod_{J in M_r} |J|. Valid for any labelling.
/// Throws TheoremViolation if the result is not an integer.
BigInt count_linear_extensions(const Poset& p, const IdealGraph& g, const MisCatalog& catalog);
BigInt count_linear_extensions(const Poset& p);

/// Exponent vector (length n) -> coefficient; zero coefficients are omitted.
using MonomialCoeffs = std::map<std::vector<int>, BigInt>;

inline constexpr std::size_t kDefaultSeriesCap = 2'000'000;

/// All monomials of total degree <= degree_bound in the power series of gf.
/// Throws CapExceeded when more than cap monomials are live at once.
MonomialCoeffs expand_series(const FactoredGF& gf, int degree_bound, std::size_t cap = kDefaultSeriesCap);

/// Human-readable product, e.g. "(1 - x1 x3 x4 x6)/((1 - x1 x3 x4 x6)(1 - x4 x5 x6))".
std::string pretty(const FactoredGF& gf);

}  // namespace pfactor
