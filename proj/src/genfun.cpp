#include "pfactor/genfun.hpp"

#include <algorithm>

#include "pfactor/errors.hpp"
#include "pfactor/forests.hpp"

namespace pfactor {

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(int power, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt QPoly::value_at_one() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly::DivResult QPoly::divide(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw InputError("polynomial division by zero");
  std::vector<BigInt> rem = num.coeffs_;
  const int dd = den.degree();
  const BigInt& lead = den.coeffs_.back();
  std::vector<BigInt> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - static_cast<std::size_t>(dd) : 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lead != 0) throw InputError("polynomial division leaves a non-integral quotient");
    const BigInt factor = top / lead;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int t = 0; t <= dd; ++t) rem[static_cast<std::size_t>(k - dd + t)] -= factor * den.coeffs_[static_cast<std::size_t>(t)];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

QPoly q_bracket(int i) {
  QPoly out = QPoly::constant(1);
  return out - QPoly::monomial(i);
}

QPoly q_factorial(int m) {
  QPoly out = QPoly::constant(1);
  for (int i = 1; i <= m; ++i) out = out * q_bracket(i);
  return out;
}

// ---------------------------------------------------------------------------
// Factored forms

FactoredGF factored_fpx(const Poset& p, const IdealGraph& g, const MisCatalog& catalog, bool verify_all_extensions) {
  if (!is_naturally_labeled(p)) throw InputError("the factored generating function requires a naturally labelled poset");
  FactoredGF gf;
  gf.n = p.size();
  for (int r = 0; r < catalog.component_count(); ++r) {
    GFFactor factor;
    factor.component = r;
    for (const auto& mr : catalog.component(r)) {
      const DescentData d = component_descents(p, g, catalog, r, mr, verify_all_extensions);
      factor.terms.push_back(GFTerm{1, d.ideal_descents, mr.ideals});
    }
    gf.factors.push_back(std::move(factor));
  }
  return gf;
}

FactoredGF fpx_duplication_path(const Poset& p, const IdealGraph& g) {
  if (!is_naturally_labeled(p)) throw InputError("the duplication formula requires a naturally labelled poset");
  if (!is_forest_with_duplications(g)) throw InputError("poset is not a forest with duplications");
  FactoredGF gf;
  gf.n = p.size();
  for (int r = 0; r < g.component_count(); ++r) {
    GFFactor factor;
    factor.component = r;
    std::vector<Ideal> members;
    for (int v : g.component(r)) members.push_back(g.vertex(v));
    factor.terms.push_back(GFTerm{1, {}, members});
    if (members.size() == 2) factor.terms.push_back(GFTerm{-1, members, members});
    gf.factors.push_back(std::move(factor));
  }
  return gf;
}

QPoly fpq(const Poset& p, const FactoredGF& gf) {
  if (!is_naturally_labeled(p)) throw InputError("the major index polynomial requires a naturally labelled poset");
  if (gf.n != p.size()) throw InputError("generating function and poset sizes differ");

  QPoly numerator = q_factorial(p.size());
  QPoly denominator = QPoly::constant(1);
  for (const auto& factor : gf.factors) {
    // Common denominator: each bracket size at its highest multiplicity over the terms.
    std::map<int, int> common;
    std::vector<std::map<int, int>> per_term;
    for (const auto& term : factor.terms) {
      std::map<int, int> sizes;
      for (const auto& j : term.denominator_ideals) ++sizes[j.size()];
      for (const auto& [k, mult] : sizes) common[k] = std::max(common[k], mult);
      per_term.push_back(std::move(sizes));
    }
    QPoly factor_num;
    for (std::size_t t = 0; t < factor.terms.size(); ++t) {
      const auto& term = factor.terms[t];
      int weight = 0;
      for (const auto& j : term.numerator_ideals) weight += j.size();
      QPoly piece = QPoly::monomial(weight, term.coefficient);
      for (const auto& [k, mult] : common) {
        auto it = per_term[t].find(k);
        const int have = it == per_term[t].end() ? 0 : it->second;
        for (int e = have; e < mult; ++e) piece = piece * q_bracket(k);
      }
      factor_num += piece;
    }
    numerator = numerator * factor_num;
    for (const auto& [k, mult] : common)
      for (int e = 0; e < mult; ++e) denominator = denominator * q_bracket(k);
  }
  auto [quotient, remainder] = QPoly::divide(numerator, denominator);
  if (!remainder.is_zero()) throw TheoremViolation("major index polynomial division left remainder " + remainder.to_string());
  return quotient;
}

BigInt count_linear_extensions(const Poset& p, const IdealGraph& g, const MisCatalog& catalog) {
  (void)g;
  BigRational product = 1;
  for (int r = 0; r < catalog.component_count(); ++r) {
    BigRational sum = 0;
    for (const auto& mr : catalog.component(r)) {
      BigInt sizes = 1;
      for (const auto& j : mr.ideals) sizes *= j.size();
      sum += BigRational(BigInt(1), sizes);
    }
    product *= sum;
  }
  BigInt factorial = 1;
  for (int i = 2; i <= p.size(); ++i) factorial *= i;
  const BigRational total = product * factorial;
  if (boost::multiprecision::denominator(total) != 1)
    throw TheoremViolation("linear extension count is not an integer");
  return boost::multiprecision::numerator(total);
}

BigInt count_linear_extensions(const Poset& p) {
  const IdealGraph g = build_ideal_graph(p);
  return count_linear_extensions(p, g, enumerate_all_component_mis(g));
}

// ---------------------------------------------------------------------------
// Truncated series

namespace {

// Key layout: [total degree, e_1, ..., e_n]; lexicographic order is degree first.
using SeriesKey = std::vector<int>;
using SeriesMap = std::map<SeriesKey, BigInt>;

void check_cap(const SeriesMap& s, std::size_t cap) {
  if (s.size() > cap) throw CapExceeded("series expansion", cap, s.size());
}

void divide_by_one_minus(SeriesMap& s, const Ideal& j, int bound, std::size_t cap) {
  const int step = j.size();
  const std::vector<int> elems = j.elements();
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it->first[0] + step > bound) continue;
    if (it->second == 0) continue;
    SeriesKey next = it->first;
    next[0] += step;
    for (int e : elems) ++next[static_cast<std::size_t>(e)];
    s[next] += it->second;
    check_cap(s, cap);
  }
}

SeriesMap apply_term(const SeriesMap& acc, const GFTerm& term, int n, int bound, std::size_t cap) {
  SeriesKey shift(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& j : term.numerator_ideals) {
    shift[0] += j.size();
    j.for_each([&](int e) { ++shift[static_cast<std::size_t>(e)]; });
  }
  SeriesMap out;
  for (const auto& [key, c] : acc) {
    if (key[0] + shift[0] > bound) continue;
    SeriesKey moved = key;
    for (std::size_t k = 0; k < moved.size(); ++k) moved[k] += shift[k];
    out.emplace(std::move(moved), c * term.coefficient);
  }
  for (const auto& j : term.denominator_ideals) divide_by_one_minus(out, j, bound, cap);
  return out;
}

}  // namespace

MonomialCoeffs expand_series(const FactoredGF& gf, int degree_bound, std::size_t cap) {
  if (degree_bound < 0) throw InputError("degree bound must be nonnegative");
  const int n = gf.n;
  SeriesMap acc;
  acc.emplace(SeriesKey(static_cast<std::size_t>(n) + 1, 0), 1);
  for (const auto& factor : gf.factors) {
    if (factor.terms.size() == 1) {
      acc = apply_term(acc, factor.terms.front(), n, degree_bound, cap);
      continue;
    }
    SeriesMap next;
    for (const auto& term : factor.terms) {
      for (auto& [key, c] : apply_term(acc, term, n, degree_bound, cap)) next[key] += c;
      check_cap(next, cap);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  MonomialCoeffs out;
  for (auto& [key, c] : acc) {
    if (c == 0) continue;
    out.emplace(std::vector<int>(key.begin() + 1, key.end()), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pretty printing

namespace {

std::string monomial_string(const std::vector<Ideal>& ideals, int n) {
  std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& j : ideals) j.for_each([&](int e) { ++exps[static_cast<std::size_t>(e)]; });
  std::string out;
  for (int k = 1; k <= n; ++k) {
    const int e = exps[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(k);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string denominator_string(const std::vector<Ideal>& ideals, int n) {
  std::string out;
  for (const auto& j : ideals) out += "(1 - " + monomial_string({j}, n) + ")";
  if (ideals.size() > 1) out = "(" + out + ")";
  return out;
}

std::string signed_join(const std::vector<std::pair<long, std::string>>& parts) {
  std::string out;
  for (const auto& [coef, body] : parts) {
    const long mag = coef < 0 ? -coef : coef;
    const std::string scaled = mag == 1 ? body : std::to_string(mag) + (body == "1" ? "" : " " + body);
    if (out.empty())
      out += (coef < 0 ? "-" : "") + scaled;
    else
      out += (coef < 0 ? " - " : " + ") + scaled;
  }
  return out;
}

std::string factor_string(const GFFactor& factor, int n) {
  auto sorted_den = [](std::vector<Ideal> v) {
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
  };
  const auto first_den = sorted_den(factor.terms.front().denominator_ideals);
  const bool shared = std::all_of(factor.terms.begin(), factor.terms.end(),
                                  [&](const GFTerm& t) { return sorted_den(t.denominator_ideals) == first_den; });
  if (shared) {
    std::vector<std::pair<long, std::string>> parts;
    for (const auto& t : factor.terms) parts.push_back({t.coefficient, monomial_string(t.numerator_ideals, n)});
    std::string num = signed_join(parts);
    if (factor.terms.size() > 1) num = "(" + num + ")";
    if (first_den.empty()) return num;
    return num + "/" + denominator_string(first_den, n);
  }
  std::vector<std::pair<long, std::string>> parts;
  for (const auto& t : factor.terms) {
    std::string body = monomial_string(t.numerator_ideals, n);
    if (!t.denominator_ideals.empty()) body += "/" + denominator_string(t.denominator_ideals, n);
    parts.push_back({t.coefficient, body});
  }
  return "[" + signed_join(parts) + "]";
}

}  // namespace

std::string pretty(const FactoredGF& gf) {
  std::string out;
  for (const auto& factor : gf.factors) {
    if (!out.empty()) out += " * ";
    out += factor_string(factor, gf.n);
  }
  return out.empty() ? "1" : out;
}

}  // namespace pfactor
