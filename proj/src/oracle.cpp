#include "pfactor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>

#include "pfactor/errors.hpp"

namespace pfactor::oracle {

QPoly maj_polynomial(const Poset& p, std::size_t cap) {
  const int n = p.size();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  std::size_t seen = 0;
  bool overflow = false;
  for_each_linear_extension(p, [&](std::span<const int> w) {
    if (seen == cap) {
      overflow = true;
      return false;
    }
    ++seen;
    int maj = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) maj += static_cast<int>(i) + 1;
    ++counts[static_cast<std::size_t>(maj)];
    return true;
  });
  if (overflow) throw CapExceeded("oracle linear extension enumeration", cap, seen);
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return QPoly(std::move(coeffs));
}

std::size_t count_extensions(const Poset& p, std::size_t cap) {
  std::size_t seen = 0;
  bool overflow = false;
  for_each_linear_extension(p, [&](std::span<const int>) {
    if (seen == cap) {
      overflow = true;
      return false;
    }
    ++seen;
    return true;
  });
  if (overflow) throw CapExceeded("oracle linear extension enumeration", cap, seen);
  return seen;
}

MonomialCoeffs ppartition_coeffs(const Poset& p, int degree_bound, std::size_t cap) {
  if (degree_bound < 0 || degree_bound > kSeriesMaxDegree)
    throw InputError("oracle degree bound must lie in 0.." + std::to_string(kSeriesMaxDegree));
  const int n = p.size();
  std::vector<std::pair<int, int>> strict_pairs;  // i <_P j
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (p.less(i, j)) strict_pairs.push_back({i, j});

  MonomialCoeffs out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  std::size_t visited = 0;
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == n) {
      if (++visited > cap) throw CapExceeded("oracle P-partition enumeration", cap, visited - 1);
      for (const auto& [i, j] : strict_pairs) {
        const int fi = f[static_cast<std::size_t>(i - 1)], fj = f[static_cast<std::size_t>(j - 1)];
        if (fi < fj) return;
        if (i > j && fi == fj) return;
      }
      out[f] += 1;
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      f[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, budget - v);
    }
    f[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, degree_bound);
  return out;
}

namespace {

bool hasse_connected(const Poset& p, const ElementSet& s) {
  if (s.empty()) return false;
  ElementSet reached(p.size());
  reached.insert(s.first());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [a, b] : p.covers()) {
      if (!s.contains(a) || !s.contains(b)) continue;
      if (reached.contains(a) != reached.contains(b)) {
        reached.insert(a);
        reached.insert(b);
        grew = true;
      }
    }
  }
  return reached == s;
}

bool down_closed(const Poset& p, const ElementSet& s) {
  for (const auto& [a, b] : p.covers())
    if (s.contains(b) && !s.contains(a)) return false;
  return true;
}

}  // namespace

std::vector<PForest> pforests(const Poset& p) {
  const int n = p.size();
  if (n > kForestMaxN) throw InputError("forest oracle supports at most " + std::to_string(kForestMaxN) + " elements");
  std::vector<ElementSet> strictly_above(static_cast<std::size_t>(n), ElementSet(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (p.less(i, j)) strictly_above[static_cast<std::size_t>(i - 1)].insert(j);

  std::vector<PForest> out;
  std::vector<int> parent(static_cast<std::size_t>(n), 0);

  auto creates_cycle = [&](int i) {
    int v = parent[static_cast<std::size_t>(i - 1)];
    for (int steps = 0; steps <= n; ++steps) {
      if (v == i) return true;
      if (v == 0 || parent[static_cast<std::size_t>(v - 1)] == v || parent[static_cast<std::size_t>(v - 1)] == 0) return false;
      v = parent[static_cast<std::size_t>(v - 1)];
    }
    return true;
  };

  auto check = [&]() {
    // ancestors[i] = {j : i <=_F j}
    std::vector<ElementSet> ancestors(static_cast<std::size_t>(n), ElementSet(n));
    for (int i = 1; i <= n; ++i) {
      int v = i;
      ancestors[static_cast<std::size_t>(i - 1)].insert(v);
      while (parent[static_cast<std::size_t>(v - 1)] != v) {
        v = parent[static_cast<std::size_t>(v - 1)];
        ancestors[static_cast<std::size_t>(i - 1)].insert(v);
      }
    }
    std::vector<ElementSet> subtree(static_cast<std::size_t>(n), ElementSet(n));
    for (int i = 1; i <= n; ++i)
      ancestors[static_cast<std::size_t>(i - 1)].for_each([&](int a) { subtree[static_cast<std::size_t>(a - 1)].insert(i); });
    for (int i = 1; i <= n; ++i) {
      const auto& s = subtree[static_cast<std::size_t>(i - 1)];
      if (!down_closed(p, s) || !hasse_connected(p, s)) return false;
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (ancestors[static_cast<std::size_t>(i - 1)].contains(j) || ancestors[static_cast<std::size_t>(j - 1)].contains(i))
          continue;
        const ElementSet u = subtree[static_cast<std::size_t>(i - 1)] | subtree[static_cast<std::size_t>(j - 1)];
        if (!down_closed(p, u) || hasse_connected(p, u)) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      if (check()) out.emplace_back(parent);
      return;
    }
    const ElementSet& above = strictly_above[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= n; ++j) {
      if (j == i) {
        // Only P-maximal elements can be roots: every element above i must be an F-ancestor.
        if (!above.empty()) continue;
      } else {
        if (p.less(j, i)) continue;
        bool blocked = false;
        above.for_each([&](int b) {
          if (p.less(b, j)) blocked = true;
        });
        if (blocked) continue;
      }
      parent[static_cast<std::size_t>(i - 1)] = j;
      if (j != i && creates_cycle(i)) continue;
      self(self, i + 1);
    }
    parent[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> connected_ideals(const Poset& p) {
  const int n = p.size();
  if (n > kSubsetMaxElements)
    throw InputError("subset oracle supports at most " + std::to_string(kSubsetMaxElements) + " elements");
  std::vector<Ideal> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    ElementSet s(n);
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1u) s.insert(k + 1);
    if (down_closed(p, s) && hasse_connected(p, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<std::vector<Ideal>> global_mis(const std::vector<Ideal>& vertices) {
  const int count = static_cast<int>(vertices.size());
  if (count > kSubsetMaxVertices)
    throw InputError("subset oracle supports at most " + std::to_string(kSubsetMaxVertices) + " vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(count), 0);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      const Ideal& x = vertices[static_cast<std::size_t>(a)];
      const Ideal& y = vertices[static_cast<std::size_t>(b)];
      const bool meet = !(x & y).empty();
      const bool nested = (x - y).empty() || (y - x).empty();
      if (meet && !nested) adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
    }
  }
  int best = -1;
  std::vector<std::uint32_t> winners;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    const auto m = static_cast<std::uint32_t>(mask);
    bool independent = true;
    for (int a = 0; a < count && independent; ++a)
      if ((m >> a & 1u) && (adj[static_cast<std::size_t>(a)] & m)) independent = false;
    if (!independent) continue;
    const int size = std::popcount(m);
    if (size > best) {
      best = size;
      winners.clear();
    }
    if (size == best) winners.push_back(m);
  }
  std::vector<std::vector<Ideal>> out;
  for (auto m : winners) {
    std::vector<Ideal> set;
    for (int a = 0; a < count; ++a)
      if (m >> a & 1u) set.push_back(vertices[static_cast<std::size_t>(a)]);
    std::sort(set.begin(), set.end(), canonical_less);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), canonical_less);
  });
  return out;
}

FactoredGF forest_sum(const std::vector<PForest>& forests, int n) {
  FactoredGF gf;
  gf.n = n;
  GFFactor factor;
  for (const auto& f : forests) {
    GFTerm term;
    for (int i = 1; i <= n; ++i) {
      term.denominator_ideals.push_back(f.subtree(i));
      if (!f.is_root(i) && f.parent(i) < i) term.numerator_ideals.push_back(f.subtree(i));
    }
    factor.terms.push_back(std::move(term));
  }
  gf.factors.push_back(std::move(factor));
  return gf;
}

}  // namespace pfactor::oracle

namespace pfactor {

Poset random_poset(int n, double density, std::uint64_t seed, bool natural) {
  if (n < 1) throw InputError("random poset needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k + 1;
  if (!natural) {
    for (int k = n - 1; k > 0; --k) {
      const auto pick = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
      std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(pick)]);
    }
  }
  std::vector<Cover> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) pairs.push_back({order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]});
    }
  }
  return build_poset(n, pairs);
}

}  // namespace pfactor
