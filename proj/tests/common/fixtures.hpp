#pragma once

#include <string>
#include <vector>

#include "pfactor/element_set.hpp"
#include "pfactor/io.hpp"
#include "pfactor/oracle.hpp"
#include "pfactor/poset.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(PFACTOR_FIXTURE_DIR) + "/" + name; }

inline pfactor::Poset fig1() { return pfactor::read_poset_file(path("fig1.poset")).poset; }
inline pfactor::Poset fig5() { return pfactor::read_poset_file(path("fig5.poset")).poset; }

inline pfactor::Poset chain(int n) {
  std::vector<pfactor::Cover> c;
  for (int i = 1; i < n; ++i) c.push_back({i, i + 1});
  return pfactor::build_poset(n, c);
}

inline pfactor::Poset antichain(int n) { return pfactor::build_poset(n, std::vector<pfactor::Cover>{}); }

inline pfactor::Ideal set(int n, std::initializer_list<int> elems) { return pfactor::Ideal(n, elems); }

struct CorpusEntry {
  int n;
  double density;
  std::uint64_t seed;
  pfactor::Poset poset;
};

// 200 naturally labelled posets with 2 <= n <= 7 at densities 0.2 and 0.4.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (int k = 0; k < 200; ++k) {
      const int n = 2 + k % 6;
      const double density = (k / 6) % 2 == 0 ? 0.2 : 0.4;
      const std::uint64_t seed = 7000 + static_cast<std::uint64_t>(k);
      out.push_back({n, density, seed, pfactor::random_poset(n, density, seed, true)});
    }
    return out;
  }();
  return entries;
}

inline std::string describe(const CorpusEntry& e) {
  return "n=" + std::to_string(e.n) + " density=" + std::to_string(e.density) + " seed=" + std::to_string(e.seed);
}

}  // namespace fixtures
