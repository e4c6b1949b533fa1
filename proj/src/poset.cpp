#include "pfactor/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pfactor/errors.hpp"

namespace pfactor {

struct PosetBuilder {
  static BuiltPoset build(int n, std::span<const Cover> pairs) {
    if (n < 1) throw InputError("poset must have at least one element (got n = " + std::to_string(n) + ")");
    BuildReport report;

    std::set<Cover> unique;
    for (const auto& [a, b] : pairs) {
      if (a < 1 || a > n || b < 1 || b > n)
        throw InputError("element out of range in pair (" + std::to_string(a) + ", " + std::to_string(b) +
                         "); expected 1.." + std::to_string(n));
      if (a == b) throw InputError("cycle detected: element " + std::to_string(a) + " below itself");
      if (!unique.insert({a, b}).second) {
        report.dropped.push_back({a, b});
        report.warnings.push_back("duplicate pair " + std::to_string(a) + " < " + std::to_string(b) + " ignored");
      }
    }

    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : unique) {
      succ[static_cast<std::size_t>(a - 1)].push_back(b);
      ++indegree[static_cast<std::size_t>(b - 1)];
    }

    // Kahn's algorithm; leftover vertices sit on a cycle.
    std::vector<int> topo;
    topo.reserve(static_cast<std::size_t>(n));
    std::queue<int> ready;
    for (int v = 1; v <= n; ++v)
      if (indegree[static_cast<std::size_t>(v - 1)] == 0) ready.push(v);
    while (!ready.empty()) {
      const int v = ready.front();
      ready.pop();
      topo.push_back(v);
      for (int w : succ[static_cast<std::size_t>(v - 1)])
        if (--indegree[static_cast<std::size_t>(w - 1)] == 0) ready.push(w);
    }
    if (static_cast<int>(topo.size()) != n) {
      std::string members;
      for (int v = 1; v <= n; ++v)
        if (indegree[static_cast<std::size_t>(v - 1)] > 0) members += (members.empty() ? "" : ",") + std::to_string(v);
      throw InputError("cycle detected among elements {" + members + "}");
    }

    Poset p;
    p.n_ = n;
    p.down_.assign(static_cast<std::size_t>(n), ElementSet(n));
    p.up_.assign(static_cast<std::size_t>(n), ElementSet(n));
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
    for (const auto& [a, b] : unique) pred[static_cast<std::size_t>(b - 1)].push_back(a);
    for (int v : topo) {
      auto& d = p.down_[static_cast<std::size_t>(v - 1)];
      d.insert(v);
      for (int u : pred[static_cast<std::size_t>(v - 1)]) d |= p.down_[static_cast<std::size_t>(u - 1)];
    }
    for (int b = 1; b <= n; ++b)
      p.down_[static_cast<std::size_t>(b - 1)].for_each([&](int a) { p.up_[static_cast<std::size_t>(a - 1)].insert(b); });

    // (a, b) is a cover iff nothing lies strictly between.
    p.lower_.assign(static_cast<std::size_t>(n), {});
    p.upper_.assign(static_cast<std::size_t>(n), {});
    for (int b = 1; b <= n; ++b) {
      ElementSet below = p.down_set(b);
      below.erase(b);
      below.for_each([&](int a) {
        ElementSet between = p.up_set(a) & below;
        between.erase(a);
        if (between.empty()) p.covers_.push_back({a, b});
      });
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    for (const auto& [a, b] : p.covers_) {
      p.upper_[static_cast<std::size_t>(a - 1)].push_back(b);
      p.lower_[static_cast<std::size_t>(b - 1)].push_back(a);
    }
    for (auto& v : p.upper_) std::sort(v.begin(), v.end());
    for (auto& v : p.lower_) std::sort(v.begin(), v.end());

    for (const auto& c : unique) {
      if (!std::binary_search(p.covers_.begin(), p.covers_.end(), c)) {
        report.dropped.push_back(c);
        report.warnings.push_back("pair " + std::to_string(c.first) + " < " + std::to_string(c.second) +
                                  " is transitively implied; dropped");
      }
    }
    return {std::move(p), std::move(report)};
  }
};

BuiltPoset build_poset_with_report(int n, std::span<const Cover> pairs) { return PosetBuilder::build(n, pairs); }

Poset build_poset(int n, std::span<const Cover> pairs) { return PosetBuilder::build(n, pairs).poset; }

bool is_naturally_labeled(const Poset& p) {
  return std::all_of(p.covers().begin(), p.covers().end(), [](const Cover& c) { return c.first < c.second; });
}

Poset relabel(const Poset& p, const Permutation& map) {
  const int n = p.size();
  if (static_cast<int>(map.size()) != n) throw InputError("relabeling has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : map) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) throw InputError("relabeling is not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  std::vector<Cover> covers;
  covers.reserve(p.covers().size());
  for (const auto& [a, b] : p.covers())
    covers.push_back({map[static_cast<std::size_t>(a - 1)], map[static_cast<std::size_t>(b - 1)]});
  return build_poset(n, covers);
}

std::pair<Poset, Permutation> natural_relabel(const Poset& p) {
  Word first;
  for_each_linear_extension(p, [&](std::span<const int> w) {
    first.assign(w.begin(), w.end());
    return false;
  });
  Permutation map(static_cast<std::size_t>(p.size()));
  for (std::size_t k = 0; k < first.size(); ++k) map[static_cast<std::size_t>(first[k] - 1)] = static_cast<int>(k) + 1;
  return {relabel(p, map), map};
}

Ideal principal_ideal(const Poset& p, int i) {
  if (i < 1 || i > p.size())
    throw InputError("element " + std::to_string(i) + " out of range 1.." + std::to_string(p.size()));
  return p.down_set(i);
}

bool is_down_closed(const Poset& p, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](int i) {
    if (!p.down_set(i).is_subset_of(s)) ok = false;
  });
  return ok;
}

bool is_connected_ideal(const Poset& p, const Ideal& j) {
  if (!is_down_closed(p, j)) throw InputError("set " + j.to_string() + " is not an order ideal");
  if (j.empty()) return false;
  ElementSet seen(p.size());
  std::vector<int> stack{j.first()};
  seen.insert(j.first());
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (j.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    };
    for (int w : p.lower_covers(v)) visit(w);
    for (int w : p.upper_covers(v)) visit(w);
  }
  return seen == j;
}

ElementSet generating_set(const Poset& p, const Ideal& j) {
  if (j.empty()) throw InputError("generating set of the empty ideal is undefined");
  ElementSet gs(p.size());
  j.for_each([&](int i) {
    ElementSet above = p.up_set(i) & j;
    above.erase(i);
    if (above.empty()) gs.insert(i);
  });
  return gs;
}

namespace {

struct ExtensionWalker {
  const Poset& p;
  const std::function<bool(std::span<const int>)>& visit;
  std::vector<int> word;
  std::vector<int> pending;  // number of unplaced lower covers
  bool stopped = false;

  void run(int depth) {
    const int n = p.size();
    if (depth == n) {
      if (!visit(word)) stopped = true;
      return;
    }
    for (int v = 1; v <= n && !stopped; ++v) {
      if (pending[static_cast<std::size_t>(v - 1)] != 0) continue;
      pending[static_cast<std::size_t>(v - 1)] = -1;
      for (int u : p.upper_covers(v)) --pending[static_cast<std::size_t>(u - 1)];
      word[static_cast<std::size_t>(depth)] = v;
      run(depth + 1);
      for (int u : p.upper_covers(v)) ++pending[static_cast<std::size_t>(u - 1)];
      pending[static_cast<std::size_t>(v - 1)] = 0;
    }
  }
};

}  // namespace

void for_each_linear_extension(const Poset& p, const std::function<bool(std::span<const int>)>& visit) {
  ExtensionWalker walker{p, visit, std::vector<int>(static_cast<std::size_t>(p.size())),
                         std::vector<int>(static_cast<std::size_t>(p.size()))};
  for (int v = 1; v <= p.size(); ++v)
    walker.pending[static_cast<std::size_t>(v - 1)] = static_cast<int>(p.lower_covers(v).size());
  walker.run(0);
}

std::vector<Word> linear_extensions(const Poset& p, std::size_t cap) {
  std::vector<Word> out;
  bool overflow = false;
  for_each_linear_extension(p, [&](std::span<const int> w) {
    if (out.size() == cap) {
      overflow = true;
      return false;
    }
    out.emplace_back(w.begin(), w.end());
    return true;
  });
  if (overflow) throw CapExceeded("linear extension enumeration", cap, out.size());
  return out;
}

bool is_linear_extension(const Poset& p, std::span<const int> w) {
  const int n = p.size();
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 1 || w[k] > n || pos[static_cast<std::size_t>(w[k] - 1)] != 0) return false;
    pos[static_cast<std::size_t>(w[k] - 1)] = static_cast<int>(k) + 1;
  }
  for (const auto& [a, b] : p.covers())
    if (pos[static_cast<std::size_t>(a - 1)] > pos[static_cast<std::size_t>(b - 1)]) return false;
  return true;
}

std::vector<int> descent_set(std::span<const int> w) {
  std::vector<int> des;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) des.push_back(static_cast<int>(i) + 1);
  return des;
}

int major_index(std::span<const int> w) {
  int maj = 0;
  for (int i : descent_set(w)) maj += i;
  return maj;
}

}  // namespace pfactor
