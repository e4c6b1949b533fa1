#pragma once

#include <bit>
#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pfactor {

/// A subset of {1..n} stored as a bit-vector (element k lives in bit k-1).
///
/// Universes up to 64 elements fit in one inline word; larger universes spill
/// to the heap transparently. Ordering compares the bitmask as an unsigned
/// integer, so it is total and deterministic.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  ElementSet(int universe, std::initializer_list<int> elements) : ElementSet(universe) {
    for (int e : elements) insert(e);
  }
  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int e = 1; e <= universe; ++e) s.insert(e);
    return s;
  }
  static ElementSet from(int universe, const std::vector<int>& elements) {
    ElementSet s(universe);
    for (int e : elements) s.insert(e);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int e) const {
    const int b = e - 1;
    return (words_[b >> 6] >> (b & 63)) & 1u;
  }
  void insert(int e) {
    const int b = e - 1;
    words_[b >> 6] |= std::uint64_t{1} << (b & 63);
  }
  void erase(int e) {
    const int b = e - 1;
    words_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
  }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool is_proper_subset_of(const ElementSet& other) const {
    return is_subset_of(other) && *this != other;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  /// Calls f(e) for each member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64) + bit + 1);
        w &= w - 1;
      }
    }
  }
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }
  /// Smallest member, or 0 when empty.
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]) + 1;
    return 0;
  }

  /// "{1,3,4,6}"
  std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](int e) {
      if (!first_elem) s += ',';
      s += std::to_string(e);
      first_elem = false;
    });
    return s + "}";
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.words_ == b.words_; }
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (a.words_[k] != b.words_[k]) return a.words_[k] <=> b.words_[k];
    return std::strong_ordering::equal;
  }

 private:
  static std::size_t word_count(int universe) {
    return universe <= 0 ? 1 : static_cast<std::size_t>((universe + 63) / 64);
  }

  int universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_ = {0};
};

/// Order ideals carry no poset reference; down-closure is checked against a Poset on demand.
using Ideal = ElementSet;

/// Canonical ideal order used by every enumeration: size first, then bitmask value.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace pfactor
