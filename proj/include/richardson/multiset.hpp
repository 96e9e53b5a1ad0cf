#pragma once
// Finite multisets over the positive integers and over pairs of positive
// integers, with the termwise order, the formal-difference comparison and
// the coordinate-swap involution.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "richardson/error.hpp"

namespace richardson {

enum class Sign { negative, vanishing, positive };

/// A point (e, f) of ℕ²; e is the row coordinate, f the column coordinate.
struct Point {
  int e = 1;
  int f = 1;

  auto operator<=>(const Point&) const = default;

  [[nodiscard]] Sign sign() const {
    if (e < f) return Sign::negative;
    if (e > f) return Sign::positive;
    return Sign::vanishing;
  }
  [[nodiscard]] Point swapped() const { return {f, e}; }
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.e << ',' << p.f << ')';
}

namespace detail {
inline void check_key(int v) { require(v >= 1, "multiset entries must be positive integers"); }
inline void check_key(const Point& p) {
  require(p.e >= 1 && p.f >= 1, "point coordinates must be positive integers");
}
}  // namespace detail

/// Finite multiset keyed by value. Zero multiplicities are never stored, so two
/// multisets compare equal iff they have the same multiplicity function.
template <class Key>
class Multiset {
 public:
  using key_type = Key;
  using map_type = std::map<Key, std::size_t>;
  using const_iterator = typename map_type::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<Key> items) {
    for (const auto& k : items) insert(k);
  }
  template <class Range>
  static Multiset from_range(const Range& items) {
    Multiset m;
    for (const auto& k : items) m.insert(k);
    return m;
  }

  void insert(const Key& k, std::size_t times = 1) {
    if (times == 0) return;
    detail::check_key(k);
    counts_[k] += times;
    degree_ += times;
  }

  /// Removes up to `times` copies; returns how many were removed.
  std::size_t erase(const Key& k, std::size_t times = 1) {
    auto it = counts_.find(k);
    if (it == counts_.end()) return 0;
    const std::size_t removed = std::min(times, it->second);
    it->second -= removed;
    degree_ -= removed;
    if (it->second == 0) counts_.erase(it);
    return removed;
  }

  [[nodiscard]] std::size_t count(const Key& k) const {
    auto it = counts_.find(k);
    return it == counts_.end() ? 0 : it->second;
  }
  [[nodiscard]] bool contains(const Key& k) const { return counts_.count(k) != 0; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t size() const { return degree_; }
  [[nodiscard]] bool empty() const { return degree_ == 0; }
  [[nodiscard]] std::size_t distinct() const { return counts_.size(); }
  [[nodiscard]] bool is_set() const {
    return std::all_of(counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second == 1; });
  }

  const_iterator begin() const { return counts_.begin(); }
  const_iterator end() const { return counts_.end(); }

  /// Elements in ascending order, each repeated by its multiplicity.
  [[nodiscard]] std::vector<Key> elements() const {
    std::vector<Key> out;
    out.reserve(degree_);
    for (const auto& [k, c] : counts_) out.insert(out.end(), c, k);
    return out;
  }
  [[nodiscard]] std::vector<Key> underlying_set() const {
    std::vector<Key> out;
    out.reserve(counts_.size());
    for (const auto& kv : counts_) out.push_back(kv.first);
    return out;
  }

  bool operator==(const Multiset& other) const { return counts_ == other.counts_; }
  bool operator<(const Multiset& other) const { return counts_ < other.counts_; }

 private:
  map_type counts_;
  std::size_t degree_ = 0;
};

using MultisetN = Multiset<int>;
using MultisetNN2 = Multiset<Point>;

/// Pointwise sum of multiplicities.
template <class Key>
[[nodiscard]] Multiset<Key> multiset_union(const Multiset<Key>& a, const Multiset<Key>& b) {
  Multiset<Key> out = a;
  for (const auto& [k, c] : b) out.insert(k, c);
  return out;
}

/// Truncated pointwise difference max(A(s) - B(s), 0).
template <class Key>
[[nodiscard]] Multiset<Key> multiset_difference(const Multiset<Key>& a, const Multiset<Key>& b) {
  Multiset<Key> out = a;
  for (const auto& [k, c] : b) out.erase(k, c);
  return out;
}

/// Entries ≤ z, with multiplicity.
[[nodiscard]] inline MultisetN restrict_leq(const MultisetN& a, int z) {
  MultisetN out;
  for (const auto& [k, c] : a) {
    if (k > z) break;
    out.insert(k, c);
  }
  return out;
}

/// |A^{<z}|
[[nodiscard]] inline std::size_t count_below(const MultisetN& a, int z) {
  std::size_t n = 0;
  for (const auto& [k, c] : a) {
    if (k >= z) break;
    n += c;
  }
  return n;
}

/// Termwise order by the counting criterion |A^{<z}| ≥ |B^{<z}| for every z.
[[nodiscard]] inline bool termwise_leq_by_counts(const MultisetN& a, const MultisetN& b) {
  detail::require(a.degree() == b.degree(), "termwise order needs equal degrees");
  int top = 1;
  if (!a.empty()) top = std::max(top, std::prev(a.end())->first);
  if (!b.empty()) top = std::max(top, std::prev(b.end())->first);
  for (int z = 1; z <= top + 1; ++z)
    if (count_below(a, z) < count_below(b, z)) return false;
  return true;
}

/// Termwise order: sorted a_i ≤ b_i for every i. Degrees must agree.
[[nodiscard]] inline bool termwise_leq(const MultisetN& a, const MultisetN& b) {
  detail::require(a.degree() == b.degree(), "termwise order needs equal degrees");
  // Walk both multisets in sorted order without materializing them.
  auto ia = a.begin();
  auto ib = b.begin();
  std::size_t left_a = ia == a.end() ? 0 : ia->second;
  std::size_t left_b = ib == b.end() ? 0 : ib->second;
  bool result = true;
  while (ia != a.end()) {
    if (ia->first > ib->first) {
      result = false;
      break;
    }
    const std::size_t step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++ia != a.end()) left_a = ia->second;
    if (left_b == 0 && ++ib != b.end()) left_b = ib->second;
  }
  assert(result == termwise_leq_by_counts(a, b));
  return result;
}

/// Strict termwise order: sorted a_i < b_i for every i.
[[nodiscard]] inline bool termwise_less_strict(const MultisetN& a, const MultisetN& b) {
  detail::require(a.degree() == b.degree(), "strict termwise order needs equal degrees");
  const auto ea = a.elements();
  const auto eb = b.elements();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!(ea[i] < eb[i])) return false;
  return true;
}

/// A - C ≤ B - D, meaning A ∪̇ D ≤ B ∪̇ C termwise.
[[nodiscard]] inline bool formal_diff_leq(const MultisetN& a, const MultisetN& c, const MultisetN& b,
                                          const MultisetN& d) {
  return termwise_leq(multiset_union(a, d), multiset_union(b, c));
}

[[nodiscard]] inline MultisetN first_projection(const MultisetNN2& u) {
  MultisetN out;
  for (const auto& [p, c] : u) out.insert(p.e, c);
  return out;
}
[[nodiscard]] inline MultisetN second_projection(const MultisetNN2& u) {
  MultisetN out;
  for (const auto& [p, c] : u) out.insert(p.f, c);
  return out;
}

/// U ≤ V iff U₍₁₎ - U₍₂₎ ≤ V₍₁₎ - V₍₂₎.
[[nodiscard]] inline bool multiset_order_leq(const MultisetNN2& u, const MultisetNN2& v) {
  return formal_diff_leq(first_projection(u), second_projection(u), first_projection(v),
                         second_projection(v));
}

/// Swaps the coordinates of every point.
[[nodiscard]] inline MultisetNN2 iota(const MultisetNN2& u) {
  MultisetNN2 out;
  for (const auto& [p, c] : u) out.insert(p.swapped(), c);
  return out;
}

[[nodiscard]] inline MultisetNN2 part_with_sign(const MultisetNN2& u, Sign s) {
  MultisetNN2 out;
  for (const auto& [p, c] : u)
    if (p.sign() == s) out.insert(p, c);
  return out;
}
[[nodiscard]] inline MultisetNN2 negative_part(const MultisetNN2& u) { return part_with_sign(u, Sign::negative); }
[[nodiscard]] inline MultisetNN2 positive_part(const MultisetNN2& u) { return part_with_sign(u, Sign::positive); }
[[nodiscard]] inline MultisetNN2 vanishing_part(const MultisetNN2& u) { return part_with_sign(u, Sign::vanishing); }
[[nodiscard]] inline MultisetNN2 nonvanishing_part(const MultisetNN2& u) {
  return multiset_union(negative_part(u), positive_part(u));
}

[[nodiscard]] inline bool all_have_sign(const MultisetNN2& u, Sign s) {
  return std::all_of(u.begin(), u.end(), [s](const auto& kv) { return kv.first.sign() == s; });
}
[[nodiscard]] inline bool is_negative(const MultisetNN2& u) { return all_have_sign(u, Sign::negative); }
[[nodiscard]] inline bool is_positive(const MultisetNN2& u) { return all_have_sign(u, Sign::positive); }
[[nodiscard]] inline bool is_nonvanishing(const MultisetNN2& u) {
  return std::none_of(u.begin(), u.end(), [](const auto& kv) { return kv.first.sign() == Sign::vanishing; });
}

template <class Key>
std::ostream& operator<<(std::ostream& os, const Multiset<Key>& m) {
  os << '{';
  bool first = true;
  for (const auto& k : m.elements()) {
    if (!first) os << ',';
    os << k;
    first = false;
  }
  return os << '}';
}

}  // namespace richardson
