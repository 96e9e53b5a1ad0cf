#pragma once
// Chains in ℕ², the twisted-chain orders ≺ and ⊴, depth, the canonical
// rearrangement T̃, and chain boundedness.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "richardson/error.hpp"
#include "richardson/multiset.hpp"
#include "richardson/tableau.hpp"

namespace richardson {

using PointSet = std::vector<Point>;

/// e strictly increasing and f strictly decreasing, in the given order.
[[nodiscard]] inline bool is_chain(const PointSet& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i - 1].e < pts[i].e && pts[i - 1].f > pts[i].f)) return false;
  return true;
}

[[nodiscard]] inline MultisetNN2 to_multiset(const PointSet& pts) { return MultisetNN2::from_range(pts); }

/// Calls visit(chain) for every chain in the set, the empty chain included.
/// Returning false from visit stops the walk; the function then returns false.
template <class Visit>
bool for_each_chain(const PointSet& set, Visit&& visit) {
  PointSet pts = set;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  PointSet cur;
  std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
    if (!visit(static_cast<const PointSet&>(cur))) return false;
    for (std::size_t i = from; i < pts.size(); ++i) {
      if (!cur.empty() && !(cur.back().e < pts[i].e && cur.back().f > pts[i].f)) continue;
      cur.push_back(pts[i]);
      const bool ok = go(i + 1);
      cur.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return go(0);
}

/// Chain condition T ≤ C⁻ and C⁺ ≤ W on the chains of the underlying set of U.
[[nodiscard]] inline bool multiset_bounded_by(const MultisetNN2& u, const Bound& lower, const Bound& upper) {
  detail::require_bound_signs(lower, upper);
  if (lower) {
    const bool ok = for_each_chain(negative_part(u).underlying_set(), [&](const PointSet& c) {
      return multiset_order_leq(*lower, to_multiset(c));
    });
    if (!ok) return false;
  }
  if (upper) {
    const bool ok = for_each_chain(positive_part(u).underlying_set(), [&](const PointSet& c) {
      return multiset_order_leq(to_multiset(c), *upper);
    });
    if (!ok) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Point orders on (ℕ²)⁻

namespace detail {
inline void require_negative(const Point& p) { require(p.sign() == Sign::negative, "point is not negative"); }
inline void require_negative_pair(const Point& u, const Point& v) {
  require(u.sign() == v.sign(), "points have mixed signs");
  require(u.sign() == Sign::negative, "order is defined on negative points; apply iota first");
}
}  // namespace detail

/// (e,f) ≺ (g,h) iff f < h and e > g.
[[nodiscard]] inline bool prec(const Point& u, const Point& v) {
  detail::require_negative_pair(u, v);
  return u.f < v.f && u.e > v.e;
}

/// (e,f) ⊴ (g,h) iff f ≤ h and e ≥ g.
[[nodiscard]] inline bool trianglelefteq_pt(const Point& u, const Point& v) {
  detail::require_negative_pair(u, v);
  return u.f <= v.f && u.e >= v.e;
}

/// (max e, min f); the result may have any sign.
[[nodiscard]] inline Point meet(const Point& u, const Point& v) {
  detail::require_negative_pair(u, v);
  return {std::max(u.e, v.e), std::min(u.f, v.f)};
}

[[nodiscard]] inline bool is_completely_disjointed(const PointSet& t) {
  std::vector<int> coords;
  for (const auto& p : t) {
    coords.push_back(p.e);
    coords.push_back(p.f);
  }
  std::sort(coords.begin(), coords.end());
  return std::adjacent_find(coords.begin(), coords.end()) == coords.end();
}

[[nodiscard]] inline bool is_negative_twisted_chain(const PointSet& t) {
  for (const auto& p : t)
    if (p.sign() != Sign::negative) return false;
  if (!is_completely_disjointed(t)) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const Point& u = t[i];
      const Point& v = t[j];
      if (!prec(u, v) && !prec(v, u) && meet(u, v).sign() == Sign::negative) return false;
    }
  return true;
}

[[nodiscard]] inline PointSet iota(const PointSet& t) {
  PointSet out;
  out.reserve(t.size());
  for (const auto& p : t) out.push_back(p.swapped());
  std::sort(out.begin(), out.end());
  return out;
}

[[nodiscard]] inline bool is_positive_twisted_chain(const PointSet& t) {
  for (const auto& p : t)
    if (p.sign() != Sign::positive) return false;
  return is_negative_twisted_chain(iota(t));
}

/// A twisted chain together with its sign, so that an empty chain still knows
/// which side it lives on.
struct TwistedChain {
  Sign sign = Sign::negative;
  PointSet points;  // sorted

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] bool empty() const { return points.empty(); }
  [[nodiscard]] MultisetNN2 as_multiset() const { return to_multiset(points); }
  bool operator==(const TwistedChain&) const = default;
};

[[nodiscard]] inline TwistedChain make_twisted_chain(Sign s, PointSet pts) {
  detail::require(s != Sign::vanishing, "twisted chain must be negative or positive");
  std::sort(pts.begin(), pts.end());
  const bool ok = s == Sign::negative ? is_negative_twisted_chain(pts) : is_positive_twisted_chain(pts);
  detail::require(ok, "points do not form a twisted chain of the requested sign");
  return {s, std::move(pts)};
}

[[nodiscard]] inline TwistedChain iota(const TwistedChain& t) {
  return {t.sign == Sign::negative ? Sign::positive : Sign::negative, iota(t.points)};
}

// --------------------------------------------------------------------------
// Canonical rearrangement

namespace detail {
inline void require_arrangeable(const PointSet& t) {
  require(is_completely_disjointed(t), "set is not completely disjointed");
}
}  // namespace detail

/// T̃ for a completely disjointed set: keeps the second coordinates and
/// reassigns the first ones. Ascending in f, each f takes the largest unused
/// e below it. Throws if no negative arrangement exists.
[[nodiscard]] inline PointSet canonicalize_negative(const PointSet& t) {
  detail::require_arrangeable(t);
  std::vector<int> es;
  std::vector<int> fs;
  for (const auto& p : t) {
    es.push_back(p.e);
    fs.push_back(p.f);
  }
  std::sort(es.begin(), es.end());
  std::sort(fs.begin(), fs.end());
  PointSet out;
  for (int f : fs) {
    auto it = std::lower_bound(es.begin(), es.end(), f);
    detail::require(it != es.begin(), "no negative arrangement exists");
    --it;
    out.push_back({*it, f});
    es.erase(it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Same result by trying every permutation; only for small inputs.
[[nodiscard]] inline PointSet canonicalize_negative_brute(const PointSet& t) {
  detail::require_arrangeable(t);
  std::vector<int> es;
  std::vector<int> fs;
  for (const auto& p : t) {
    es.push_back(p.e);
    fs.push_back(p.f);
  }
  std::sort(es.begin(), es.end());
  std::sort(fs.begin(), fs.end());
  std::optional<std::vector<int>> best;
  do {
    bool negative = true;
    for (std::size_t i = 0; i < es.size() && negative; ++i) negative = es[i] < fs[i];
    if (!negative) continue;
    // lex-smaller means larger at the first difference
    if (!best || std::lexicographical_compare(best->begin(), best->end(), es.begin(), es.end())) best = es;
  } while (std::next_permutation(es.begin(), es.end()));
  detail::require(best.has_value(), "no negative arrangement exists");
  PointSet out;
  for (std::size_t i = 0; i < fs.size(); ++i) out.push_back({(*best)[i], fs[i]});
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical twisted chain of the requested sign; the positive case goes
/// through ι.
[[nodiscard]] inline TwistedChain canonicalize(const PointSet& t, Sign s, bool brute_force = false) {
  detail::require(s != Sign::vanishing, "canonical chain must be negative or positive");
  auto run = [&](const PointSet& x) { return brute_force ? canonicalize_negative_brute(x) : canonicalize_negative(x); };
  if (s == Sign::negative) return make_twisted_chain(Sign::negative, run(t));
  return make_twisted_chain(Sign::positive, iota(run(iota(t))));
}

// --------------------------------------------------------------------------
// Depth and ⊴ on subsets

/// Longest ≺-chain in a negative set r lying entirely above x, i.e. with
/// x ⊴ u for every element u. Anchoring at the bottom of the chain is what
/// makes depth_R(z,z+1) count the points of R straddling z.
[[nodiscard]] inline std::size_t depth(const PointSet& r, const Point& x) {
  detail::require_negative(x);
  PointSet pts;
  for (const auto& p : r) {
    detail::require_negative(p);
    if (p.f >= x.f && p.e <= x.e) pts.push_back(p);
  }
  // increasing f is a linear extension of ≺
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.f < b.f; });
  std::vector<std::size_t> len(pts.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (prec(pts[j], pts[i])) len[i] = std::max(len[i], len[j] + 1);
    best = std::max(best, len[i]);
  }
  return best;
}

/// R ⊴ S for negative sets: depth_R(x) ≥ depth_S(x) for every x ∈ S.
[[nodiscard]] inline bool depth_leq_negative(const PointSet& r, const PointSet& s) {
  return std::all_of(s.begin(), s.end(), [&](const Point& x) { return depth(r, x) >= depth(s, x); });
}

/// R ⊴ S for negative sets, tested only at the points (z, z+1).
[[nodiscard]] inline bool depth_leq_negative_diagonal(const PointSet& r, const PointSet& s) {
  int top = 1;
  for (const auto& p : r) top = std::max(top, p.f);
  for (const auto& p : s) top = std::max(top, p.f);
  for (int z = 1; z <= top; ++z)
    if (depth(r, {z, z + 1}) < depth(s, {z, z + 1})) return false;
  return true;
}

/// |(R₍₁₎ - R₍₂₎)^{≤z}| - z, which is |R₍₁₎^{≤z}| - |R₍₂₎^{≤z}|.
[[nodiscard]] inline long diagonal_depth_formula(const PointSet& r, int z) {
  long n = 0;
  for (const auto& p : r) n += (p.e <= z ? 1 : 0) - (p.f <= z ? 1 : 0);
  return n;
}

/// ⊴ on twisted chains. Negative ⊴ positive always holds; positive ⊴ negative
/// is not defined and throws.
[[nodiscard]] inline bool chain_order_leq(const TwistedChain& r, const TwistedChain& s) {
  if (r.sign == Sign::negative && s.sign == Sign::positive) return true;
  detail::require(!(r.sign == Sign::positive && s.sign == Sign::negative),
                  "no order is defined from a positive to a negative chain");
  if (r.sign == Sign::negative) return depth_leq_negative(r.points, s.points);
  return depth_leq_negative(iota(s.points), iota(r.points));
}

/// R ⊴ U⁻ and U⁺ ⊴ S. An absent chain imposes no condition.
[[nodiscard]] inline bool chain_bounded(const PointSet& u, const std::optional<TwistedChain>& r,
                                        const std::optional<TwistedChain>& s) {
  detail::require(!r || r->sign == Sign::negative, "lower chain must be negative");
  detail::require(!s || s->sign == Sign::positive, "upper chain must be positive");
  PointSet neg;
  PointSet pos;
  for (const auto& p : u) {
    detail::require(p.sign() != Sign::vanishing, "set has vanishing points");
    (p.sign() == Sign::negative ? neg : pos).push_back(p);
  }
  if (r && !depth_leq_negative(r->points, neg)) return false;
  if (s && !depth_leq_negative(iota(s->points), iota(pos))) return false;
  return true;
}

[[nodiscard]] inline bool chain_bounded(const MultisetNN2& u, const std::optional<TwistedChain>& r,
                                        const std::optional<TwistedChain>& s) {
  return chain_bounded(u.underlying_set(), r, s);
}

[[nodiscard]] inline Bound as_bound(const std::optional<TwistedChain>& t) {
  if (!t) return unbounded;
  return t->as_multiset();
}

}  // namespace richardson
