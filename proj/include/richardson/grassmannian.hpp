#pragma once
// d-subsets of {1..n}, the Bruhat order on them, the chart around e_β, and
// the bound sets T_α, W_γ.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <ostream>
#include <utility>
#include <vector>

#include "richardson/chains.hpp"
#include "richardson/error.hpp"
#include "richardson/multiset.hpp"

namespace richardson {

/// A d-element subset of {1..n}, stored increasing.
class GrassIndex {
 public:
  GrassIndex(int d, int n, std::vector<int> elems) : d_(d), n_(n), elems_(std::move(elems)) {
    detail::require(0 < d_ && d_ < n_, "need 0 < d < n");
    std::sort(elems_.begin(), elems_.end());
    detail::require(static_cast<int>(elems_.size()) == d_, "index must have exactly d elements");
    detail::require(std::adjacent_find(elems_.begin(), elems_.end()) == elems_.end(), "index has repeated elements");
    detail::require(elems_.front() >= 1 && elems_.back() <= n_, "index elements must lie in 1..n");
  }

  static GrassIndex identity(int d, int n) {
    std::vector<int> e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return {d, n, std::move(e)};
  }
  static GrassIndex longest(int d, int n) {
    std::vector<int> e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = n - d + i + 1;
    return {d, n, std::move(e)};
  }

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<int>& elems() const { return elems_; }
  [[nodiscard]] bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

  bool operator==(const GrassIndex&) const = default;

 private:
  int d_;
  int n_;
  std::vector<int> elems_;
};

inline std::ostream& operator<<(std::ostream& os, const GrassIndex& a) {
  os << '{';
  for (std::size_t i = 0; i < a.elems().size(); ++i) os << (i ? "," : "") << a.elems()[i];
  return os << '}';
}

/// l(α) = Σα_i - d(d+1)/2.
[[nodiscard]] inline int length(const GrassIndex& a) {
  int s = 0;
  for (int x : a.elems()) s += x;
  return s - a.d() * (a.d() + 1) / 2;
}

[[nodiscard]] inline bool index_leq(const GrassIndex& a, const GrassIndex& b) {
  detail::require(a.d() == b.d() && a.n() == b.n(), "indices belong to different Grassmannians");
  for (std::size_t i = 0; i < a.elems().size(); ++i)
    if (a.elems()[i] > b.elems()[i]) return false;
  return true;
}

/// Every d-subset of {1..n} in lexicographic order.
[[nodiscard]] inline std::vector<GrassIndex> all_indices(int d, int n) {
  detail::require(0 < d && d < n, "need 0 < d < n");
  std::vector<GrassIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(d, n, cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - d + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// β together with its complement; rows of the chart are indexed by β̄ and
/// columns by β.
class BetaContext {
 public:
  explicit BetaContext(GrassIndex beta) : beta_(std::move(beta)) {
    for (int x = 1; x <= beta_.n(); ++x)
      if (!beta_.contains(x)) complement_.push_back(x);
  }

  [[nodiscard]] const GrassIndex& beta() const { return beta_; }
  [[nodiscard]] int d() const { return beta_.d(); }
  [[nodiscard]] int n() const { return beta_.n(); }
  [[nodiscard]] const std::vector<int>& rows() const { return complement_; }
  [[nodiscard]] const std::vector<int>& cols() const { return beta_.elems(); }
  [[nodiscard]] const std::vector<int>& complement() const { return complement_; }

  [[nodiscard]] bool in_grid(const Point& p) const {
    return std::binary_search(complement_.begin(), complement_.end(), p.e) && beta_.contains(p.f);
  }
  /// Grid points in lexicographic order.
  [[nodiscard]] PointSet grid_points() const {
    PointSet out;
    for (int e : complement_)
      for (int f : beta_.elems()) out.push_back({e, f});
    return out;
  }

 private:
  GrassIndex beta_;
  std::vector<int> complement_;
};

/// (R, S) with R ⊆ β̄, S ⊆ β and |R| = |S|.
struct RSPair {
  std::vector<int> r;
  std::vector<int> s;
  bool operator==(const RSPair&) const = default;
};

[[nodiscard]] inline RSPair theta_to_rs(const GrassIndex& theta, const BetaContext& ctx) {
  detail::require(theta.d() == ctx.d() && theta.n() == ctx.n(), "index belongs to a different Grassmannian");
  RSPair out;
  std::set_difference(theta.elems().begin(), theta.elems().end(), ctx.cols().begin(), ctx.cols().end(),
                      std::back_inserter(out.r));
  std::set_difference(ctx.cols().begin(), ctx.cols().end(), theta.elems().begin(), theta.elems().end(),
                      std::back_inserter(out.s));
  return out;
}

/// R ∪ (β \ S).
[[nodiscard]] inline GrassIndex rs_to_theta(const RSPair& rs, const BetaContext& ctx) {
  detail::require(rs.r.size() == rs.s.size(), "R and S must have equal size");
  std::vector<int> r = rs.r;
  std::vector<int> s = rs.s;
  std::sort(r.begin(), r.end());
  std::sort(s.begin(), s.end());
  for (int x : r) detail::require(!ctx.beta().contains(x), "R must lie in the complement of beta");
  for (int x : s) detail::require(ctx.beta().contains(x), "S must lie in beta");
  std::vector<int> elems;
  std::set_difference(ctx.cols().begin(), ctx.cols().end(), s.begin(), s.end(), std::back_inserter(elems));
  elems.insert(elems.end(), r.begin(), r.end());
  return {ctx.d(), ctx.n(), std::move(elems)};
}

/// Canonical T̃_α and W̃_γ.
struct BoundChains {
  TwistedChain lower;  // negative
  TwistedChain upper;  // positive
};

namespace detail {
inline PointSet zip_points(const std::vector<int>& es, const std::vector<int>& fs) {
  PointSet out;
  for (std::size_t i = 0; i < es.size(); ++i) out.push_back({es[i], fs[i]});
  return out;
}
}  // namespace detail

/// T_α has projections (α \ β, β \ α) and is negative; W_γ has projections
/// (γ \ β, β \ γ) and is positive. Both are returned in canonical form.
[[nodiscard]] inline BoundChains build_bound_multisets(const GrassIndex& alpha, const GrassIndex& gamma,
                                                       const BetaContext& ctx) {
  if (!index_leq(alpha, ctx.beta()) || !index_leq(ctx.beta(), gamma))
    throw EmptyRichardsonError("alpha <= beta <= gamma fails");
  const RSPair ra = theta_to_rs(alpha, ctx);
  const RSPair rg = theta_to_rs(gamma, ctx);
  BoundChains out;
  try {
    out.lower = canonicalize(detail::zip_points(ra.r, ra.s), Sign::negative);
    out.upper = canonicalize(detail::zip_points(rg.r, rg.s), Sign::positive);
  } catch (const DomainError& e) {
    throw EmptyRichardsonError(std::string("no sign-correct pairing: ") + e.what());
  }
  return out;
}

}  // namespace richardson
