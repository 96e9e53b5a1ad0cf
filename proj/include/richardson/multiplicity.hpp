#pragma once
// Lattice paths on the β̄×β grid and the count of nonintersecting path
// families anchored at T̃_α ∪ W̃_γ, plus a brute-force count of maximal
// chain-bounded subsets to check it against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "richardson/chains.hpp"
#include "richardson/error.hpp"
#include "richardson/grassmannian.hpp"

namespace richardson {

/// Points ordered from the start of the path: floor(r) for a negative anchor,
/// ceil(s) for a positive one.
struct LatticePath {
  PointSet points;
  [[nodiscard]] std::size_t size() const { return points.size(); }
  bool operator==(const LatticePath&) const = default;
};

struct AnchoredPath {
  Point anchor;
  LatticePath path;
};

using PathFamily = std::vector<AnchoredPath>;

namespace detail {
inline void require_region_point(const Point& r, const BetaContext& ctx) {
  require(ctx.in_grid(r), "point is not in the beta grid");
}
inline std::size_t index_of(const std::vector<int>& v, int x) {
  return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
}
}  // namespace detail

/// Negative r: leftmost point of its row in the negative region.
/// Positive r: rightmost point of its row in the positive region.
[[nodiscard]] inline Point floor_pt(const Point& r, const BetaContext& ctx) {
  detail::require_region_point(r, ctx);
  const auto& cols = ctx.cols();
  if (r.sign() == Sign::negative) return {r.e, *std::upper_bound(cols.begin(), cols.end(), r.e)};
  return {r.e, *std::prev(std::lower_bound(cols.begin(), cols.end(), r.e))};
}

/// Negative r: lowest point of its column in the negative region.
/// Positive r: highest point of its column in the positive region.
[[nodiscard]] inline Point ceil_pt(const Point& r, const BetaContext& ctx) {
  detail::require_region_point(r, ctx);
  const auto& rows = ctx.rows();
  if (r.sign() == Sign::negative) return {*std::prev(std::lower_bound(rows.begin(), rows.end(), r.f)), r.f};
  return {*std::upper_bound(rows.begin(), rows.end(), r.f), r.f};
}

[[nodiscard]] inline Point path_start(const Point& r, const BetaContext& ctx) {
  return r.sign() == Sign::negative ? floor_pt(r, ctx) : ceil_pt(r, ctx);
}
[[nodiscard]] inline Point path_end(const Point& r, const BetaContext& ctx) {
  return r.sign() == Sign::negative ? ceil_pt(r, ctx) : floor_pt(r, ctx);
}

/// P_r: through r along its row and column. Negative: floor → r → ceil.
/// Positive: ceil → r → floor.
[[nodiscard]] inline LatticePath canonical_path(const Point& r, const BetaContext& ctx) {
  detail::require_region_point(r, ctx);
  const auto& rows = ctx.rows();
  const auto& cols = ctx.cols();
  LatticePath p;
  if (r.sign() == Sign::negative) {
    const Point fl = floor_pt(r, ctx);
    const Point ce = ceil_pt(r, ctx);
    for (std::size_t j = detail::index_of(cols, fl.f); j < cols.size() && cols[j] <= r.f; ++j)
      p.points.push_back({r.e, cols[j]});
    for (std::size_t i = detail::index_of(rows, r.e) + 1; i < rows.size() && rows[i] <= ce.e; ++i)
      p.points.push_back({rows[i], r.f});
  } else {
    const Point ce = ceil_pt(r, ctx);
    const Point fl = floor_pt(r, ctx);
    for (std::size_t i = detail::index_of(rows, ce.e); i < rows.size() && rows[i] <= r.e; ++i)
      p.points.push_back({rows[i], r.f});
    for (std::size_t j = detail::index_of(cols, r.f) + 1; j < cols.size() && cols[j] <= fl.f; ++j)
      p.points.push_back({r.e, cols[j]});
  }
  return p;
}

/// Consecutive points one grid step down or right, all of one sign.
[[nodiscard]] inline bool is_lattice_path(const LatticePath& path, Sign s, const BetaContext& ctx) {
  if (path.points.empty()) return false;
  for (const auto& p : path.points)
    if (!ctx.in_grid(p) || p.sign() != s) return false;
  const auto& rows = ctx.rows();
  const auto& cols = ctx.cols();
  for (std::size_t k = 1; k < path.points.size(); ++k) {
    const Point a = path.points[k - 1];
    const Point b = path.points[k];
    const auto ai = detail::index_of(rows, a.e);
    const auto aj = detail::index_of(cols, a.f);
    const auto bi = detail::index_of(rows, b.e);
    const auto bj = detail::index_of(cols, b.f);
    const bool down = bi == ai + 1 && bj == aj;
    const bool right = bi == ai && bj == aj + 1;
    if (!down && !right) return false;
  }
  return true;
}

/// Every monotone path from path_start(r) to path_end(r) inside r's region.
[[nodiscard]] inline std::vector<LatticePath> enumerate_paths(const Point& r, const BetaContext& ctx) {
  detail::require_region_point(r, ctx);
  const Sign s = r.sign();
  const auto& rows = ctx.rows();
  const auto& cols = ctx.cols();
  const Point start = path_start(r, ctx);
  const Point end = path_end(r, ctx);
  const std::size_t ei = detail::index_of(rows, end.e);
  const std::size_t ej = detail::index_of(cols, end.f);
  std::vector<LatticePath> out;
  LatticePath cur;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    const Point p{rows[i], cols[j]};
    if (p.sign() != s) return;
    cur.points.push_back(p);
    if (i == ei && j == ej) {
      out.push_back(cur);
    } else {
      if (i < ei) go(i + 1, j);
      if (j < ej) go(i, j + 1);
    }
    cur.points.pop_back();
  };
  go(detail::index_of(rows, start.e), detail::index_of(cols, start.f));
  return out;
}

namespace detail {
/// Backtracks over anchors; each anchor picks one of its paths, and paths may
/// not share points. Stops early if visit returns false.
template <class Visit>
void for_each_family_of(const PointSet& anchors, const BetaContext& ctx, Visit&& visit) {
  PointSet order = anchors;
  std::sort(order.begin(), order.end(), [&](const Point& a, const Point& b) {
    return std::pair(a.sign(), path_start(a, ctx)) < std::pair(b.sign(), path_start(b, ctx));
  });
  std::vector<std::vector<LatticePath>> options;
  options.reserve(order.size());
  for (const auto& a : order) options.push_back(enumerate_paths(a, ctx));

  const auto& rows = ctx.rows();
  const auto& cols = ctx.cols();
  std::vector<char> used(rows.size() * cols.size(), 0);
  auto cell = [&](const Point& p) { return index_of(rows, p.e) * cols.size() + index_of(cols, p.f); };
  PathFamily fam;
  bool stop = false;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      if (!visit(static_cast<const PathFamily&>(fam))) stop = true;
      return;
    }
    for (const auto& path : options[k]) {
      if (std::any_of(path.points.begin(), path.points.end(), [&](const Point& p) { return used[cell(p)] != 0; }))
        continue;
      for (const auto& p : path.points) used[cell(p)] = 1;
      fam.push_back({order[k], path});
      go(k + 1);
      fam.pop_back();
      for (const auto& p : path.points) used[cell(p)] = 0;
      if (stop) return;
    }
  };
  go(0);
}

inline void require_anchors(const TwistedChain& t, Sign s, const BetaContext& ctx) {
  require(t.sign == s, "anchor chain has the wrong sign");
  for (const auto& p : t.points) require_region_point(p, ctx);
}
}  // namespace detail

/// Calls visit(family) for each family of pairwise disjoint paths, one path
/// per anchor in T̃ ∪ W̃.
template <class Visit>
void for_each_family(const TwistedChain& lower, const TwistedChain& upper, const BetaContext& ctx, Visit&& visit) {
  detail::require_anchors(lower, Sign::negative, ctx);
  detail::require_anchors(upper, Sign::positive, ctx);
  PointSet anchors = lower.points;
  anchors.insert(anchors.end(), upper.points.begin(), upper.points.end());
  detail::for_each_family_of(anchors, ctx, std::forward<Visit>(visit));
}

[[nodiscard]] inline std::uint64_t count_families_of(const PointSet& anchors, const BetaContext& ctx) {
  std::uint64_t n = 0;
  detail::for_each_family_of(anchors, ctx, [&](const PathFamily&) {
    ++n;
    return true;
  });
  return n;
}

/// Negative and positive families are counted apart and multiplied unless
/// `joint` asks for one backtracking pass over all anchors.
[[nodiscard]] inline std::uint64_t count_families(const TwistedChain& lower, const TwistedChain& upper,
                                                  const BetaContext& ctx, bool joint = false) {
  detail::require_anchors(lower, Sign::negative, ctx);
  detail::require_anchors(upper, Sign::positive, ctx);
  if (joint) {
    PointSet anchors = lower.points;
    anchors.insert(anchors.end(), upper.points.begin(), upper.points.end());
    return count_families_of(anchors, ctx);
  }
  return count_families_of(lower.points, ctx) * count_families_of(upper.points, ctx);
}

/// Σ|P_r| over both anchor sets.
[[nodiscard]] inline std::size_t canonical_degree(const TwistedChain& lower, const TwistedChain& upper,
                                                  const BetaContext& ctx) {
  std::size_t d = 0;
  for (const auto& r : lower.points) d += canonical_path(r, ctx).size();
  for (const auto& s : upper.points) d += canonical_path(s, ctx).size();
  return d;
}

[[nodiscard]] inline std::uint64_t multiplicity(const GrassIndex& alpha, const GrassIndex& beta,
                                                const GrassIndex& gamma) {
  const BetaContext ctx(beta);
  const BoundChains b = build_bound_multisets(alpha, gamma, ctx);
  return count_families(b.lower, b.upper, ctx);
}

struct MaximalSubsets {
  std::uint64_t count = 0;
  std::size_t max_degree = 0;
  std::vector<PointSet> subsets;  // filled only on request
};

inline constexpr std::size_t default_grid_cap = 24;

/// Brute force over subsets of the grid that are chain-bounded by the anchors,
/// keeping those of maximal size.
[[nodiscard]] inline MaximalSubsets maximal_bounded_subsets(const TwistedChain& lower, const TwistedChain& upper,
                                                            const BetaContext& ctx, bool keep = false,
                                                            std::size_t grid_cap = default_grid_cap) {
  detail::require_anchors(lower, Sign::negative, ctx);
  detail::require_anchors(upper, Sign::positive, ctx);
  const PointSet grid = ctx.grid_points();
  detail::require(grid.size() <= grid_cap, "grid exceeds the brute-force cap");
  MaximalSubsets res;
  PointSet cur;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == grid.size()) {
      if (cur.size() > res.max_degree) {
        res = MaximalSubsets{0, cur.size(), {}};
      }
      if (cur.size() == res.max_degree) {
        ++res.count;
        if (keep) res.subsets.push_back(cur);
      }
      return;
    }
    // not enough points left to reach the current maximum
    if (cur.size() + (grid.size() - k) < res.max_degree) return;
    cur.push_back(grid[k]);
    if (chain_bounded(cur, lower, upper)) go(k + 1);
    cur.pop_back();
    go(k + 1);
  };
  go(0);
  return res;
}

/// U_{R,r}: the u ∈ U lying under r (u ⊴ r) with depth_U(u) = depth_R(r).
[[nodiscard]] inline std::map<Point, PointSet> decompose_bounded_subset(const PointSet& u, const TwistedChain& r) {
  if (r.sign == Sign::positive) {
    std::map<Point, PointSet> flipped = decompose_bounded_subset(iota(u), iota(r));
    std::map<Point, PointSet> out;
    for (auto& [k, v] : flipped) out[k.swapped()] = iota(v);
    return out;
  }
  for (const auto& p : u) detail::require(p.sign() == Sign::negative, "subset must be negative");
  detail::require(depth_leq_negative(r.points, u), "decomposition needs R below U");
  std::map<Point, PointSet> out;
  for (const auto& anchor : r.points) {
    PointSet part;
    const std::size_t target = depth(r.points, anchor);
    for (const auto& x : u)
      if (trianglelefteq_pt(x, anchor) && depth(u, x) == target) part.push_back(x);
    out[anchor] = std::move(part);
  }
  return out;
}

// --------------------------------------------------------------------------
// Text rendering

/// One grid with β̄ down the side and β across the top;
/// ':' marks the staircase between the positive and negative regions.
/// Negative paths are drawn with a, b, …; positive paths with A, B, ….
[[nodiscard]] inline std::string render_family(const PathFamily& fam, const BetaContext& ctx) {
  std::map<Point, char> mark;
  char neg = 'a';
  char pos = 'A';
  for (const auto& ap : fam) {
    const char c = ap.anchor.sign() == Sign::negative ? neg++ : pos++;
    for (const auto& p : ap.path.points) mark[p] = c;
  }
  std::ostringstream os;
  os << "    ";
  for (int f : ctx.cols()) {
    std::string lbl = std::to_string(f);
    os << std::string(3 - std::min<std::size_t>(3, lbl.size()), ' ') << lbl;
  }
  os << '\n';
  for (int e : ctx.rows()) {
    std::string lbl = std::to_string(e);
    os << std::string(3 - std::min<std::size_t>(3, lbl.size()), ' ') << lbl << ' ';
    Sign prev = Sign::positive;
    bool first = true;
    for (int f : ctx.cols()) {
      const Point p{e, f};
      const char sep = (!first && prev == Sign::positive && p.sign() == Sign::negative) ? ':' : ' ';
      os << (first ? ' ' : sep) << ' ';
      auto it = mark.find(p);
      os << (it != mark.end() ? it->second : '.');
      prev = p.sign();
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace richardson
