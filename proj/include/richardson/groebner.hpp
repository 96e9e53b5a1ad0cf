#pragma once
// Monomials on the β̄×β chart, symbolic expansion of minors, and the two
// counts whose equality degree by degree is the Gröbner basis statement:
// bounded multisets versus bounded nonvanishing semistandard bitableaux.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "richardson/brsk.hpp"
#include "richardson/chains.hpp"
#include "richardson/error.hpp"
#include "richardson/grassmannian.hpp"
#include "richardson/multiplicity.hpp"
#include "richardson/tableau.hpp"

namespace richardson {

/// x_U for a multiset U on the grid.
using Monomial = MultisetNN2;
using Polynomial = std::map<Monomial, long long>;

/// x_ij < x_i'j' iff i < i', or i = i' and j > j'.
[[nodiscard]] inline bool variable_less(const Point& a, const Point& b) {
  if (a.e != b.e) return a.e < b.e;
  return a.f > b.f;
}

/// Lexicographic order: the exponents of the largest variable decide first.
[[nodiscard]] inline bool monomial_less(const Monomial& m1, const Monomial& m2) {
  std::vector<Point> vars = m1.underlying_set();
  const auto v2 = m2.underlying_set();
  vars.insert(vars.end(), v2.begin(), v2.end());
  std::sort(vars.begin(), vars.end(), [](const Point& a, const Point& b) { return variable_less(b, a); });
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (const auto& v : vars) {
    const auto c1 = m1.count(v);
    const auto c2 = m2.count(v);
    if (c1 != c2) return c1 < c2;
  }
  return false;
}

[[nodiscard]] inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// A matrix entry: either a constant or a single variable.
struct Entry {
  int constant = 0;
  std::optional<Point> var;
};

/// Leibniz expansion of a square matrix of entries.
[[nodiscard]] inline Polynomial determinant(const std::vector<std::vector<Entry>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out;
  do {
    long long coef = permutation_sign(perm);
    Monomial mono;
    bool zero = false;
    for (std::size_t i = 0; i < k && !zero; ++i) {
      const Entry& e = m[i][perm[i]];
      if (e.var) {
        mono.insert(*e.var);
      } else if (e.constant == 0) {
        zero = true;
      } else {
        coef *= e.constant;
      }
    }
    if (zero) continue;
    if ((out[mono] += coef) == 0) out.erase(mono);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// det(x_{r,s}) over rows R and columns S.
[[nodiscard]] inline Polynomial rs_minor(const std::vector<int>& r, const std::vector<int>& s) {
  detail::require(r.size() == s.size(), "R and S must have equal size");
  std::vector<std::vector<Entry>> m(r.size(), std::vector<Entry>(s.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) m[i][j].var = Point{r[i], s[j]};
  return determinant(m);
}

/// The d×d minor with row set θ of the chart matrix around e_β: row β_k is
/// the k-th unit vector, row i ∈ β̄ holds x_{i,β_1}, …, x_{i,β_d}.
[[nodiscard]] inline Polynomial plucker_minor(const GrassIndex& theta, const BetaContext& ctx) {
  const auto& cols = ctx.cols();
  std::vector<std::vector<Entry>> m;
  for (int row : theta.elems()) {
    std::vector<Entry> entries(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (ctx.beta().contains(row)) {
        entries[j].constant = cols[j] == row ? 1 : 0;
      } else {
        entries[j].var = Point{row, cols[j]};
      }
    }
    m.push_back(std::move(entries));
  }
  return determinant(m);
}

[[nodiscard]] inline Polynomial negate(Polynomial p) {
  for (auto& kv : p) kv.second = -kv.second;
  return p;
}

/// f_{R-S}: the R×S minor together with the sign relating it to the Plücker
/// minor of θ = R ∪ (β \ S).
struct SignedMinor {
  std::vector<int> r;
  std::vector<int> s;
  int sign = 1;
  Polynomial expansion;
};

[[nodiscard]] inline SignedMinor signed_minor(const RSPair& rs, const BetaContext& ctx) {
  SignedMinor out{rs.r, rs.s, 1, rs_minor(rs.r, rs.s)};
  std::sort(out.r.begin(), out.r.end());
  std::sort(out.s.begin(), out.s.end());
  out.expansion = rs_minor(out.r, out.s);
  const Polynomial full = plucker_minor(rs_to_theta(rs, ctx), ctx);
  if (full == out.expansion) {
    out.sign = 1;
  } else if (full == negate(out.expansion)) {
    out.sign = -1;
  } else {
    throw VerificationError("Plucker minor is not plus or minus the R x S minor");
  }
  return out;
}

[[nodiscard]] inline Monomial initial_term(const Polynomial& p) {
  detail::require(!p.empty(), "zero polynomial has no initial term");
  auto best = p.begin();
  for (auto it = std::next(p.begin()); it != p.end(); ++it)
    if (monomial_less(best->first, it->first)) best = it;
  return best->first;
}

/// x_C for the chain with C₍₁₎ = R and C₍₂₎ = S.
[[nodiscard]] inline Monomial chain_monomial(std::vector<int> r, std::vector<int> s) {
  detail::require(r.size() == s.size(), "R and S must have equal size");
  std::sort(r.begin(), r.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  Monomial m;
  for (std::size_t i = 0; i < r.size(); ++i) m.insert({r[i], s[i]});
  return m;
}

// --------------------------------------------------------------------------
// Counting

/// Data shared by the counters for one triple.
struct RichardsonData {
  GrassIndex alpha;
  GrassIndex gamma;
  BetaContext ctx;
  BoundChains bounds;

  RichardsonData(GrassIndex a, GrassIndex g, BetaContext c)
      : alpha(std::move(a)), gamma(std::move(g)), ctx(std::move(c)), bounds(build_bound_multisets(alpha, gamma, ctx)) {}

  [[nodiscard]] Bound lower() const { return bounds.lower.as_multiset(); }
  [[nodiscard]] Bound upper() const { return bounds.upper.as_multiset(); }
};

namespace detail {
/// Visits every degree-m multiset on the grid (square-free if asked),
/// skipping extensions of multisets rejected by `keep`.
template <class Keep, class Visit>
void for_each_grid_multiset(const PointSet& grid, std::size_t m, bool square_free, Keep&& keep, Visit&& visit) {
  MultisetNN2 cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (cur.degree() == m) {
      visit(static_cast<const MultisetNN2&>(cur));
      return;
    }
    for (std::size_t i = from; i < grid.size(); ++i) {
      cur.insert(grid[i]);
      if (keep(static_cast<const MultisetNN2&>(cur))) go(square_free ? i + 1 : i);
      cur.erase(grid[i]);
    }
  };
  go(0);
}
}  // namespace detail

/// Degree-m multisets on the grid bounded by T_α, W_γ, found by checking
/// every chain of each candidate (boundedness is inherited by submultisets,
/// so rejected candidates are not extended).
[[nodiscard]] inline std::uint64_t count_bounded_multisets(const RichardsonData& data, std::size_t m,
                                                           bool square_free = false) {
  std::uint64_t n = 0;
  const Bound lo = data.lower();
  const Bound hi = data.upper();
  detail::for_each_grid_multiset(
      data.ctx.grid_points(), m, square_free, [&](const MultisetNN2& u) { return multiset_bounded_by(u, lo, hi); },
      [&](const MultisetNN2&) { ++n; });
  return n;
}

/// Chains C on the grid with T ≰ C or C ≰ W, compared as whole chains.
[[nodiscard]] inline std::vector<PointSet> forbidden_chains(const RichardsonData& data) {
  const MultisetNN2 lo = *data.lower();
  const MultisetNN2 hi = *data.upper();
  std::vector<PointSet> out;
  (void)for_each_chain(data.ctx.grid_points(), [&](const PointSet& c) {
    if (c.empty()) return true;
    const MultisetNN2 cm = to_multiset(c);
    if (!multiset_order_leq(lo, cm) || !multiset_order_leq(cm, hi)) out.push_back(c);
    return true;
  });
  return out;
}

/// Degree-m monomials divisible by no forbidden chain monomial.
[[nodiscard]] inline std::uint64_t count_monomials_by_sieve(const RichardsonData& data, std::size_t m,
                                                            bool square_free = false) {
  const std::vector<PointSet> forbidden = forbidden_chains(data);
  std::uint64_t n = 0;
  detail::for_each_grid_multiset(
      data.ctx.grid_points(), m, square_free, [](const MultisetNN2&) { return true; },
      [&](const MultisetNN2& u) {
        const bool divisible = std::any_of(forbidden.begin(), forbidden.end(), [&](const PointSet& c) {
          return std::all_of(c.begin(), c.end(), [&](const Point& p) { return u.contains(p); });
        });
        if (!divisible) ++n;
      });
  return n;
}

/// Both routes; throws VerificationError if they disagree.
[[nodiscard]] inline std::uint64_t count_monomials_outside_initial(const RichardsonData& data, std::size_t m,
                                                                   bool square_free = false) {
  const auto a = count_bounded_multisets(data, m, square_free);
  const auto b = count_monomials_by_sieve(data, m, square_free);
  if (a != b)
    throw VerificationError("bounded-multiset count " + std::to_string(a) + " differs from sieve count " +
                            std::to_string(b) + " at degree " + std::to_string(m));
  return a;
}

/// One possible bitableau row: P_i = R ⊆ β̄, Q_i = S ⊆ β, strictly signed.
struct BitableauRow {
  Row p;
  Row q;
};

/// All strictly signed rows with |R| = |S| ≥ 1.
[[nodiscard]] inline std::vector<BitableauRow> signed_rows(const BetaContext& ctx) {
  auto subsets = [](const std::vector<int>& v) {
    std::vector<std::vector<Row>> by_size(v.size() + 1);
    for (std::uint32_t mask = 0; mask < (1u << v.size()); ++mask) {
      Row r;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) r.push_back(v[i]);
      by_size[r.size()].push_back(std::move(r));
    }
    return by_size;
  };
  const auto rs = subsets(ctx.rows());
  const auto ss = subsets(ctx.cols());
  std::vector<BitableauRow> out;
  for (std::size_t k = 1; k < rs.size() && k < ss.size(); ++k)
    for (const auto& r : rs[k])
      for (const auto& s : ss[k])
        if (row_sign(r, s) != Sign::vanishing) out.push_back({r, s});
  return out;
}

/// Degree-m nonvanishing semistandard bitableaux on the grid bounded by
/// T_α, W_γ, counted by memoized extension one row at a time.
[[nodiscard]] inline std::uint64_t count_standard_monomials(const RichardsonData& data, std::size_t m) {
  if (m == 0) return 1;
  const auto rows = signed_rows(data.ctx);
  const std::size_t k = rows.size();
  const MultisetNN2 lo = *data.lower();
  const MultisetNN2 hi = *data.upper();
  const MultisetN lo1 = first_projection(lo), lo2 = second_projection(lo);
  const MultisetN hi1 = first_projection(hi), hi2 = second_projection(hi);

  std::vector<MultisetN> pm(k), qm(k);
  std::vector<char> first_ok(k), last_ok(k);
  for (std::size_t i = 0; i < k; ++i) {
    pm[i] = row_multiset(rows[i].p);
    qm[i] = row_multiset(rows[i].q);
    first_ok[i] = formal_diff_leq(lo1, lo2, pm[i], qm[i]);
    last_ok[i] = formal_diff_leq(pm[i], qm[i], hi1, hi2);
  }
  std::vector<std::vector<char>> next_ok(k, std::vector<char>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) next_ok[i][j] = formal_diff_leq(pm[i], qm[i], pm[j], qm[j]);

  // ways[i][r]: sequences that start with row i, have r boxes left after it,
  // and end on a row allowed last
  std::vector<std::vector<std::uint64_t>> ways(k, std::vector<std::uint64_t>(m + 1, 0));
  for (std::size_t rem = 0; rem <= m; ++rem)
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t w = rem == 0 && last_ok[i] ? 1 : 0;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t sz = rows[j].p.size();
        if (next_ok[i][j] && sz <= rem) w += ways[j][rem - sz];
      }
      ways[i][rem] = w;
    }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (first_ok[i] && rows[i].p.size() <= m) total += ways[i][m - rows[i].p.size()];
  return total;
}

/// Same count by building every candidate bitableau and testing it with the
/// tableau predicates. Visits each accepted bitableau.
template <class Visit>
std::uint64_t for_each_standard_bitableau(const RichardsonData& data, std::size_t m, Visit&& visit) {
  const auto rows = signed_rows(data.ctx);
  const Bound lo = data.lower();
  const Bound hi = data.upper();
  std::uint64_t n = 0;
  NotchedTableau p;
  NotchedTableau q;
  std::function<void(std::size_t)> go = [&](std::size_t left) {
    if (left == 0) {
      const NotchedBitableau bt(p, q);
      if (is_nonvanishing(bt) && is_semistandard_bitableau(bt) && bitableau_bounded_by(bt, lo, hi)) {
        ++n;
        visit(bt);
      }
      return;
    }
    for (const auto& row : rows) {
      if (row.p.size() > left) continue;
      if (!p.rows.empty() && !row_pair_leq(p.rows.back(), q.rows.back(), row.p, row.q)) continue;
      p.rows.push_back(row.p);
      q.rows.push_back(row.q);
      go(left - row.p.size());
      p.rows.pop_back();
      q.rows.pop_back();
    }
  };
  go(m);
  return n;
}

[[nodiscard]] inline std::uint64_t count_standard_monomials_explicit(const RichardsonData& data, std::size_t m) {
  return for_each_standard_bitableau(data, m, [](const NotchedBitableau&) {});
}

struct DegreeReport {
  std::size_t m = 0;
  std::uint64_t monomials = 0;
  std::uint64_t standard = 0;
  bool brsk_injective = true;
  [[nodiscard]] bool ok() const { return monomials == standard && brsk_injective; }
};

struct GroebnerReport {
  std::vector<DegreeReport> degrees;
  [[nodiscard]] bool ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.ok(); });
  }
  /// First degree with a mismatch, if any.
  [[nodiscard]] std::optional<std::size_t> witness() const {
    for (const auto& d : degrees)
      if (!d.ok()) return d.m;
    return std::nullopt;
  }
};

/// BRSK sends bounded degree-m multisets to distinct bounded bitableaux.
[[nodiscard]] inline bool brsk_injective_on_bounded(const RichardsonData& data, std::size_t m) {
  const Bound lo = data.lower();
  const Bound hi = data.upper();
  std::set<NotchedBitableau> seen;
  bool ok = true;
  detail::for_each_grid_multiset(
      data.ctx.grid_points(), m, false, [&](const MultisetNN2& u) { return multiset_bounded_by(u, lo, hi); },
      [&](const MultisetNN2& u) {
        const NotchedBitableau bt = brsk(u);
        if (!bitableau_bounded_by(bt, lo, hi) || !seen.insert(bt).second) ok = false;
      });
  return ok;
}

[[nodiscard]] inline GroebnerReport verify_groebner(const RichardsonData& data, std::size_t m_max) {
  GroebnerReport rep;
  for (std::size_t m = 0; m <= m_max; ++m) {
    DegreeReport d;
    d.m = m;
    d.monomials = count_monomials_outside_initial(data, m);
    d.standard = count_standard_monomials(data, m);
    d.brsk_injective = brsk_injective_on_bounded(data, m);
    rep.degrees.push_back(d);
  }
  return rep;
}

/// Number of bounded subsets of the grid of each size.
[[nodiscard]] inline std::vector<std::uint64_t> square_free_profile(const RichardsonData& data) {
  const PointSet grid = data.ctx.grid_points();
  const Bound lo = data.lower();
  const Bound hi = data.upper();
  std::vector<std::uint64_t> counts(grid.size() + 1, 0);
  MultisetNN2 cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    ++counts[cur.degree()];
    for (std::size_t i = from; i < grid.size(); ++i) {
      cur.insert(grid[i]);
      if (multiset_bounded_by(cur, lo, hi)) go(i + 1);
      cur.erase(grid[i]);
    }
  };
  go(0);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

struct DimensionDegree {
  std::size_t dimension = 0;
  std::uint64_t degree = 0;
};

/// Largest size of a bounded subset and how many reach it; checked against
/// l(γ) - l(α) and against the path-family count.
[[nodiscard]] inline DimensionDegree dimension_and_degree(const GrassIndex& alpha, const GrassIndex& beta,
                                                          const GrassIndex& gamma) {
  const RichardsonData data(alpha, gamma, BetaContext(beta));
  const auto profile = square_free_profile(data);
  const DimensionDegree out{profile.size() - 1, profile.back()};
  const int expected_dim = length(gamma) - length(alpha);
  if (static_cast<int>(out.dimension) != expected_dim)
    throw VerificationError("maximal bounded degree " + std::to_string(out.dimension) + " differs from l(gamma)-l(alpha) = " +
                            std::to_string(expected_dim));
  const auto mult = count_families(data.bounds.lower, data.bounds.upper, data.ctx);
  if (out.degree != mult)
    throw VerificationError("square-free count " + std::to_string(out.degree) + " differs from path-family count " +
                            std::to_string(mult));
  return out;
}

}  // namespace richardson
