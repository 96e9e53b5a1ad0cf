#pragma once
// Notched tableaux, Schensted row insertion (row-strict convention), bounded
// insertion and its reverse, and notched bitableaux.
//
// Rows and columns are 1-indexed in every public interface.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "richardson/error.hpp"
#include "richardson/multiset.hpp"

namespace richardson {

using Row = std::vector<int>;

/// Left-justified rows of positive integers; rows may be empty.
struct NotchedTableau {
  std::vector<Row> rows;

  NotchedTableau() = default;
  NotchedTableau(std::vector<Row> r) : rows(std::move(r)) {}  // NOLINT(implicit)
  NotchedTableau(std::initializer_list<Row> r) : rows(r) {}

  [[nodiscard]] std::size_t num_rows() const { return rows.size(); }
  [[nodiscard]] std::size_t num_boxes() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
  }
  [[nodiscard]] std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    s.reserve(rows.size());
    for (const auto& r : rows) s.push_back(r.size());
    return s;
  }
  [[nodiscard]] MultisetN content() const {
    MultisetN m;
    for (const auto& r : rows)
      for (int v : r) m.insert(v);
    return m;
  }
  [[nodiscard]] bool empty() const { return num_boxes() == 0; }

  bool operator==(const NotchedTableau&) const = default;
  auto operator<=>(const NotchedTableau&) const = default;
};

struct BoxPos {
  std::size_t row = 1;
  std::size_t col = 1;
  auto operator<=>(const BoxPos&) const = default;
};

/// Boxes from which entries were bumped, ending with the new box.
struct BumpingRecord {
  std::vector<BoxPos> route;
  BoxPos new_box;
  bool operator==(const BumpingRecord&) const = default;
};

struct InsertionResult {
  NotchedTableau tableau;
  BumpingRecord record;
};

struct ReverseInsertionResult {
  NotchedTableau tableau;
  int value = 0;
};

[[nodiscard]] inline bool is_strictly_increasing(const Row& r) {
  return std::adjacent_find(r.begin(), r.end(), [](int a, int b) { return a >= b; }) == r.end();
}

[[nodiscard]] inline bool is_row_strict(const NotchedTableau& t) {
  return std::all_of(t.rows.begin(), t.rows.end(), is_strictly_increasing);
}

namespace detail {
inline void require_row_strict(const NotchedTableau& t) {
  require(is_row_strict(t), "tableau is not row strict");
}
inline std::size_t count_below(const Row& r, int b) {
  return static_cast<std::size_t>(std::lower_bound(r.begin(), r.end(), b) - r.begin());
}
}  // namespace detail

/// P^{<b}: every entry ≥ b removed. The row count is kept.
[[nodiscard]] inline NotchedTableau truncate_below(const NotchedTableau& p, int b) {
  detail::require_row_strict(p);
  NotchedTableau out;
  out.rows.reserve(p.rows.size());
  for (const auto& r : p.rows) out.rows.emplace_back(r.begin(), r.begin() + detail::count_below(r, b));
  return out;
}

/// Young-tableau semistandardness, ignoring trailing empty rows: row strict,
/// columns weakly increasing, row lengths weakly decreasing, and no empty row
/// above a nonempty one.
[[nodiscard]] inline bool is_semistandard_young(const NotchedTableau& t) {
  if (!is_row_strict(t)) return false;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const Row& above = t.rows[i - 1];
    const Row& below = t.rows[i];
    if (below.size() > above.size()) return false;
    for (std::size_t j = 0; j < below.size(); ++j)
      if (above[j] > below[j]) return false;
  }
  return true;
}

[[nodiscard]] inline bool is_semistandard_on(const NotchedTableau& p, int b) {
  return is_semistandard_young(truncate_below(p, b));
}

/// Ordinary Schensted insertion with the row-strict bumping rule: `a` replaces
/// the smallest entry ≥ a in a row, and the bumped entry moves to the next row.
[[nodiscard]] inline InsertionResult schensted_insert(const NotchedTableau& young, int a) {
  detail::require(a >= 1, "inserted value must be a positive integer");
  detail::require(is_semistandard_young(young), "schensted_insert needs a semistandard Young tableau");
  InsertionResult res{young, {}};
  auto& rows = res.tableau.rows;
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  int carry = a;
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) rows.emplace_back();
    Row& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      res.record.new_box = {i + 1, row.size()};
      res.record.route.push_back(res.record.new_box);
      return res;
    }
    res.record.route.push_back({i + 1, static_cast<std::size_t>(it - row.begin()) + 1});
    std::swap(*it, carry);
  }
}

/// P ←_b a: Schensted insertion of a acting only on the entries < b.
[[nodiscard]] inline InsertionResult bounded_insert(const NotchedTableau& p, int a, int b) {
  detail::require(a >= 1, "inserted value must be a positive integer");
  detail::require(a < b, "bounded insertion needs a < b");
  detail::require_row_strict(p);
  detail::require(is_semistandard_on(p, b), "tableau is not semistandard on the bound");

  NotchedTableau low;
  std::vector<Row> high;
  for (const auto& r : p.rows) {
    const auto k = detail::count_below(r, b);
    low.rows.emplace_back(r.begin(), r.begin() + k);
    high.emplace_back(r.begin() + k, r.end());
  }
  InsertionResult res = schensted_insert(low, a);
  const std::size_t out_rows = std::max(p.rows.size(), res.tableau.rows.size());
  NotchedTableau merged;
  merged.rows.resize(out_rows);
  for (std::size_t i = 0; i < out_rows; ++i) {
    if (i < res.tableau.rows.size()) merged.rows[i] = res.tableau.rows[i];
    if (i < high.size()) merged.rows[i].insert(merged.rows[i].end(), high[i].begin(), high[i].end());
  }
  res.tableau = std::move(merged);
  return res;
}

/// Undoes bounded_insert given the bound and the new box. The new box must be
/// the rightmost entry < b of its row and a corner of P'^{<b}.
[[nodiscard]] inline ReverseInsertionResult reverse_bounded_insert(const NotchedTableau& p, int b,
                                                                   BoxPos new_box) {
  detail::require_row_strict(p);
  detail::require(is_semistandard_on(p, b), "tableau is not semistandard on the bound");
  detail::require(new_box.row >= 1 && new_box.row <= p.rows.size(), "new box row out of range");
  const std::size_t j = new_box.row - 1;

  std::vector<Row> low;
  std::vector<Row> high;
  for (const auto& r : p.rows) {
    const auto k = detail::count_below(r, b);
    low.emplace_back(r.begin(), r.begin() + k);
    high.emplace_back(r.begin() + k, r.end());
  }
  detail::require(new_box.col >= 1 && low[j].size() == new_box.col,
                  "new box is not the rightmost entry below the bound in its row");
  detail::require(j + 1 >= low.size() || low[j + 1].size() < new_box.col,
                  "new box is not a corner of the truncated tableau");

  int carry = low[j].back();
  low[j].pop_back();
  for (std::size_t i = j; i-- > 0;) {
    Row& row = low[i];
    // largest entry ≤ carry
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    detail::require(it != row.begin(), "reverse bumping found no entry to displace");
    --it;
    std::swap(*it, carry);
  }

  ReverseInsertionResult res;
  res.value = carry;
  res.tableau.rows.resize(p.rows.size());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    res.tableau.rows[i] = low[i];
    res.tableau.rows[i].insert(res.tableau.rows[i].end(), high[i].begin(), high[i].end());
  }
  // a row emptied at the bottom was created by the insertion; interior rows stay
  if (res.tableau.rows[j].empty() && j + 1 == res.tableau.rows.size()) res.tableau.rows.pop_back();
  return res;
}

// --------------------------------------------------------------------------
// Bitableaux

/// A pair (P, Q) of notched tableaux of the same shape.
class NotchedBitableau {
 public:
  NotchedBitableau() = default;
  NotchedBitableau(NotchedTableau p, NotchedTableau q) : p_(std::move(p)), q_(std::move(q)) {
    detail::require(p_.shape() == q_.shape(), "bitableau halves have different shapes");
  }

  [[nodiscard]] const NotchedTableau& p() const { return p_; }
  [[nodiscard]] const NotchedTableau& q() const { return q_; }
  [[nodiscard]] std::size_t num_rows() const { return p_.num_rows(); }
  [[nodiscard]] std::size_t degree() const { return p_.num_boxes(); }
  [[nodiscard]] const Row& p_row(std::size_t i) const { return p_.rows.at(i - 1); }
  [[nodiscard]] const Row& q_row(std::size_t i) const { return q_.rows.at(i - 1); }

  bool operator==(const NotchedBitableau&) const = default;
  auto operator<=>(const NotchedBitableau&) const = default;

 private:
  NotchedTableau p_;
  NotchedTableau q_;
};

[[nodiscard]] inline bool is_row_strict(const NotchedBitableau& bt) {
  return is_row_strict(bt.p()) && is_row_strict(bt.q());
}

inline MultisetN row_multiset(const Row& r) { return MultisetN::from_range(r); }

/// P_i - Q_i ≤ P_j - Q_j for a pair of bitableau rows.
[[nodiscard]] inline bool row_pair_leq(const Row& pi, const Row& qi, const Row& pj, const Row& qj) {
  return formal_diff_leq(row_multiset(pi), row_multiset(qi), row_multiset(pj), row_multiset(qj));
}

/// P_1 - Q_1 ≤ ⋯ ≤ P_r - Q_r.
[[nodiscard]] inline bool is_semistandard_bitableau(const NotchedBitableau& bt) {
  detail::require(is_row_strict(bt), "bitableau is not row strict");
  for (std::size_t i = 1; i < bt.num_rows(); ++i)
    if (!row_pair_leq(bt.p_row(i), bt.q_row(i), bt.p_row(i + 1), bt.q_row(i + 1))) return false;
  return true;
}

/// Sign of one row: negative iff P_i ⋖ Q_i, positive iff P_i ⋗ Q_i. Empty rows
/// and rows satisfying neither strict comparison are vanishing.
[[nodiscard]] inline Sign row_sign(const Row& p, const Row& q) {
  if (p.empty() || p.size() != q.size()) return Sign::vanishing;
  bool less = true;
  bool greater = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    less = less && p[k] < q[k];
    greater = greater && p[k] > q[k];
  }
  if (less) return Sign::negative;
  if (greater) return Sign::positive;
  return Sign::vanishing;
}

enum class BitableauClass { negative, positive, nonvanishing, neither };

/// The empty bitableau is reported as negative.
[[nodiscard]] inline BitableauClass classify_bitableau(const NotchedBitableau& bt) {
  detail::require(is_row_strict(bt), "bitableau is not row strict");
  bool all_neg = true;
  bool all_pos = true;
  for (std::size_t i = 1; i <= bt.num_rows(); ++i) {
    const Sign s = row_sign(bt.p_row(i), bt.q_row(i));
    if (s == Sign::vanishing) return BitableauClass::neither;
    all_neg = all_neg && s == Sign::negative;
    all_pos = all_pos && s == Sign::positive;
  }
  if (all_neg) return BitableauClass::negative;
  if (all_pos) return BitableauClass::positive;
  return BitableauClass::nonvanishing;
}

[[nodiscard]] inline bool is_nonvanishing(const NotchedBitableau& bt) {
  return classify_bitableau(bt) != BitableauClass::neither;
}

[[nodiscard]] inline NotchedBitableau slice_rows(const NotchedBitableau& bt, std::size_t from, std::size_t to) {
  NotchedTableau p;
  NotchedTableau q;
  for (std::size_t i = from; i < to; ++i) {
    p.rows.push_back(bt.p().rows[i]);
    q.rows.push_back(bt.q().rows[i]);
  }
  return {std::move(p), std::move(q)};
}

[[nodiscard]] inline NotchedBitableau concat_rows(const NotchedBitableau& top, const NotchedBitableau& bottom) {
  NotchedTableau p = top.p();
  NotchedTableau q = top.q();
  p.rows.insert(p.rows.end(), bottom.p().rows.begin(), bottom.p().rows.end());
  q.rows.insert(q.rows.end(), bottom.q().rows.begin(), bottom.q().rows.end());
  return {std::move(p), std::move(q)};
}

namespace detail {
inline void require_nonvanishing_semistandard(const NotchedBitableau& bt) {
  require(is_row_strict(bt), "bitableau is not row strict");
  require(classify_bitableau(bt) != BitableauClass::neither, "bitableau is not nonvanishing");
  require(is_semistandard_bitableau(bt), "bitableau is not semistandard");
}
}  // namespace detail

/// Top block of negative rows and bottom block of positive rows.
[[nodiscard]] inline std::pair<NotchedBitableau, NotchedBitableau> split_parts(const NotchedBitableau& bt) {
  detail::require_nonvanishing_semistandard(bt);
  std::size_t i = 0;
  while (i < bt.num_rows() && row_sign(bt.p().rows[i], bt.q().rows[i]) == Sign::negative) ++i;
  for (std::size_t k = i; k < bt.num_rows(); ++k)
    detail::require(row_sign(bt.p().rows[k], bt.q().rows[k]) == Sign::positive,
                    "negative row below a positive row");
  return {slice_rows(bt, 0, i), slice_rows(bt, i, bt.num_rows())};
}

/// ι(P, Q): the rows of (Q, P) in reverse order.
[[nodiscard]] inline NotchedBitableau iota(const NotchedBitableau& bt) {
  detail::require_nonvanishing_semistandard(bt);
  NotchedTableau p(std::vector<Row>(bt.q().rows.rbegin(), bt.q().rows.rend()));
  NotchedTableau q(std::vector<Row>(bt.p().rows.rbegin(), bt.p().rows.rend()));
  return {std::move(p), std::move(q)};
}

/// An absent bound imposes no condition; an empty MultisetNN2 is a genuine bound.
using Bound = std::optional<MultisetNN2>;
inline constexpr std::nullopt_t unbounded = std::nullopt;

namespace detail {
inline void require_bound_signs(const Bound& lower, const Bound& upper) {
  require(!lower || is_negative(*lower), "lower bound must be a negative subset");
  require(!upper || is_positive(*upper), "upper bound must be a positive subset");
}
}  // namespace detail

/// T₍₁₎ - T₍₂₎ ≤ P_1 - Q_1 and P_r - Q_r ≤ W₍₁₎ - W₍₂₎. A bitableau with no
/// rows reduces to T ≤ W.
[[nodiscard]] inline bool bitableau_bounded_by(const NotchedBitableau& bt, const Bound& lower,
                                               const Bound& upper) {
  detail::require_bound_signs(lower, upper);
  detail::require(is_semistandard_bitableau(bt), "bitableau is not semistandard");
  if (bt.num_rows() == 0) return !lower || !upper || multiset_order_leq(*lower, *upper);
  if (lower) {
    const Row& p1 = bt.p_row(1);
    const Row& q1 = bt.q_row(1);
    if (!formal_diff_leq(first_projection(*lower), second_projection(*lower), row_multiset(p1), row_multiset(q1)))
      return false;
  }
  if (upper) {
    const Row& pr = bt.p_row(bt.num_rows());
    const Row& qr = bt.q_row(bt.num_rows());
    if (!formal_diff_leq(row_multiset(pr), row_multiset(qr), first_projection(*upper), second_projection(*upper)))
      return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Text rendering

[[nodiscard]] inline std::string render(const NotchedTableau& t) {
  std::ostringstream os;
  for (const auto& r : t.rows) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << '\n';
  }
  return os.str();
}

[[nodiscard]] inline std::string render(const NotchedBitableau& bt) {
  return "P:\n" + render(bt.p()) + "Q:\n" + render(bt.q());
}

inline std::ostream& operator<<(std::ostream& os, const NotchedTableau& t) {
  os << '[';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) os << (j ? "," : "") << t.rows[i][j];
    os << ']';
  }
  return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const NotchedBitableau& bt) {
  return os << "(P=" << bt.p() << ", Q=" << bt.q() << ')';
}

}  // namespace richardson
