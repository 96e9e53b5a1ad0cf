#pragma once
// The bounded RSK correspondence between nonvanishing multisets on ℕ² and
// nonvanishing semistandard notched bitableaux, its inverse, and a checker
// for boundedness preservation.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "richardson/chains.hpp"
#include "richardson/error.hpp"
#include "richardson/multiset.hpp"
#include "richardson/tableau.hpp"

namespace richardson {

/// b descending, then a descending.
[[nodiscard]] inline std::vector<Point> lex_sort(const MultisetNN2& u) {
  detail::require(is_negative(u), "lex_sort needs a negative multiset");
  std::vector<Point> pairs = u.elements();
  std::stable_sort(pairs.begin(), pairs.end(), [](const Point& x, const Point& y) {
    if (x.f != y.f) return x.f > y.f;
    return x.e > y.e;
  });
  return pairs;
}

struct BrskStep {
  Point pair;
  BumpingRecord record;
  NotchedBitableau snapshot;
};

struct BrskTrace {
  std::vector<BrskStep> steps;
};

/// One BRSK step: P ←_b a, with b placed at the left end of the new-box row of Q.
[[nodiscard]] inline std::pair<NotchedBitableau, BumpingRecord> brsk_step(const NotchedBitableau& bt, Point pair) {
  InsertionResult ins = bounded_insert(bt.p(), pair.e, pair.f);
  NotchedTableau q = bt.q();
  const std::size_t row = ins.record.new_box.row;
  if (row > q.rows.size()) q.rows.resize(row);
  q.rows[row - 1].insert(q.rows[row - 1].begin(), pair.f);
  return {NotchedBitableau(std::move(ins.tableau), std::move(q)), std::move(ins.record)};
}

[[nodiscard]] inline NotchedBitableau brsk_negative(const MultisetNN2& u, BrskTrace* trace = nullptr) {
  NotchedBitableau bt;
  for (const Point& pair : lex_sort(u)) {
    auto [next, record] = brsk_step(bt, pair);
    bt = std::move(next);
    if (trace) trace->steps.push_back({pair, std::move(record), bt});
  }
  return bt;
}

/// Pairs emitted by the reverse algorithm, in lexicographic order.
[[nodiscard]] inline std::vector<Point> rbrsk_pairs(const NotchedBitableau& bt) {
  detail::require(is_row_strict(bt), "bitableau is not row strict");
  detail::require(classify_bitableau(bt) == BitableauClass::negative, "rbrsk needs a negative bitableau");
  detail::require(is_semistandard_bitableau(bt), "rbrsk needs a semistandard bitableau");

  NotchedTableau p = bt.p();
  NotchedTableau q = bt.q();
  std::vector<Point> reversed;
  while (!q.empty()) {
    int b = q.rows.front().front();
    for (const auto& row : q.rows) b = std::min(b, row.front());
    std::size_t j = q.rows.size();
    while (q.rows[j - 1].front() != b) --j;
    const std::size_t col = detail::count_below(p.rows[j - 1], b);
    detail::require(col >= 1, "no entry below the bound in the reverse-start row");
    ReverseInsertionResult rev = reverse_bounded_insert(p, b, {j, col});
    q.rows[j - 1].erase(q.rows[j - 1].begin());
    if (q.rows[j - 1].empty()) {
      detail::require(j == q.rows.size(), "reverse step would leave an interior empty row");
      q.rows.pop_back();
    }
    p = std::move(rev.tableau);
    detail::require(p.shape() == q.shape(), "reverse step broke the shape");
    reversed.push_back({rev.value, b});
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

[[nodiscard]] inline MultisetNN2 rbrsk_negative(const NotchedBitableau& bt) {
  return MultisetNN2::from_range(rbrsk_pairs(bt));
}

/// BRSK(U⁻) on top of ι(BRSK(ι(U⁺))).
[[nodiscard]] inline NotchedBitableau brsk(const MultisetNN2& u) {
  detail::require(is_nonvanishing(u), "brsk needs a nonvanishing multiset");
  const NotchedBitableau neg = brsk_negative(negative_part(u));
  const MultisetNN2 pos = positive_part(u);
  if (pos.empty()) return neg;
  return concat_rows(neg, iota(brsk_negative(iota(pos))));
}

[[nodiscard]] inline MultisetNN2 rbrsk(const NotchedBitableau& bt) {
  auto [neg, pos] = split_parts(bt);
  MultisetNN2 u = rbrsk_negative(neg);
  if (pos.num_rows() > 0) u = multiset_union(u, iota(rbrsk_negative(iota(pos))));
  return u;
}

// --------------------------------------------------------------------------
// Boundedness preservation

enum class PreservationStatus { preserved, precondition_failed, postcondition_failed, witness_failed };

[[nodiscard]] inline std::string to_string(PreservationStatus s) {
  switch (s) {
    case PreservationStatus::preserved: return "preserved";
    case PreservationStatus::precondition_failed: return "precondition_failed";
    case PreservationStatus::postcondition_failed: return "postcondition_failed";
    case PreservationStatus::witness_failed: return "witness_failed";
  }
  return "unknown";
}

struct PreservationReport {
  PreservationStatus status = PreservationStatus::preserved;
  std::string detail;
  [[nodiscard]] bool ok() const { return status == PreservationStatus::preserved; }
};

/// Builds, for a negative U and every prefix U^(k), chains C[j] (1 ≤ j ≤ m(k))
/// of j elements of U^(k) whose last first-component is the j-th entry of row 1
/// of P^(k). Returns an empty string on success, otherwise what went wrong.
[[nodiscard]] inline std::string check_prefix_witness_chains(const MultisetNN2& u) {
  const std::vector<Point> pairs = lex_sort(u);
  NotchedBitableau bt;
  std::vector<PointSet> chains;  // chains[j-1] = C_{k,j}
  MultisetNN2 prefix;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const Point pair = pairs[k];
    auto [next, record] = brsk_step(bt, pair);
    bt = std::move(next);
    prefix.insert(pair);

    const std::size_t l = record.route.front().col;
    const bool appended_in_row_one = record.new_box.row == 1;
    if (l > chains.size() + 1) return "bumped position exceeds known chains";
    PointSet c = l == 1 ? PointSet{} : chains[l - 2];
    c.push_back(pair);
    if (l <= chains.size()) {
      chains[l - 1] = std::move(c);
    } else {
      chains.push_back(std::move(c));
    }
    if (appended_in_row_one) chains.resize(l);

    const Row& p1 = bt.p_row(1);
    const Row& q1 = bt.q_row(1);
    const std::size_t m = detail::count_below(p1, q1.front());
    if (m != chains.size()) return "m(k) disagrees with the number of witness chains";
    for (std::size_t j = 1; j <= m; ++j) {
      const PointSet& cj = chains[j - 1];
      if (cj.size() != j || !is_chain(cj)) return "witness is not a chain of the right length";
      if (cj.back().e != p1[j - 1]) return "witness does not end at the row-one entry";
      for (const auto& pt : cj)
        if (!prefix.contains(pt)) return "witness leaves the prefix multiset";
    }
  }
  return {};
}

/// Checks that BRSK(U) is bounded by T, W whenever U is, and that the
/// prefix witness chains exist for U⁻ and for ι(U⁺).
[[nodiscard]] inline PreservationReport verify_boundedness_preservation(const MultisetNN2& u, const Bound& lower,
                                                                        const Bound& upper) {
  detail::require(is_nonvanishing(u), "multiset has vanishing points");
  if (!multiset_bounded_by(u, lower, upper))
    return {PreservationStatus::precondition_failed, "multiset is not bounded by the given bounds"};
  const NotchedBitableau bt = brsk(u);
  if (!bitableau_bounded_by(bt, lower, upper))
    return {PreservationStatus::postcondition_failed, "BRSK output is not bounded"};
  if (auto why = check_prefix_witness_chains(negative_part(u)); !why.empty())
    return {PreservationStatus::witness_failed, "negative part: " + why};
  if (auto why = check_prefix_witness_chains(iota(positive_part(u))); !why.empty())
    return {PreservationStatus::witness_failed, "positive part: " + why};
  return {};
}

}  // namespace richardson
