// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "richardson/groebner.hpp"

using namespace richardson;

namespace {

/// Collects failures for one criterion; the first few are kept for the log.
struct Outcome {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;
  std::string note;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

NotchedBitableau bt(std::vector<Row> p, std::vector<Row> q) { return {NotchedTableau(p), NotchedTableau(q)}; }

bool shares_entry(const NotchedBitableau& b) {
  const auto q = b.q().content();
  for (int x : b.p().content().elements())
    if (q.contains(x)) return true;
  return false;
}

bool on_grid(const PointSet& c, const BetaContext& ctx) {
  return std::all_of(c.begin(), c.end(), [&](const Point& p) { return ctx.in_grid(p); });
}

// --------------------------------------------------------------------------

Outcome brsk_golden() {
  Outcome o;
  const MultisetNN2 u{{7, 8}, {2, 8}, {6, 7}, {4, 7}, {1, 7}, {3, 6}, {2, 4}};
  const std::vector<NotchedBitableau> expected{
      bt({{7}}, {{8}}),
      bt({{2}, {7}}, {{8}, {8}}),
      bt({{2, 6}, {7}}, {{7, 8}, {8}}),
      bt({{2, 4}, {6, 7}}, {{7, 8}, {7, 8}}),
      bt({{1, 4}, {2, 7}, {6}}, {{7, 8}, {7, 8}, {7}}),
      bt({{1, 3}, {2, 4, 7}, {6}}, {{7, 8}, {6, 7, 8}, {7}}),
      bt({{1, 2}, {2, 3, 4, 7}, {6}}, {{7, 8}, {4, 6, 7, 8}, {7}}),
  };
  BrskTrace trace;
  const auto t0 = std::chrono::steady_clock::now();
  const auto out = brsk(u);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  (void)brsk_negative(u, &trace);
  o.check(trace.steps.size() == expected.size(), [&] { return "step count " + str(trace.steps.size()); });
  for (std::size_t k = 0; k < std::min(trace.steps.size(), expected.size()); ++k)
    o.check(trace.steps[k].snapshot == expected[k],
            [&] { return "step " + str(k + 1) + " gave " + str(trace.steps[k].snapshot); });
  o.check(out == expected.back(), [&] { return "final " + str(out); });
  o.check(elapsed < 1.0, [&] { return "took " + str(elapsed) + " ms"; });
  return o;
}

Outcome insertion_golden() {
  Outcome o;
  const NotchedTableau p{{1, 2, 4, 7}, {1, 5, 8}, {3, 6, 7, 8, 9}, {4, 6}};
  const NotchedTableau expected{{1, 2, 3, 7}, {1, 4, 8}, {3, 5, 6, 7, 8, 9}, {4, 6}};
  const auto res = bounded_insert(p, 3, 6);
  o.check(res.tableau == expected, [&] { return "got " + str(res.tableau); });
  o.check(res.record.new_box == BoxPos{3, 2}, [] { return "new box differs"; });
  const auto back = reverse_bounded_insert(res.tableau, 6, res.record.new_box);
  o.check(back.tableau == p && back.value == 3, [] { return "reverse insertion differs"; });
  return o;
}

Outcome multiplicity_example() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const GrassIndex alpha(4, 9, {1, 2, 3, 5});
  const GrassIndex beta(4, 9, {1, 5, 6, 8});
  const GrassIndex gamma(4, 9, {3, 6, 8, 9});
  const auto full = multiplicity(alpha, beta, gamma);
  const auto schubert = multiplicity(GrassIndex::identity(4, 9), beta, gamma);
  const auto opposite = multiplicity(alpha, beta, GrassIndex::longest(4, 9));
  o.check(full == 6, [&] { return "multiplicity " + str(full); });
  o.check(schubert == 2, [&] { return "Schubert restriction " + str(schubert); });
  o.check(opposite == 3, [&] { return "opposite restriction " + str(opposite); });
  o.check(schubert * opposite == full, [] { return "product law fails"; });
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(elapsed < 1.0, [&] { return "took " + str(elapsed) + " s"; });
  return o;
}

Outcome bijection() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();

  // RBRSK ∘ BRSK on every negative multiset, entries ≤ 6, degree ≤ 5
  const auto multisets = oracle::all_multisets(oracle::negative_points(6), 5);
  std::set<NotchedBitableau> images;
  for (const auto& u : multisets) {
    const auto b = brsk(u);
    o.check(is_semistandard_bitableau(b) && rbrsk(b) == u, [&] { return "RBRSK(BRSK(U)) != U for " + str(u); });
    images.insert(b);
  }
  o.check(images.size() == multisets.size(), [] { return "BRSK not injective"; });

  // BRSK ∘ RBRSK on every negative semistandard bitableau of the same size.
  // Those RBRSK accepts must round trip and be exactly the images; those it
  // rejects all have an entry common to P and Q.
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  for (const auto& b : oracle::negative_bitableaux(6, 5)) {
    try {
      const auto u = rbrsk(b);
      o.check(brsk(u) == b, [&] { return "BRSK(RBRSK(B)) != B for " + str(b); });
      o.check(images.contains(b), [&] { return "accepted non-image " + str(b); });
      ++accepted;
    } catch (const DomainError&) {
      o.check(shares_entry(b), [&] { return "rejected bitableau with disjoint entries " + str(b); });
      ++rejected;
    }
  }
  o.check(accepted == multisets.size(), [&] { return "accepted " + str(accepted); });

  // on a genuine β̄×β grid every nonvanishing semistandard bitableau inverts
  for (int n = 4; n <= 6; ++n)
    for (int d = 1; d < n && d <= 3; ++d)
      for (const auto& beta : all_indices(d, n)) {
        const RichardsonData data(GrassIndex::identity(d, n), GrassIndex::longest(d, n), BetaContext(beta));
        for (std::size_t m = 0; m <= 4; ++m) {
          std::uint64_t bounded = count_bounded_multisets(data, m);
          const auto n_bt = for_each_standard_bitableau(data, m, [&](const NotchedBitableau& b) {
            try {
              const auto u = rbrsk(b);
              o.check(brsk(u) == b, [&] { return "grid BRSK(RBRSK(B)) != B for " + str(b); });
            } catch (const DomainError& e) {
              o.check(false, [&] { return "grid bitableau rejected " + str(b) + ": " + e.what(); });
            }
          });
          o.check(n_bt == bounded, [&] { return "grid count mismatch at m=" + str(m); });
        }
      }

  // seeded random nonvanishing multisets on 5×5 grids
  std::mt19937_64 rng(20240601);
  const auto betas = all_indices(5, 10);
  for (int k = 0; k < 10000; ++k) {
    const BetaContext ctx(betas[rng() % betas.size()]);
    const auto u = oracle::random_multiset(rng, ctx.grid_points(), 10);
    const auto b = brsk(u);
    o.check(is_nonvanishing(b) && is_semistandard_bitableau(b), [&] { return "bad image of " + str(u); });
    const auto back = rbrsk(b);
    o.check(back == u, [&] { return "random RBRSK(BRSK(U)) != U for " + str(u); });
    o.check(brsk(back) == b, [&] { return "random BRSK(RBRSK(B)) != B for " + str(u); });
  }

  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(elapsed < 60.0, [&] { return "took " + str(elapsed) + " s"; });
  o.note = str(multisets.size()) + " multisets, " + str(accepted) + " bitableaux inverted, " + str(rejected) +
           " with shared P/Q entries rejected";
  return o;
}

Outcome boundedness() {
  Outcome o;
  // interleaved 4×4 grid so that both signs occur
  const BetaContext ctx(GrassIndex(4, 8, {2, 4, 6, 7}));
  const PointSet grid = ctx.grid_points();
  std::vector<Bound> lowers;
  std::vector<Bound> uppers;
  lowers.push_back(unbounded);
  uppers.push_back(unbounded);
  for (const auto& c : oracle::negative_twisted_chains(8)) {
    if (on_grid(c, ctx)) lowers.push_back(to_multiset(c));
    const auto pc = oracle::swap_all(c);
    if (on_grid(pc, ctx)) uppers.push_back(to_multiset(pc));
  }
  std::size_t applicable = 0;
  for (const auto& u : oracle::all_multisets(grid, 4))
    for (const auto& lo : lowers)
      for (const auto& hi : uppers) {
        const auto rep = verify_boundedness_preservation(u, lo, hi);
        if (rep.status == PreservationStatus::precondition_failed) continue;
        ++applicable;
        o.check(rep.ok(), [&] { return str(u) + ": " + rep.detail; });
      }
  o.note = str(lowers.size()) + " lower x " + str(uppers.size()) + " upper bounds, " + str(applicable) +
           " bounded (U, T, W) triples";
  return o;
}

Outcome order_equivalence() {
  Outcome o;
  const auto chains = oracle::negative_twisted_chains(8);
  for (const auto& r : chains)
    for (const auto& s : chains) {
      const bool by_depth = depth_leq_negative(r, s);
      const bool by_multiset = multiset_order_leq(to_multiset(r), to_multiset(s));
      const bool by_diagonal = depth_leq_negative_diagonal(r, s);
      o.check(by_depth == by_multiset && by_depth == by_diagonal, [&] {
        return str(to_multiset(r)) + " vs " + str(to_multiset(s)) + ": depth " + str(by_depth) + ", multiset " +
               str(by_multiset) + ", diagonal " + str(by_diagonal);
      });
      const auto pr = make_twisted_chain(Sign::negative, r);
      const auto ps = make_twisted_chain(Sign::negative, s);
      o.check(chain_order_leq(iota(ps), iota(pr)) == by_multiset, [&] { return "positive chains disagree"; });
    }
  o.note = str(chains.size()) + " negative twisted chains";
  return o;
}

Outcome groebner_counts() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t triples = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : oracle::all_triples(2, n)) {
      ++triples;
      const RichardsonData data(t.alpha, t.gamma, BetaContext(t.beta));
      const auto rep = verify_groebner(data, 4);
      o.check(rep.ok(), [&] {
        return str(t.alpha) + " " + str(t.beta) + " " + str(t.gamma) + " mismatch at m=" + str(*rep.witness());
      });
    }
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(elapsed < 300.0, [&] { return "took " + str(elapsed) + " s"; });
  o.note = str(triples) + " triples, m <= 4";
  return o;
}

Outcome multiplicity_oracle() {
  Outcome o;
  std::size_t triples = 0;
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n && d <= 3; ++d)
      for (const auto& t : oracle::all_triples(d, n)) {
        ++triples;
        const BetaContext ctx(t.beta);
        const auto b = build_bound_multisets(t.alpha, t.gamma, ctx);
        const auto families = count_families(b.lower, b.upper, ctx);
        const auto brute = maximal_bounded_subsets(b.lower, b.upper, ctx);
        const auto expected_dim = static_cast<std::size_t>(length(t.gamma) - length(t.alpha));
        o.check(families == brute.count && brute.max_degree == expected_dim, [&] {
          return str(t.alpha) + " " + str(t.beta) + " " + str(t.gamma) + ": families " + str(families) +
                 ", brute force " + str(brute.count) + " of degree " + str(brute.max_degree);
        });
      }
  o.note = str(triples) + " triples";
  return o;
}

Outcome initial_terms() {
  Outcome o;
  {
    const BetaContext ctx(GrassIndex(3, 7, {2, 5, 7}));
    const auto f = signed_minor(theta_to_rs(GrassIndex(3, 7, {1, 4, 5}), ctx), ctx);
    o.check(initial_term(f.expansion) == MultisetNN2{{1, 7}, {4, 2}},
            [&] { return "worked minor gave " + str(initial_term(f.expansion)); });
  }
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& beta : all_indices(d, n)) {
        const BetaContext ctx(beta);
        for (const auto& theta : all_indices(d, n)) {
          const auto rs = theta_to_rs(theta, ctx);
          if (rs.r.empty() || rs.r.size() > 3) continue;
          const auto f = signed_minor(rs, ctx);
          o.check(initial_term(f.expansion) == chain_monomial(rs.r, rs.s),
                  [&] { return "R=" + str(rs.r.size()) + " minor of " + str(theta) + " in " + str(beta); });
        }
      }
  return o;
}

Outcome rsk_degeneration() {
  Outcome o;
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d < n && d <= 3; ++d) {
      std::vector<int> low(d);
      std::vector<int> high(d);
      for (int i = 0; i < d; ++i) {
        low[i] = i + 1;
        high[i] = n - d + 1 + i;
      }
      for (const auto& beta : {GrassIndex(d, n, low), GrassIndex(d, n, high)}) {
        const BetaContext ctx(beta);
        for (const auto& u : oracle::all_multisets(ctx.grid_points(), 5)) {
          // the grid is one-signed here; the positive case is ordinary RSK on
          // the swapped pairs with P and Q exchanged
          const bool positive = !u.empty() && u.elements().front().sign() == Sign::positive;
          const auto expected =
              positive ? iota(oracle::ordinary_rsk(lex_sort(iota(u)))) : oracle::ordinary_rsk(lex_sort(u));
          const auto got = brsk(u);
          o.check(got == expected, [&] { return str(u) + ": " + str(got) + " vs " + str(expected); });
        }
      }
    }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "BRSK worked example with all seven snapshots", brsk_golden},
      {2, "bounded insertion worked example", insertion_golden},
      {3, "multiplicity 6, restrictions 2 and 3, product law", multiplicity_example},
      {4, "BRSK/RBRSK bijection suite", bijection},
      {5, "BRSK preserves chain bounds on a 4x4 grid", boundedness},
      {6, "depth order equals multiset order and diagonal criterion", order_equivalence},
      {7, "bounded multisets and standard bitableaux counted equal", groebner_counts},
      {8, "path families equal maximal bounded subsets", multiplicity_oracle},
      {9, "initial term of each minor is its chain monomial", initial_terms},
      {10, "BRSK degenerates to ordinary RSK", rsk_degeneration},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures = 1;
      o.first = std::string("exception: ") + e.what();
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.failures == 0;
    if (!ok) ++failed;
    std::printf("%s %2d  %s  [%zu checks, %.3f s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, o.checked, secs,
                o.note.empty() ? "" : "  ", o.note.c_str());
    if (!ok) std::printf("      %zu failure(s); first: %s\n", o.failures, o.first.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
