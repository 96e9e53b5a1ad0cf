#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "richardson/grassmannian.hpp"

using namespace richardson;

TEST_CASE("index validation", "[grassmannian]") {
  CHECK_NOTHROW(GrassIndex(2, 4, {4, 1}));
  CHECK(GrassIndex(2, 4, {4, 1}).elems() == std::vector<int>{1, 4});
  CHECK_THROWS_AS(GrassIndex(2, 4, {1}), DomainError);
  CHECK_THROWS_AS(GrassIndex(2, 4, {1, 1}), DomainError);
  CHECK_THROWS_AS(GrassIndex(2, 4, {0, 1}), DomainError);
  CHECK_THROWS_AS(GrassIndex(2, 4, {1, 5}), DomainError);
  CHECK_THROWS_AS(GrassIndex(4, 4, {1, 2, 3, 4}), DomainError);
}

TEST_CASE("length", "[grassmannian]") {
  CHECK(length(GrassIndex::identity(4, 9)) == 0);
  CHECK(length(GrassIndex(4, 9, {1, 2, 3, 5})) == 1);
  CHECK(length(GrassIndex(4, 9, {3, 6, 8, 9})) == 16);
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d) REQUIRE(length(GrassIndex::longest(d, n)) == d * (n - d));
}

TEST_CASE("Bruhat order on indices", "[grassmannian]") {
  const GrassIndex a(4, 9, {1, 2, 3, 5});
  CHECK(index_leq(a, GrassIndex(4, 9, {1, 5, 6, 8})));
  CHECK(index_leq(a, a));
  CHECK_FALSE(index_leq(GrassIndex(2, 4, {2, 3}), GrassIndex(2, 4, {1, 4})));
  CHECK_THROWS_AS(index_leq(a, GrassIndex(4, 10, {1, 2, 3, 5})), DomainError);
}

TEST_CASE("all indices", "[grassmannian]") {
  CHECK(all_indices(2, 4).size() == 6);
  CHECK(all_indices(3, 7).size() == 35);
  CHECK(all_indices(3, 6).front() == GrassIndex::identity(3, 6));
  CHECK(all_indices(3, 6).back() == GrassIndex::longest(3, 6));
}

TEST_CASE("beta chart", "[grassmannian]") {
  const BetaContext ctx(GrassIndex(4, 9, {1, 5, 6, 8}));
  CHECK(ctx.rows() == std::vector<int>{2, 3, 4, 7, 9});
  CHECK(ctx.cols() == std::vector<int>{1, 5, 6, 8});
  CHECK(ctx.grid_points().size() == 20);
  CHECK(ctx.in_grid({2, 8}));
  CHECK_FALSE(ctx.in_grid({8, 2}));
}

TEST_CASE("theta and (R, S)", "[grassmannian]") {
  const BetaContext ctx(GrassIndex(3, 7, {2, 5, 7}));
  const auto rs = theta_to_rs(GrassIndex(3, 7, {1, 4, 5}), ctx);
  CHECK(rs.r == std::vector<int>{1, 4});
  CHECK(rs.s == std::vector<int>{2, 7});
  CHECK(rs_to_theta(rs, ctx) == GrassIndex(3, 7, {1, 4, 5}));
  CHECK(theta_to_rs(ctx.beta(), ctx) == RSPair{});
  CHECK_THROWS_AS(rs_to_theta({{2}, {5}}, ctx), DomainError);
  CHECK_THROWS_AS(rs_to_theta({{1}, {}}, ctx), DomainError);
}

TEST_CASE("theta and (R, S) are inverse", "[grassmannian][property]") {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n && d <= 3; ++d)
      for (const auto& beta : all_indices(d, n)) {
        const BetaContext ctx(beta);
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& theta : all_indices(d, n)) {
          const auto rs = theta_to_rs(theta, ctx);
          REQUIRE(rs.r.size() == rs.s.size());
          REQUIRE(rs_to_theta(rs, ctx) == theta);
          seen.insert({rs.r, rs.s});
        }
        REQUIRE(seen.size() == all_indices(d, n).size());
      }
}

TEST_CASE("bound chains for the d = 4 example", "[grassmannian]") {
  const GrassIndex alpha(4, 9, {1, 2, 3, 5});
  const GrassIndex beta(4, 9, {1, 5, 6, 8});
  const GrassIndex gamma(4, 9, {3, 6, 8, 9});
  const BetaContext ctx(beta);
  CHECK(theta_to_rs(alpha, ctx) == RSPair{{2, 3}, {6, 8}});
  CHECK(theta_to_rs(gamma, ctx) == RSPair{{3, 9}, {1, 5}});
  const auto b = build_bound_multisets(alpha, gamma, ctx);
  CHECK(b.lower.sign == Sign::negative);
  CHECK(b.lower.points == PointSet{{2, 8}, {3, 6}});
  CHECK(b.upper.sign == Sign::positive);
  CHECK(b.upper.points == PointSet{{3, 1}, {9, 5}});
  CHECK(first_projection(b.lower.as_multiset()) == MultisetN{2, 3});
  CHECK(second_projection(b.lower.as_multiset()) == MultisetN{6, 8});
}

TEST_CASE("bound chains for the d = 8 example", "[grassmannian]") {
  const GrassIndex alpha(8, 17, {1, 2, 3, 5, 6, 8, 11, 14});
  const GrassIndex beta(8, 17, {2, 7, 8, 9, 12, 13, 16, 17});
  const GrassIndex gamma(8, 17, {8, 9, 11, 13, 14, 15, 16, 17});
  const BetaContext ctx(beta);
  const auto b = build_bound_multisets(alpha, gamma, ctx);
  CHECK(b.lower.size() == 6);
  CHECK(b.upper.size() == 3);
  CHECK(b.lower.points == PointSet{{1, 17}, {3, 13}, {5, 9}, {6, 7}, {11, 12}, {14, 16}});
  CHECK(b.upper.points == PointSet{{11, 7}, {14, 12}, {15, 2}});
}

TEST_CASE("bound chains edge cases", "[grassmannian]") {
  const GrassIndex beta(2, 5, {2, 4});
  const BetaContext ctx(beta);
  const auto b = build_bound_multisets(beta, beta, ctx);
  CHECK(b.lower.empty());
  CHECK(b.upper.empty());
  CHECK(b.lower.sign == Sign::negative);
  CHECK(b.upper.sign == Sign::positive);
  CHECK_THROWS_AS(build_bound_multisets(GrassIndex(2, 5, {3, 4}), beta, ctx), EmptyRichardsonError);
  CHECK_THROWS_AS(build_bound_multisets(beta, GrassIndex(2, 5, {1, 5}), ctx), EmptyRichardsonError);
}

TEST_CASE("every valid triple has sign-correct bounds", "[grassmannian][property]") {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n && d <= 3; ++d)
      for (const auto& t : oracle::all_triples(d, n)) {
        const BetaContext ctx(t.beta);
        const auto b = build_bound_multisets(t.alpha, t.gamma, ctx);
        REQUIRE(is_negative_twisted_chain(b.lower.points));
        REQUIRE(is_positive_twisted_chain(b.upper.points));
        for (const auto& p : b.lower.points) REQUIRE(ctx.in_grid(p));
        for (const auto& p : b.upper.points) REQUIRE(ctx.in_grid(p));
        // projections are those of (α \ β, β \ α) and (γ \ β, β \ γ)
        const auto ra = theta_to_rs(t.alpha, ctx);
        REQUIRE(first_projection(b.lower.as_multiset()) == MultisetN::from_range(ra.r));
        REQUIRE(second_projection(b.lower.as_multiset()) == MultisetN::from_range(ra.s));
      }
}
