/*
 * Copyright 2026 The kleene authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kleene/closure.hpp"
#include "kleene/graph.hpp"
#include "kleene/opcount.hpp"
#include "support/test_utils.hpp"

using namespace kleene;
using kleene::testing::mat_approx_eq;

namespace {

const max_plus mp;
const min_plus mn;

/// Arcs 1→2 weight 1, 2→3 weight 2, 1→3 weight 5, over min-plus.
matrix<double> shortest_path_instance() {
  return matrix<double>(3, 3,
                        {infty, 1, 5, infty, infty, 2, infty, infty, infty});
}

}  // namespace

TEST_CASE("closure of the zero matrix is the identity", "[closure]") {
  const auto o = zeros(mp, 4, 4);
  CHECK(star_elimination(mp, o) == identity(mp, 4));
  CHECK(star_block(mp, o) == identity(mp, 4));
  const auto series = star_series(mp, o, 4);
  CHECK(series.sum == identity(mp, 4));
  CHECK(series.stabilized);
  CHECK(series.terms == 0);
}

TEST_CASE("1x1 closure is the scalar star", "[closure]") {
  const matrix<double> a(1, 1, {-2});
  CHECK(star_block(mp, a) == matrix<double>(1, 1, {0}));
  CHECK(star_elimination(mp, a) == matrix<double>(1, 1, {0}));
}

TEST_CASE("all three algorithms solve the shortest-path instance",
          "[closure]") {
  const auto a = shortest_path_instance();
  const auto oracle = brute_force_closure(mn, a, 2);
  const auto elim = star_elimination(mn, a);
  CHECK(elim == oracle);
  CHECK(star_block(mn, a) == oracle);
  const auto series = star_series(mn, a, 3);
  CHECK(series.stabilized);
  CHECK(series.sum == oracle);
  CHECK(elim(0, 2) == 3);  // via the intermediate node, not the direct arc
}

TEST_CASE("algorithms agree on random idempotent instances", "[closure]") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 5;  // up to 6
    {
      const auto a = testing::random_convergent(mn, rng, n);
      const auto elim = star_elimination(mn, a);
      CHECK(star_block(mn, a) == elim);
      const auto series = star_series(mn, a, n);
      CHECK(series.stabilized);
      CHECK(series.sum == elim);
    }
    {
      const auto a = testing::random_convergent(mp, rng, n);
      const auto elim = star_elimination(mp, a);
      CHECK(star_block(mp, a) == elim);
    }
    {
      const max_min s(0, 10);
      const auto a = testing::random_convergent(s, rng, n);
      const auto elim = star_elimination(s, a);
      CHECK(star_block(s, a) == elim);
      CHECK(star_series(s, a, n).sum == elim);
    }
  }
}

TEST_CASE("closure satisfies its fixed-point identities", "[closure]") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const auto a = testing::random_convergent(mp, rng, n);
    const auto st = star_elimination(mp, a);
    CHECK(mat_add(mp, mat_mul(mp, a, st), identity(mp, n)) == st);
    CHECK(mat_add(mp, mat_mul(mp, st, a), identity(mp, n)) == st);
  }
  // Float ⊙-chains: same identities at 1e-9 over plus-times.
  const plus_times pt;
  for (int t = 0; t < 50; ++t) {
    const auto a = testing::random_substochastic(rng, 4);
    const auto st = star_elimination(pt, a);
    CHECK(mat_approx_eq(mat_add(pt, mat_mul(pt, a, st), identity(pt, 4)), st,
                        1e-9));
  }
}

TEST_CASE("conway identities", "[closure]") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const auto a = testing::random_convergent(mp, rng, n);
    const auto b = testing::random_convergent(mp, rng, n);
    // (A ⊕ B)* = (A*B)* A*
    const auto sa = star_elimination(mp, a);
    const auto lhs = star_elimination(mp, mat_add(mp, a, b));
    const auto rhs =
        mat_mul(mp, star_elimination(mp, mat_mul(mp, sa, b)), sa);
    CHECK(lhs == rhs);
    // (AB)* A = A (BA)*
    const auto ab = star_elimination(mp, mat_mul(mp, a, b));
    const auto ba = star_elimination(mp, mat_mul(mp, b, a));
    CHECK(mat_mul(mp, ab, a) == mat_mul(mp, a, ba));
  }
}

TEST_CASE("strictly triangular matrices stabilize early", "[closure]") {
  // The two-arc route 1→2→3 (weight 5) beats the direct arc (weight 4),
  // so the A² term genuinely contributes.
  const matrix<double> a(
      3, 3, {-infty, 2, 4, -infty, -infty, 3, -infty, -infty, -infty});
  const auto series = star_series(mp, a, 3);
  CHECK(series.stabilized);
  CHECK(series.terms == 2);  // I ⊕ A ⊕ A² is already the closure
  CHECK(series.sum == star_elimination(mp, a));
  CHECK(series.sum(0, 2) == 5);
}

TEST_CASE("series reports when it does not stabilize", "[closure]") {
  const matrix<double> a(1, 1, {1.0});  // a cycle of positive weight
  const auto series = star_series(mp, a, 6);
  CHECK(!series.stabilized);
  CHECK(series.sum(0, 0) == 6.0);
}

TEST_CASE("convergent max-plus series equals the block closure",
          "[closure]") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + rng() % 4;
    auto a = testing::random_convergent(mp, rng, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = mp.zero();
    // The sums settle by S_{n-1}; one extra term witnesses S_{n-1} = S_n.
    const auto series = star_series(mp, a, n);
    CHECK(series.stabilized);
    CHECK(series.terms <= n - 1);
    CHECK(series.sum == star_block(mp, a));
  }
}

TEST_CASE("divergence surfaces per carrier flavour", "[closure]") {
  matrix<double> a(2, 2, {0.5, -infty, -infty, -1});
  CHECK_THROWS_AS(star_elimination(mp, a), divergence_error);
  CHECK_THROWS_AS(star_block(mp, a), divergence_error);
  const auto closed = star_elimination(max_plus::completed(), a);
  CHECK(closed(0, 0) == infty);
  CHECK(closed(1, 1) == 0);
}

TEST_CASE("nonidempotent closure matches the classical inverse",
          "[closure]") {
  std::mt19937_64 rng(47);
  const plus_times pt;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 7;  // up to 8
    const auto a = testing::random_substochastic(rng, n);
    const auto closure = star_elimination(pt, a);
    const auto inverse = testing::inverse_of_identity_minus(a);
    CHECK(mat_approx_eq(closure, inverse, 1e-9));
    CHECK(mat_approx_eq(star_block(pt, a), inverse, 1e-9));
  }
}

TEST_CASE("elimination op counts are exactly n³+n² muls, n³+n adds, n stars",
          "[closure][opcount]") {
  std::mt19937_64 rng(53);
  const auto a = testing::random_convergent(mn, rng, 3);
  op_count tally;
  const counting<min_plus> counted(mn, tally);
  star_elimination(counted, a);
  CHECK(tally.stars == 3);
  CHECK(tally.muls == 27 + 9);
  CHECK(tally.adds == 27 + 3);
  CHECK(tally.sups == 0);
  CHECK(tally.invs == 0);

  // Tallies from separate tasks merge additively.
  op_count other;
  other.adds = 5;
  other.stars = 1;
  auto merged = tally;
  merged += other;
  CHECK(merged.adds == tally.adds + 5);
  CHECK(merged.stars == 4);
  CHECK(merged.total() == tally.total() + 6);
}

TEST_CASE("negative arcs without negative cycles stay convergent",
          "[closure]") {
  // Classic relaxation territory: one arc saves cost below zero, but no
  // cycle is negative, so the strict carrier handles it.
  const matrix<double> a(3, 3,
                         {infty, 4, infty, infty, infty, -2, 1, infty,
                          infty});
  const auto elim = star_elimination(mn, a);
  CHECK(elim == brute_force_closure(mn, a, 2));
  CHECK(elim(0, 2) == 2);  // 4 + (-2)

  // Turning the cycle negative diverges in the strict carrier and
  // saturates in the completed one.
  matrix<double> bad = a;
  bad(2, 0) = -3;  // cycle weight 4 - 2 - 3 < 0
  CHECK_THROWS_AS(star_elimination(mn, bad), divergence_error);
  CHECK(star_elimination(min_plus::completed(), bad)(0, 0) == -infty);
}

TEST_CASE("bellman solve", "[closure][bellman]") {
  // A = O keeps the right-hand side.
  const auto b0 = matrix<double>(3, 2, {1, 2, 3, 4, 5, 6});
  CHECK(solve_bellman(mp, zeros(mp, 3, 3), b0) == b0);

  // Two-node profit instance: arc 1→2 of profit 3, terminal (0, 10).
  const matrix<double> a(2, 2, {-infty, 3, -infty, -infty});
  const matrix<double> b(2, 1, {0, 10});
  const auto x = solve_bellman(mp, a, b);
  CHECK(x == matrix<double>(2, 1, {13, 10}));

  // The defining identity holds exactly.
  CHECK(mat_add(mp, mat_mul(mp, a, x), b) == x);

  CHECK_THROWS_AS(solve_bellman(mp, a, matrix<double>(3, 1, {0, 0, 0})),
                  domain_error);
}

TEST_CASE("bellman iterates climb to the least solution within n steps",
          "[closure][bellman]") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const auto a = testing::random_convergent(mn, rng, n);
    matrix<double> b(n, 1);
    for (std::size_t i = 0; i < n; ++i)
      b(i, 0) = testing::random_weight(mn, rng, 0, 9, 0.2);
    const auto least = solve_bellman(mn, a, b);
    auto x = b;
    bool reached = (x == least);
    for (std::size_t k = 0; k < n && !reached; ++k) {
      const auto next = mat_add(mn, mat_mul(mn, a, x), b);
      CHECK(mat_leq(mn, x, next));  // ⪯-nondecreasing
      x = next;
      reached = (x == least);
    }
    CHECK(reached);
    CHECK(mat_leq(mn, least, x));
  }
}
