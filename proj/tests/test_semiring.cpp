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

#include <cmath>
#include <random>
#include <vector>

#include "kleene/integral.hpp"
#include "kleene/semiring.hpp"
#include "support/axioms.hpp"
#include "support/test_utils.hpp"

using namespace kleene;
using kleene::testing::approx_eq;

TEST_CASE("max-plus basic operations", "[semiring]") {
  const max_plus s;
  CHECK(s.add(3, 5) == 5);
  CHECK(s.add(7, -infty) == 7);
  CHECK(s.mul(3, 5) == 8);
  CHECK(s.mul(-infty, 4) == -infty);
  CHECK(s.leq(-infty, -1e308));
  CHECK(s.sup(3, 5) == 5);
  CHECK(s.inf(3, 5) == 3);
  CHECK(s.star(-3) == 0);
  CHECK(s.star(0) == 0);  // the boundary x = 𝟙 is inside the domain
  CHECK(s.inv(3) == -3);
  CHECK(!s.contains(infty));
  CHECK_THROWS_AS(s.star(0.5), divergence_error);
  CHECK_THROWS_AS(s.inv(-infty), domain_error);
}

TEST_CASE("completed max-plus saturates instead of diverging",
          "[semiring]") {
  const auto s = max_plus::completed();
  CHECK(s.star(2) == infty);
  CHECK(s.mul(-infty, infty) == -infty);  // 𝟘 ⊙ ∞ = 𝟘 overrides float NaN
  CHECK(s.mul(infty, -infty) == -infty);
  CHECK(s.mul(3, infty) == infty);
  CHECK(s.inv(-infty) == infty);
  CHECK(s.inv(infty) == -infty);
  CHECK(s.contains(infty));
}

TEST_CASE("min-plus mirrors max-plus with the order reversed",
          "[semiring]") {
  const min_plus s;
  CHECK(s.add(3, 5) == 3);
  CHECK(s.zero() == infty);
  CHECK(s.leq(5, 3));        // canonical order: bigger costs are smaller
  CHECK(!s.leq(3, 5));
  CHECK(s.sup(3, 5) == 3);
  CHECK(s.inf(3, 5) == 5);
  CHECK(s.star(2) == 0);
  CHECK_THROWS_AS(s.star(-1), divergence_error);
  CHECK(min_plus::completed().star(-1) == -infty);
  CHECK(s.mul(infty, -5) == infty);  // 𝟘 absorbs
}

TEST_CASE("max-min lattice carrier", "[semiring]") {
  const max_min s(0, 10);
  CHECK(s.mul(3, 7) == 3);
  CHECK(s.add(3, 7) == 7);
  CHECK(s.star(9) == 10);
  CHECK(s.zero() == 0);
  CHECK(s.one() == 10);
  CHECK(!s.contains(11));
  CHECK_THROWS_AS(s.inv(5), unsupported_operation);
  CHECK_THROWS_AS(max_min(3, 3), domain_error);

  const max_min unit;  // default bounds (0, 1)
  CHECK(unit.leq(0.2, 0.7));
  CHECK(unit.one() == 1);
}

TEST_CASE("plus-times carrier", "[semiring]") {
  const plus_times s;
  CHECK(s.add(2, 3) == 5);
  CHECK(s.mul(2, 3) == 6);
  CHECK(s.sup(2, 7) == 7);
  CHECK(s.star(0.5) == 2.0);
  CHECK(s.star(1.0) == infty);
  CHECK(s.star(infty) == infty);
  CHECK(s.mul(0, infty) == 0);  // 𝟘 ⊙ ∞ = 𝟘
  CHECK(s.inv(0) == infty);
  CHECK(s.inv(infty) == 0);
  CHECK(s.inv(4) == 0.25);
  CHECK(!s.contains(-1));

  const auto strict = plus_times::strict();
  CHECK_THROWS_AS(strict.star(1.0), divergence_error);
  CHECK_THROWS_AS(strict.inv(0.0), domain_error);
  CHECK(!strict.contains(infty));
}

TEST_CASE("deformed addition and the subtropical carrier", "[semiring]") {
  CHECK(approx_eq(maslov_add(1, 1, 1), 1 + std::log(2.0)));
  CHECK(approx_eq(maslov_add(0, 0, 0.01), 0.01 * std::log(2.0)));
  CHECK(maslov_add(4.5, -infty, 0.3) == 4.5);
  CHECK(maslov_add(-infty, -infty, 1.0) == -infty);
  CHECK_THROWS_AS(maslov_add(1, 2, 0), domain_error);
  CHECK_THROWS_AS(maslov_add(1, 2, -1), domain_error);

  // Against the direct textbook evaluation, away from overflow.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> val(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double u = val(rng), v = val(rng);
    for (const double h : {2.0, 1.0, 0.5}) {
      const double direct =
          h * std::log(std::exp(u / h) + std::exp(v / h));
      CHECK(approx_eq(maslov_add(u, v, h), direct, 1e-12, 1e-12));
    }
  }

  const subtropical s(0.5);
  CHECK(s.mul(2, 3) == 5);
  CHECK(s.add(1, -infty) == 1);
  CHECK(s.inv(2.5) == -2.5);
  CHECK_THROWS_AS(s.star(1.0), unsupported_operation);
  CHECK_THROWS_AS(subtropical(0.0), domain_error);
}

TEST_CASE("dequantization envelope and the h -> 0 limit", "[semiring]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> val(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const double u = val(rng), v = val(rng);
    const double m = std::max(u, v);
    for (const double h : {1.0, 0.1, 0.01, 0.001}) {
      const double r = maslov_add(u, v, h);
      CHECK(m <= r);
      CHECK(r <= m + h * std::log(2.0));
    }
  }
}

TEST_CASE("negation is an isomorphism between max-plus and min-plus",
          "[semiring]") {
  const max_plus mp;
  const min_plus mn;
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> val(-40, 40);
  for (int i = 0; i < 2000; ++i) {
    const double a = val(rng), b = val(rng);
    CHECK(-mp.add(a, b) == mn.add(-a, -b));
    CHECK(-mp.mul(a, b) == mn.mul(-a, -b));
  }
  CHECK(-mp.add(3, -infty) == mn.add(-3, infty));
}

TEMPLATE_TEST_CASE("star satisfies its defining identity and monotonicity",
                   "[semiring]", max_plus, min_plus, max_min, plus_times) {
  // Completed carriers so the star is total on the sampled values.
  const TestType s = [] {
    if constexpr (std::is_same_v<TestType, max_plus>)
      return max_plus::completed();
    else if constexpr (std::is_same_v<TestType, min_plus>)
      return min_plus::completed();
    else
      return TestType{};
  }();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5000; ++i) {
    const double x = kleene::testing::sample_element(s, rng);
    const double st = s.star(x);
    const double lhs1 = s.add(s.one(), s.mul(x, st));
    const double lhs2 = s.add(s.one(), s.mul(st, x));
    if (s.idempotent()) {
      CHECK(st == lhs1);
      CHECK(st == lhs2);
    } else {
      CHECK(approx_eq(st, lhs1, 1e-9));
      CHECK(approx_eq(st, lhs2, 1e-9));
    }
    const double y = kleene::testing::sample_element(s, rng);
    const double a = s.leq(x, y) ? x : y;
    const double b = s.leq(x, y) ? y : x;
    CHECK(s.leq(s.star(a), s.star(b)));
  }
  CHECK(s.star(s.zero()) == s.one());
}

TEMPLATE_TEST_CASE("inversion cancels and is an involution", "[semiring]",
                   max_plus, min_plus, plus_times) {
  const TestType s;
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> unit(0.1, 9.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = unit(rng);
    CHECK(approx_eq(s.mul(x, s.inv(x)), s.one()));
    CHECK(approx_eq(s.inv(s.inv(x)), x));
  }
}

TEST_CASE("axiom suite passes on every carrier", "[semiring][axioms]") {
  const std::size_t reps = 2000;
  CHECK(kleene::testing::run_axiom_suite(max_plus(), reps, 101).ok());
  CHECK(kleene::testing::run_axiom_suite(max_plus::completed(), reps, 102)
            .ok());
  CHECK(kleene::testing::run_axiom_suite(min_plus(), reps, 103).ok());
  CHECK(kleene::testing::run_axiom_suite(max_min(), reps, 104).ok());
  CHECK(kleene::testing::run_axiom_suite(plus_times(), reps, 105).ok());
  CHECK(kleene::testing::run_axiom_suite(subtropical(1.0), reps, 106).ok());
}

TEST_CASE("sup-integral over finite tables", "[semiring][integral]") {
  const max_plus mp;
  const min_plus mn;
  const std::vector<double> f{1, 4, 2};
  CHECK(idempotent_integral(mp, std::span<const double>(f)) == 4);
  const std::vector<double> g{1, 4};
  CHECK(idempotent_integral(mn, std::span<const double>(g)) == 1);
  const std::vector<double> single{-infty};
  CHECK(idempotent_integral(mp, std::span<const double>(single)) == -infty);

  // Empty tables: 𝟘 in a complete carrier, an error otherwise.
  const std::vector<double> empty;
  CHECK(idempotent_integral(max_plus::completed(),
                            std::span<const double>(empty)) == -infty);
  CHECK_THROWS_AS(idempotent_integral(mp, std::span<const double>(empty)),
                  domain_error);
  CHECK_THROWS_AS(
      idempotent_integral(plus_times(), std::span<const double>(f)),
      domain_error);  // not idempotent
}

TEST_CASE("measure integral is the universal scalar product",
          "[semiring][integral]") {
  const std::vector<double> phi{1, 2};
  const std::vector<double> psi{3, 1};
  const std::span<const double> p(phi), q(psi);
  CHECK(idempotent_measure_integral(max_plus(), p, q) == 4);
  CHECK(idempotent_measure_integral(min_plus(), p, q) == 3);
  CHECK(idempotent_measure_integral(plus_times(), p, q) == 5);

  const std::vector<double> shorter{1};
  CHECK_THROWS_AS(
      idempotent_measure_integral(max_plus(), p,
                                  std::span<const double>(shorter)),
      domain_error);
}
