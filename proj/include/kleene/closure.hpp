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

/**
 * @file closure.hpp
 *
 * Matrix closure A* = I ⊕ A ⊕ A² ⊕ … and the stationary Bellman solver.
 *
 * Three routes to A* are provided:
 *   - star_elimination: Gauss–Jordan-style pivoting, the default. O(n³)
 *     basic operations.
 *   - star_block: recursive 2×2-block escalator scheme. Same asymptotic
 *     cost; retained as an independently-derived cross-check.
 *   - star_series: explicit truncated power series, exact for nilpotent
 *     (strictly triangular) matrices and for idempotent matrices whose
 *     series stabilizes.
 *
 * All of them are compositions of basic semiring operations only, so they
 * run unchanged over interval carriers and produce exact bounds there.
 */

#ifndef KLEENE_CLOSURE_HPP
#define KLEENE_CLOSURE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "kleene/matrix.hpp"
#include "kleene/semiring.hpp"

namespace kleene {

/**
 * Closure by elimination. Pass k augments every entry with the best walk
 * through pivot k:
 *
 *     a_ij ← a_ij ⊕ a_ik ⊙ (a_kk)* ⊙ a_kj
 *
 * reading a_ik, a_kk, a_kj from the state before the pass, then 𝟙 is
 * joined onto the diagonal. Scalar star divergence in a non-complete
 * carrier propagates as divergence_error.
 */
template <semiring S>
matrix<value_t<S>> star_elimination(const S& s, matrix<value_t<S>> a) {
  detail::require_square(a.rows(), a.cols(), "star_elimination");
  const std::size_t n = a.rows();
  std::vector<value_t<S>> col(n), row(n);
  for (std::size_t k = 0; k < n; ++k) {
    const value_t<S> pivot = s.star(a(k, k));
    for (std::size_t i = 0; i < n; ++i) col[i] = s.mul(a(i, k), pivot);
    for (std::size_t j = 0; j < n; ++j) row[j] = a(k, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = s.add(a(i, j), s.mul(col[i], row[j]));
  }
  for (std::size_t i = 0; i < n; ++i) a(i, i) = s.add(a(i, i), s.one());
  return a;
}

/**
 * Closure by the recursive block scheme. With A split at k = ⌊n/2⌋ into
 * [[A11, A12], [A21, A22]] and D = A22 ⊕ A21 A11* A12:
 *
 *     A* = [[A11* ⊕ A11* A12 D* A21 A11*,   A11* A12 D*],
 *           [D* A21 A11*,                   D*          ]]
 *
 * The base case is the scalar star. Agrees with star_elimination wherever
 * both are defined.
 */
template <semiring S>
matrix<value_t<S>> star_block(const S& s, const matrix<value_t<S>>& a) {
  detail::require_square(a.rows(), a.cols(), "star_block");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  if (n == 1) {
    matrix<value_t<S>> out(1, 1);
    out(0, 0) = s.star(a(0, 0));
    return out;
  }
  const std::size_t k = n / 2;
  const auto a11 = block(a, 0, 0, k, k);
  const auto a12 = block(a, 0, k, k, n - k);
  const auto a21 = block(a, k, 0, n - k, k);
  const auto a22 = block(a, k, k, n - k, n - k);

  const auto s11 = star_block(s, a11);
  const auto d = mat_add(s, a22, mat_mul(s, a21, mat_mul(s, s11, a12)));
  const auto sd = star_block(s, d);
  const auto b12 = mat_mul(s, mat_mul(s, s11, a12), sd);
  const auto b21 = mat_mul(s, mat_mul(s, sd, a21), s11);
  const auto b11 = mat_add(s, s11, mat_mul(s, b12, mat_mul(s, a21, s11)));

  matrix<value_t<S>> out(n, n);
  set_block(out, 0, 0, b11);
  set_block(out, 0, k, b12);
  set_block(out, k, 0, b21);
  set_block(out, k, k, sd);
  return out;
}

/// Truncated closure series together with its stabilization report.
template <class T>
struct series_result {
  matrix<T> sum;            ///< I ⊕ A ⊕ … ⊕ A^max_terms
  bool stabilized = false;  ///< some partial sum satisfied S_k = S_{k+1}
  std::size_t terms = 0;    ///< smallest such k (valid when stabilized)
};

/**
 * The partial sums I ⊕ A ⊕ … ⊕ A^max_terms. Exact closure for strictly
 * triangular A with max_terms ≥ n−1; over the numeric idempotent carriers
 * the full series converges exactly when some partial sum stabilizes, so
 * the `stabilized` flag doubles as a convergence certificate.
 *
 * All max_terms terms are always computed — the operation sequence does
 * not depend on the data, which keeps the routine a fixed composition of
 * basic operations.
 */
template <semiring S>
series_result<value_t<S>> star_series(const S& s, const matrix<value_t<S>>& a,
                                      std::size_t max_terms) {
  detail::require_square(a.rows(), a.cols(), "star_series");
  series_result<value_t<S>> res{identity(s, a.rows()), false, 0};
  auto power = identity(s, a.rows());
  for (std::size_t m = 1; m <= max_terms; ++m) {
    power = mat_mul(s, a, power);  // A^m
    auto next = mat_add(s, res.sum, power);
    if (!res.stabilized && next == res.sum) {
      res.stabilized = true;
      res.terms = m - 1;
    }
    res.sum = std::move(next);
  }
  return res;
}

/// Series closure with the nilpotent truncation bound max_terms = n.
template <semiring S>
series_result<value_t<S>> star_series(const S& s,
                                      const matrix<value_t<S>>& a) {
  return star_series(s, a, a.rows());
}

/**
 * Least solution X = A*B of the stationary Bellman equation X = AX ⊕ B
 * (least among solutions in the idempotent convergent case). A is n×n,
 * B is n×s. Closure divergence propagates.
 */
template <semiring S>
matrix<value_t<S>> solve_bellman(const S& s, const matrix<value_t<S>>& a,
                                 const matrix<value_t<S>>& b) {
  detail::require_square(a.rows(), a.cols(), "solve_bellman");
  if (a.cols() != b.rows())
    throw domain_error("solve_bellman: B has " + std::to_string(b.rows()) +
                       " rows, expected " + std::to_string(a.cols()));
  return mat_mul(s, star_elimination(s, a), b);
}

}  // namespace kleene

#endif  // KLEENE_CLOSURE_HPP
