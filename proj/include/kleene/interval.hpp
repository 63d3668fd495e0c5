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
 * @file interval.hpp
 *
 * The weak interval extension I(S) of a positive semiring S: closed
 * intervals [lo, hi] in the canonical order, with every operation acting
 * boundwise —
 *
 *     x ⊕ y = [lo_x ⊕ lo_y, hi_x ⊕ hi_y]
 *     x ⊙ y = [lo_x ⊙ lo_y, hi_x ⊙ hi_y]
 *     x*    = [lo_x*, hi_x*]
 *
 * I(S) is itself a positive semiring (idempotent whenever S is), so every
 * generic algorithm in this library runs over it unchanged: intervals ARE
 * semiring elements here. Because the basic operations are monotone, any
 * algorithm composed of them induces a nondecreasing mapping, and its
 * interval run yields *exact* bounds: the lower/upper bound of the output
 * equals the scalar run on the lower/upper input. This is very unlike
 * classical interval arithmetic, which loses distributivity and
 * overestimates. Inversion is the exception — not monotone, but interval
 * regular: the exact range of 1/x over [a, b] is [1/b, 1/a], so i-inv
 * swaps bounds.
 *
 * exactness_check() verifies the guarantee empirically for a concrete
 * algorithm and input, by endpoint evaluation plus interior sampling; it
 * applies to algorithms that are fixed compositions of the non-inverse
 * basic operations (no data-dependent branching on element values).
 */

#ifndef KLEENE_INTERVAL_HPP
#define KLEENE_INTERVAL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "kleene/errors.hpp"
#include "kleene/matrix.hpp"
#include "kleene/semiring.hpp"

namespace kleene {

/// Pair of bounds with lo ⪯ hi in the canonical order of the base
/// carrier. Use make_interval to construct checked values; operations in
/// interval_semiring preserve validity by monotonicity.
template <class T>
struct interval {
  T lo{};
  T hi{};

  bool operator==(const interval&) const = default;
};

/// Checked constructor: rejects lo ⋠ hi instead of silently swapping.
template <semiring S>
interval<value_t<S>> make_interval(const S& s, value_t<S> lo,
                                   value_t<S> hi) {
  if (!s.leq(lo, hi))
    throw domain_error("interval bounds out of order in " + s.name());
  return {lo, hi};
}

/// Point interval [v, v] — the canonical embedding of S into I(S).
template <semiring S>
interval<value_t<S>> point_interval(const S&, value_t<S> v) {
  return {v, v};
}

/// The weak interval extension as a semiring descriptor. Parameterizing
/// any generic algorithm with this type is the interval lift.
template <semiring S>
class interval_semiring {
 public:
  using base_type = S;
  using value_type = interval<value_t<S>>;

  explicit interval_semiring(S base) : base_(std::move(base)) {}

  const S& base() const { return base_; }

  value_type zero() const { return {base_.zero(), base_.zero()}; }
  value_type one() const { return {base_.one(), base_.one()}; }

  value_type add(value_type x, value_type y) const {
    return {base_.add(x.lo, y.lo), base_.add(x.hi, y.hi)};
  }

  value_type mul(value_type x, value_type y) const {
    return {base_.mul(x.lo, y.lo), base_.mul(x.hi, y.hi)};
  }

  /// [x ⪯ y] iff lo_x ⪯ lo_y and hi_x ⪯ hi_y.
  bool leq(value_type x, value_type y) const {
    return base_.leq(x.lo, y.lo) && base_.leq(x.hi, y.hi);
  }

  value_type sup(value_type x, value_type y) const {
    return {base_.sup(x.lo, y.lo), base_.sup(x.hi, y.hi)};
  }

  value_type inf(value_type x, value_type y) const {
    return {base_.inf(x.lo, y.lo), base_.inf(x.hi, y.hi)};
  }

  /// Boundwise star; valid because the scalar star is monotone. Reports
  /// which bound diverged when the base carrier is not complete.
  value_type star(value_type x) const {
    value_type out;
    try {
      out.lo = base_.star(x.lo);
    } catch (const divergence_error& e) {
      throw divergence_error(std::string("interval star: lower bound: ") +
                             e.what());
    }
    try {
      out.hi = base_.star(x.hi);
    } catch (const divergence_error& e) {
      throw divergence_error(std::string("interval star: upper bound: ") +
                             e.what());
    }
    return out;
  }

  /// Inversion maps [a, b] to [b⁻, a⁻]: the bounds swap because scalar
  /// inversion reverses the order. Interval regular, not positive.
  value_type inv(value_type x) const {
    return {base_.inv(x.hi), base_.inv(x.lo)};
  }

  bool contains(value_type x) const {
    return base_.contains(x.lo) && base_.contains(x.hi) &&
           base_.leq(x.lo, x.hi);
  }

  bool idempotent() const { return base_.idempotent(); }
  bool complete() const { return base_.complete(); }
  bool semifield() const { return base_.semifield(); }
  std::string name() const { return "interval(" + base_.name() + ")"; }

 private:
  S base_;
};

static_assert(semiring<interval_semiring<max_plus>>);

/// Matrix of lower bounds of an interval matrix.
template <class T>
matrix<T> lower_bounds(const matrix<interval<T>>& m) {
  matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = m.data()[i].lo;
  return out;
}

/// Matrix of upper bounds of an interval matrix.
template <class T>
matrix<T> upper_bounds(const matrix<interval<T>>& m) {
  matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = m.data()[i].hi;
  return out;
}

/// Pointwise embedding of a scalar matrix into I(S).
template <class T>
matrix<interval<T>> point_intervals(const matrix<T>& m) {
  matrix<interval<T>> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i)
    out.data()[i] = {m.data()[i], m.data()[i]};
  return out;
}

/// Outcome of an exactness_check run. The guarantee holds iff there are
/// no containment violations and both bounds are attained at the
/// endpoint inputs.
struct exactness_report {
  std::size_t samples = 0;
  std::size_t violations = 0;
  bool lo_attained = false;
  bool hi_attained = false;

  bool exact() const {
    return violations == 0 && lo_attained && hi_attained;
  }
};

namespace detail {

/// Uniform sample between the bounds of a cell, on the numeric
/// parameterization of the carrier. Exact endpoints are drawn with
/// probability 1/4 each; infinite endpoints are approached through a
/// large-magnitude finite proxy for interior draws.
template <semiring S>
double sample_in_interval(const S&, const interval<double>& x,
                          std::mt19937_64& rng) {
  const double a = x.lo < x.hi ? x.lo : x.hi;  // numeric orientation
  const double b = x.lo < x.hi ? x.hi : x.lo;
  const std::uint64_t pick = rng() & 3u;
  if (pick == 0) return x.lo;
  if (pick == 1) return x.hi;
  if (a == b) return a;
  constexpr double proxy_span = 1.0e6;
  double fa = a, fb = b;
  if (fa == -infty) fa = (fb == infty ? 0.0 : fb) - proxy_span;
  if (fb == infty) fb = (a == -infty ? 0.0 : a) + proxy_span;
  return std::uniform_real_distribution<double>(fa, fb)(rng);
}

}  // namespace detail

/**
 * Empirical verification that an interval-lifted algorithm yields exact
 * bounds.
 *
 * `algorithm` must be callable as algorithm(semiring, matrix) -> matrix
 * for both the scalar carrier and its interval extension (a generic
 * lambda over the basic operations). The check runs the lift on `input`,
 * then
 *
 *   1. recomputes both bounds by scalar runs on the lower-/upper-bound
 *      matrices and tests exact attainment, and
 *   2. draws n_samples scalar matrices inside the input box and tests
 *      that every output stays within the lifted bounds.
 *
 * Deterministic for a fixed seed. Violations are reported, never thrown:
 * for a fixed composition of non-inverse basic operations any violation
 * is a library bug.
 */
template <semiring S, class Alg>
exactness_report exactness_check(const S& base, Alg&& algorithm,
                                 const matrix<interval<double>>& input,
                                 std::size_t n_samples, std::uint64_t seed) {
  static_assert(std::is_same_v<value_t<S>, double>,
                "exactness_check samples numeric carriers");
  const interval_semiring<S> lifted_sr(base);
  const auto lifted = algorithm(lifted_sr, input);

  exactness_report report;
  report.lo_attained =
      algorithm(base, lower_bounds(input)) == lower_bounds(lifted);
  report.hi_attained =
      algorithm(base, upper_bounds(input)) == upper_bounds(lifted);

  std::mt19937_64 rng(seed);
  matrix<double> z(input.rows(), input.cols());
  for (std::size_t t = 0; t < n_samples; ++t) {
    for (std::size_t i = 0; i < input.size(); ++i)
      z.data()[i] = detail::sample_in_interval(base, input.data()[i], rng);
    const auto fz = algorithm(base, z);
    bool contained = true;
    for (std::size_t i = 0; i < fz.size(); ++i) {
      const auto& bounds = lifted.data()[i];
      if (!base.leq(bounds.lo, fz.data()[i]) ||
          !base.leq(fz.data()[i], bounds.hi)) {
        contained = false;
        break;
      }
    }
    if (!contained) ++report.violations;
    ++report.samples;
  }
  return report;
}

}  // namespace kleene

#endif  // KLEENE_INTERVAL_HPP
