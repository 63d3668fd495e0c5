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
 * @file semiring.hpp
 *
 * Positive-semiring descriptors over the extended reals.
 *
 * A descriptor is a small value type bundling a carrier set with its
 * operations: addition ⊕, multiplication ⊙, the neutral elements 𝟘 and 𝟙,
 * the canonical order, lattice sup/inf, and — where defined — the unary
 * closure (Kleene star) and inversion. Every algorithm in this library is
 * written against the `semiring` concept below and therefore runs unchanged
 * over any of the concrete carriers, over a counting wrapper
 * (opcount.hpp), and over the interval extension (interval.hpp).
 *
 * Provided carriers:
 *   - max_plus      R ∪ {−∞},  ⊕ = max, ⊙ = +,   𝟘 = −∞, 𝟙 = 0
 *   - min_plus      R ∪ {+∞},  ⊕ = min, ⊙ = +,   𝟘 = +∞, 𝟙 = 0
 *   - max_min       [a, b],    ⊕ = max, ⊙ = min, 𝟘 = a,  𝟙 = b
 *   - plus_times    R₊ ∪ {∞},  ⊕ = +,   ⊙ = ×,   𝟘 = 0,  𝟙 = 1
 *   - subtropical   R ∪ {−∞},  ⊕ = ⊕_h deformation, ⊙ = +
 *
 * max_plus, min_plus and plus_times come in a strict and a completed
 * flavour. The completed carrier adds the top element, where the star
 * saturates instead of diverging and the absorption rule 𝟘 ⊙ ⊤ = 𝟘 takes
 * precedence over the native float arithmetic (which would yield NaN).
 */

#ifndef KLEENE_SEMIRING_HPP
#define KLEENE_SEMIRING_HPP

#include <cmath>
#include <concepts>
#include <cstdio>
#include <limits>
#include <string>

#include "kleene/errors.hpp"

namespace kleene {

inline constexpr double infty = std::numeric_limits<double>::infinity();

namespace detail {

/// Shortest round-trip-safe rendering of a parameter for descriptor names.
inline std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace detail

/**
 * The deformed addition u ⊕_h v = h·log(e^{u/h} + e^{v/h}), evaluated in
 * the overflow-safe form max(u,v) + h·log(1 + e^{−|u−v|/h}).
 *
 * The result always lies in [max(u,v), max(u,v) + h·log 2] and tends to
 * max(u,v) as h → 0. −∞ is neutral. Throws domain_error for h ≤ 0.
 */
inline double maslov_add(double u, double v, double h) {
  if (!(h > 0.0)) throw domain_error("maslov_add: parameter h must be > 0");
  if (u == -infty) return v;
  if (v == -infty) return u;
  const double m = u < v ? v : u;
  return m + h * std::log1p(std::exp(-std::abs(u - v) / h));
}

/**
 * A positive-semiring descriptor: the parameter every universal algorithm
 * in this library takes. `leq` is the canonical order (a ⪯ b ⇔ a ⊕ b = b
 * in the idempotent case); `sup`/`inf` are the lattice operations of that
 * order; `star` and `inv` are partial and may throw.
 */
template <class S>
concept semiring = requires(const S s, typename S::value_type a,
                            typename S::value_type b) {
  typename S::value_type;
  { s.zero() } -> std::same_as<typename S::value_type>;
  { s.one() } -> std::same_as<typename S::value_type>;
  { s.add(a, b) } -> std::same_as<typename S::value_type>;
  { s.mul(a, b) } -> std::same_as<typename S::value_type>;
  { s.leq(a, b) } -> std::convertible_to<bool>;
  { s.sup(a, b) } -> std::same_as<typename S::value_type>;
  { s.inf(a, b) } -> std::same_as<typename S::value_type>;
  { s.star(a) } -> std::same_as<typename S::value_type>;
  { s.inv(a) } -> std::same_as<typename S::value_type>;
  { s.contains(a) } -> std::convertible_to<bool>;
  { s.idempotent() } -> std::convertible_to<bool>;
  { s.complete() } -> std::convertible_to<bool>;
  { s.semifield() } -> std::convertible_to<bool>;
  { s.name() } -> std::convertible_to<std::string>;
};

template <semiring S>
using value_t = typename S::value_type;

/// The tropical (max-plus) semifield R ∪ {−∞}. The completed variant
/// adjoins +∞ with x ⊙ ∞ = ∞ for x ≠ 𝟘 and 𝟘 ⊙ ∞ = 𝟘.
class max_plus {
 public:
  using value_type = double;

  max_plus() = default;
  static max_plus completed() { return max_plus(true); }

  double zero() const { return -infty; }
  double one() const { return 0.0; }

  double add(double a, double b) const { return a < b ? b : a; }

  double mul(double a, double b) const {
    if (a == -infty || b == -infty) return -infty;  // 𝟘 absorbs, also vs +∞
    return a + b;
  }

  bool leq(double a, double b) const { return a <= b; }
  double sup(double a, double b) const { return a < b ? b : a; }
  double inf(double a, double b) const { return a < b ? a : b; }

  /// 𝟙 for x ⪯ 𝟙; +∞ above 𝟙 in the completed carrier, divergent otherwise.
  double star(double x) const {
    if (x <= 0.0) return 0.0;
    if (complete_) return infty;
    throw divergence_error("max-plus star diverges for " +
                           detail::format_param(x) +
                           " > 0 in the strict carrier");
  }

  double inv(double x) const {
    if (x == -infty) {
      if (complete_) return infty;
      throw domain_error("max-plus: the zero element has no inverse");
    }
    if (x == infty) return -infty;
    return -x;
  }

  bool contains(double x) const {
    if (std::isnan(x)) return false;
    return complete_ || x != infty;
  }

  bool idempotent() const { return true; }
  bool complete() const { return complete_; }
  bool semifield() const { return true; }
  std::string name() const {
    return complete_ ? "maxplus-complete" : "maxplus";
  }

 private:
  explicit max_plus(bool is_complete) : complete_(is_complete) {}
  bool complete_ = false;
};

/// The min-plus mirror of max_plus: R ∪ {+∞} with 𝟘 = +∞. Its canonical
/// order is the reverse of the numeric one. The completed variant adjoins
/// −∞ as the top element.
class min_plus {
 public:
  using value_type = double;

  min_plus() = default;
  static min_plus completed() { return min_plus(true); }

  double zero() const { return infty; }
  double one() const { return 0.0; }

  double add(double a, double b) const { return a < b ? a : b; }

  double mul(double a, double b) const {
    if (a == infty || b == infty) return infty;
    return a + b;
  }

  bool leq(double a, double b) const { return b <= a; }
  double sup(double a, double b) const { return a < b ? a : b; }
  double inf(double a, double b) const { return a < b ? b : a; }

  double star(double x) const {
    if (x >= 0.0) return 0.0;
    if (complete_) return -infty;
    throw divergence_error("min-plus star diverges for " +
                           detail::format_param(x) +
                           " < 0 in the strict carrier");
  }

  double inv(double x) const {
    if (x == infty) {
      if (complete_) return -infty;
      throw domain_error("min-plus: the zero element has no inverse");
    }
    if (x == -infty) return infty;
    return -x;
  }

  bool contains(double x) const {
    if (std::isnan(x)) return false;
    return complete_ || x != -infty;
  }

  bool idempotent() const { return true; }
  bool complete() const { return complete_; }
  bool semifield() const { return true; }
  std::string name() const {
    return complete_ ? "minplus-complete" : "minplus";
  }

 private:
  explicit min_plus(bool is_complete) : complete_(is_complete) {}
  bool complete_ = false;
};

/// The bounded lattice [a, b] with ⊕ = max and ⊙ = min. Complete but not a
/// semifield; its star is constantly 𝟙 = b. Default bounds are (0, 1).
class max_min {
 public:
  using value_type = double;

  max_min() = default;
  max_min(double a, double b) : a_(a), b_(b) {
    if (!(a < b))
      throw domain_error("max-min bounds must satisfy a < b, got [" +
                         detail::format_param(a) + ", " +
                         detail::format_param(b) + "]");
  }

  double lower_bound() const { return a_; }
  double upper_bound() const { return b_; }

  double zero() const { return a_; }
  double one() const { return b_; }
  double add(double a, double b) const { return a < b ? b : a; }
  double mul(double a, double b) const { return a < b ? a : b; }
  bool leq(double a, double b) const { return a <= b; }
  double sup(double a, double b) const { return a < b ? b : a; }
  double inf(double a, double b) const { return a < b ? a : b; }
  double star(double) const { return b_; }

  double inv(double) const {
    throw unsupported_operation("max-min is not a semifield: no inversion");
  }

  bool contains(double x) const { return x >= a_ && x <= b_; }

  bool idempotent() const { return true; }
  bool complete() const { return true; }
  bool semifield() const { return false; }
  std::string name() const {
    return "maxmin:" + detail::format_param(a_) + ":" +
           detail::format_param(b_);
  }

 private:
  double a_ = 0.0;
  double b_ = 1.0;
};

/// The nonnegative reals with ordinary + and ×, completed with ∞ by
/// default (0 ⊙ ∞ = 0). Positive but not idempotent; the one carrier here
/// where ⊕ accumulates instead of selecting.
class plus_times {
 public:
  using value_type = double;

  plus_times() = default;
  static plus_times strict() { return plus_times(false); }

  double zero() const { return 0.0; }
  double one() const { return 1.0; }

  double add(double a, double b) const { return a + b; }

  double mul(double a, double b) const {
    if (a == 0.0 || b == 0.0) return 0.0;  // 𝟘 absorbs even against ∞
    return a * b;
  }

  bool leq(double a, double b) const { return a <= b; }
  double sup(double a, double b) const { return a < b ? b : a; }
  double inf(double a, double b) const { return a < b ? a : b; }

  /// The geometric-series value (1 − x)⁻¹ below 1, saturating at and
  /// above 1 in the completed carrier.
  double star(double x) const {
    if (x < 1.0) return 1.0 / (1.0 - x);
    if (complete_) return infty;
    throw divergence_error("plus-times star diverges for " +
                           detail::format_param(x) +
                           " >= 1 in the strict carrier");
  }

  double inv(double x) const {
    if (x == infty) return 0.0;
    if (x == 0.0) {
      if (complete_) return infty;
      throw domain_error("plus-times: the zero element has no inverse");
    }
    return 1.0 / x;
  }

  bool contains(double x) const {
    if (std::isnan(x) || x < 0.0) return false;
    return complete_ || x != infty;
  }

  bool idempotent() const { return false; }
  bool complete() const { return complete_; }
  bool semifield() const { return true; }
  std::string name() const {
    return complete_ ? "plustimes" : "plustimes-strict";
  }

 private:
  explicit plus_times(bool is_complete) : complete_(is_complete) {}
  bool complete_ = true;
};

/// The h-deformation of plus_times under x ↦ h·log x: addition is ⊕_h,
/// multiplication is +. Converges to max_plus as h → 0. No closure
/// operation is defined on this family.
class subtropical {
 public:
  using value_type = double;

  explicit subtropical(double h) : h_(h) {
    if (!(h > 0.0))
      throw domain_error("subtropical: parameter h must be > 0, got " +
                         detail::format_param(h));
  }

  double deformation() const { return h_; }

  double zero() const { return -infty; }
  double one() const { return 0.0; }
  double add(double a, double b) const { return maslov_add(a, b, h_); }

  double mul(double a, double b) const {
    if (a == -infty || b == -infty) return -infty;
    return a + b;
  }

  bool leq(double a, double b) const { return a <= b; }
  double sup(double a, double b) const { return a < b ? b : a; }
  double inf(double a, double b) const { return a < b ? a : b; }

  double star(double) const {
    throw unsupported_operation("subtropical carriers define no closure");
  }

  double inv(double x) const {
    if (x == -infty)
      throw domain_error("subtropical: the zero element has no inverse");
    return -x;
  }

  bool contains(double x) const { return !std::isnan(x) && x != infty; }

  bool idempotent() const { return false; }
  bool complete() const { return false; }
  bool semifield() const { return true; }
  std::string name() const {
    return "subtropical:" + detail::format_param(h_);
  }

 private:
  double h_;
};

static_assert(semiring<max_plus>);
static_assert(semiring<min_plus>);
static_assert(semiring<max_min>);
static_assert(semiring<plus_times>);
static_assert(semiring<subtropical>);

}  // namespace kleene

#endif  // KLEENE_SEMIRING_HPP
