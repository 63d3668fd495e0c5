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

#ifndef KLEENE_INTEGRAL_HPP
#define KLEENE_INTEGRAL_HPP

#include <span>

#include "kleene/errors.hpp"
#include "kleene/semiring.hpp"

namespace kleene {

/// The sup-integral of a function given as a finite table of values:
/// the ⊕-fold sup_x f(x). Only meaningful over idempotent carriers, where
/// ⊕ coincides with the lattice supremum. An empty table yields 𝟘 in a
/// complete carrier and is an error otherwise.
template <semiring S>
value_t<S> idempotent_integral(const S& s, std::span<const value_t<S>> f) {
  if (!s.idempotent())
    throw domain_error("idempotent_integral requires an idempotent carrier, "
                       "got " + s.name());
  if (f.empty()) {
    if (s.complete()) return s.zero();
    throw domain_error("sup-integral of an empty table is undefined in the "
                       "non-complete carrier " + s.name());
  }
  value_t<S> acc = f[0];
  for (std::size_t i = 1; i < f.size(); ++i) acc = s.add(acc, f[i]);
  return acc;
}

/// The integral of phi against the measure induced by psi over the same
/// finite domain: the ⊕-fold of the pointwise products phi(x) ⊙ psi(x).
/// This is the universal scalar product; over max-plus it reads
/// max_i(phi_i + psi_i), over plus-times it is the ordinary dot product.
template <semiring S>
value_t<S> idempotent_measure_integral(const S& s,
                                       std::span<const value_t<S>> phi,
                                       std::span<const value_t<S>> psi) {
  if (phi.size() != psi.size())
    throw domain_error("measure integral: tables have different domains (" +
                       std::to_string(phi.size()) + " vs " +
                       std::to_string(psi.size()) + " points)");
  if (phi.empty()) {
    if (s.complete()) return s.zero();
    throw domain_error("measure integral of an empty table is undefined in "
                       "the non-complete carrier " + s.name());
  }
  value_t<S> acc = s.mul(phi[0], psi[0]);
  for (std::size_t i = 1; i < phi.size(); ++i)
    acc = s.add(acc, s.mul(phi[i], psi[i]));
  return acc;
}

}  // namespace kleene

#endif  // KLEENE_INTEGRAL_HPP
