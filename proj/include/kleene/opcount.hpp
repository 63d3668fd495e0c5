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

#ifndef KLEENE_OPCOUNT_HPP
#define KLEENE_OPCOUNT_HPP

#include <cstdint>
#include <string>

#include "kleene/semiring.hpp"

namespace kleene {

/// Tally of basic operations executed by an instrumented computation.
/// Each counter is monotone nondecreasing; tallies from different tasks
/// are combined with +=.
struct op_count {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t stars = 0;
  std::uint64_t sups = 0;
  std::uint64_t infs = 0;
  std::uint64_t invs = 0;

  std::uint64_t total() const {
    return adds + muls + stars + sups + infs + invs;
  }

  op_count& operator+=(const op_count& other) {
    adds += other.adds;
    muls += other.muls;
    stars += other.stars;
    sups += other.sups;
    infs += other.infs;
    invs += other.invs;
    return *this;
  }

  bool operator==(const op_count&) const = default;
};

/**
 * Instrumentation adapter: wraps a descriptor so that every basic
 * operation bumps an external tally. Counting is opt-in per computation —
 * run the same generic algorithm on `counting<S>{s, &tally}` instead of
 * `s`; uninstrumented code paths pay nothing.
 *
 * The wrapped descriptor and the tally are borrowed and must outlive the
 * adapter.
 */
template <semiring S>
class counting {
 public:
  using value_type = value_t<S>;

  counting(const S& base, op_count& tally) : base_(&base), tally_(&tally) {}

  const S& base() const { return *base_; }
  const op_count& tally() const { return *tally_; }

  value_type zero() const { return base_->zero(); }
  value_type one() const { return base_->one(); }

  value_type add(value_type a, value_type b) const {
    ++tally_->adds;
    return base_->add(a, b);
  }
  value_type mul(value_type a, value_type b) const {
    ++tally_->muls;
    return base_->mul(a, b);
  }
  value_type star(value_type a) const {
    ++tally_->stars;
    return base_->star(a);
  }
  value_type sup(value_type a, value_type b) const {
    ++tally_->sups;
    return base_->sup(a, b);
  }
  value_type inf(value_type a, value_type b) const {
    ++tally_->infs;
    return base_->inf(a, b);
  }
  value_type inv(value_type a) const {
    ++tally_->invs;
    return base_->inv(a);
  }

  // Order queries and metadata are not basic operations and stay uncounted.
  bool leq(value_type a, value_type b) const { return base_->leq(a, b); }
  bool contains(value_type a) const { return base_->contains(a); }
  bool idempotent() const { return base_->idempotent(); }
  bool complete() const { return base_->complete(); }
  bool semifield() const { return base_->semifield(); }
  std::string name() const { return base_->name(); }

 private:
  const S* base_;
  op_count* tally_;
};

static_assert(semiring<counting<max_plus>>);

}  // namespace kleene

#endif  // KLEENE_OPCOUNT_HPP
