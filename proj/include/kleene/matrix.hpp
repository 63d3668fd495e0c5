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

#ifndef KLEENE_MATRIX_HPP
#define KLEENE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kleene/errors.hpp"
#include "kleene/semiring.hpp"

namespace kleene {

/// Dense row-major m×n array of semiring elements. The element type is
/// whatever the chosen descriptor computes with (double for the numeric
/// carriers, interval<double> for their interval extensions).
template <class T>
class matrix {
 public:
  matrix() = default;

  matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> values)
      : rows_(rows), cols_(cols), data_(values) {
    if (data_.size() != rows * cols)
      throw domain_error("matrix literal has " +
                         std::to_string(data_.size()) + " entries, expected " +
                         std::to_string(rows * cols));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br,
                               std::size_t bc, const char* op) {
  if (ar != br || ac != bc)
    throw domain_error(std::string(op) + ": shapes " + std::to_string(ar) +
                       "x" + std::to_string(ac) + " and " +
                       std::to_string(br) + "x" + std::to_string(bc) +
                       " differ");
}

inline void require_square(std::size_t r, std::size_t c, const char* op) {
  if (r != c)
    throw domain_error(std::string(op) + ": matrix is " + std::to_string(r) +
                       "x" + std::to_string(c) + ", need square");
}

}  // namespace detail

/// All-𝟘 matrix (the additive neutral of Mat_mn).
template <semiring S>
matrix<value_t<S>> zeros(const S& s, std::size_t rows, std::size_t cols) {
  return matrix<value_t<S>>(rows, cols, s.zero());
}

/// Identity: 𝟙 on the diagonal, 𝟘 elsewhere.
template <semiring S>
matrix<value_t<S>> identity(const S& s, std::size_t n) {
  auto out = zeros(s, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = s.one();
  return out;
}

/// Elementwise ⊕.
template <semiring S>
matrix<value_t<S>> mat_add(const S& s, const matrix<value_t<S>>& a,
                           const matrix<value_t<S>>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(),
                             "mat_add");
  matrix<value_t<S>> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.data()[i] = s.add(a.data()[i], b.data()[i]);
  return out;
}

/// Row-by-column product (AB)_ij = ⊕_k a_ik ⊙ b_kj. The fold over k is
/// always ascending, so float results are reproducible bit-for-bit.
template <semiring S>
matrix<value_t<S>> mat_mul(const S& s, const matrix<value_t<S>>& a,
                           const matrix<value_t<S>>& b) {
  if (a.cols() != b.rows())
    throw domain_error("mat_mul: inner dimensions differ (" +
                       std::to_string(a.cols()) + " vs " +
                       std::to_string(b.rows()) + ")");
  matrix<value_t<S>> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      value_t<S> acc = s.zero();
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

/// Elementwise canonical order: A ⪯ B iff a_ij ⪯ b_ij everywhere.
template <semiring S>
bool mat_leq(const S& s, const matrix<value_t<S>>& a,
             const matrix<value_t<S>>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(),
                             "mat_leq");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!s.leq(a.data()[i], b.data()[i])) return false;
  return true;
}

/// k-fold power with A⁰ = I and Aᵏ = A·Aᵏ⁻¹. Entry (i,j) of Aᵏ is the
/// ⊕ of weights of all length-k walks i → j.
template <semiring S>
matrix<value_t<S>> mat_pow(const S& s, const matrix<value_t<S>>& a,
                           std::size_t k) {
  detail::require_square(a.rows(), a.cols(), "mat_pow");
  if (k == 0) return identity(s, a.rows());
  auto out = a;
  for (std::size_t i = 1; i < k; ++i) out = mat_mul(s, a, out);
  return out;
}

/// Copy of the rows×cols block anchored at (r0, c0).
template <class T>
matrix<T> block(const matrix<T>& a, std::size_t r0, std::size_t c0,
                std::size_t rows, std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols())
    throw domain_error("block: range exceeds matrix bounds");
  matrix<T> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(r0 + i, c0 + j);
  return out;
}

/// Writes `sub` into `a` at anchor (r0, c0).
template <class T>
void set_block(matrix<T>& a, std::size_t r0, std::size_t c0,
               const matrix<T>& sub) {
  if (r0 + sub.rows() > a.rows() || c0 + sub.cols() > a.cols())
    throw domain_error("set_block: range exceeds matrix bounds");
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.cols(); ++j)
      a(r0 + i, c0 + j) = sub(i, j);
}

}  // namespace kleene

#endif  // KLEENE_MATRIX_HPP
