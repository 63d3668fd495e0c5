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
 * @file graph.hpp
 *
 * Weighted digraphs as the combinatorial face of square matrices: a_ij is
 * the weight of arc i → j, 𝟘 encodes its absence. The closure A* of the
 * adjacency matrix answers the algebraic path problem — per node pair the
 * ⊕ of ⊙-path-weights over all connecting paths — which instantiates to
 * shortest paths (min-plus), widest paths (max-min), best total profit
 * (max-plus) and matrix inversion (plus-times).
 */

#ifndef KLEENE_GRAPH_HPP
#define KLEENE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kleene/closure.hpp"
#include "kleene/matrix.hpp"
#include "kleene/semiring.hpp"

namespace kleene {

template <class T>
struct arc {
  std::size_t src = 0;
  std::size_t dst = 0;
  T weight{};
};

/// Node list plus at most one weighted arc per ordered node pair
/// (parallel arcs are merged with ⊕ on insertion, 𝟘 weights are dropped).
template <class T>
class digraph {
 public:
  digraph() = default;

  explicit digraph(std::vector<std::string> nodes)
      : nodes_(std::move(nodes)) {}

  /// n nodes named "1" … "n".
  static digraph with_default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return digraph(std::move(names));
  }

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::string& node_name(std::size_t i) const { return nodes_[i]; }
  const std::vector<arc<T>>& arcs() const { return arcs_; }

  std::optional<std::size_t> find_node(std::string_view name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t add_node(std::string name) {
    nodes_.push_back(std::move(name));
    return nodes_.size() - 1;
  }

  /// Inserts src → dst with the given weight; an existing arc for the
  /// pair is merged with ⊕. A weight equal to 𝟘 means "no arc" and is
  /// ignored.
  template <semiring S>
  void add_arc(const S& s, std::size_t src, std::size_t dst, T weight) {
    require_node(src);
    require_node(dst);
    if (weight == s.zero()) return;
    const std::uint64_t key = pair_key(src, dst);
    if (auto it = index_.find(key); it != index_.end()) {
      arcs_[it->second].weight = s.add(arcs_[it->second].weight, weight);
      return;
    }
    index_.emplace(key, arcs_.size());
    arcs_.push_back({src, dst, std::move(weight)});
  }

  const T* arc_weight(std::size_t src, std::size_t dst) const {
    auto it = index_.find(pair_key(src, dst));
    return it == index_.end() ? nullptr : &arcs_[it->second].weight;
  }

 private:
  void require_node(std::size_t i) const {
    if (i >= nodes_.size())
      throw domain_error("digraph: node index " + std::to_string(i) +
                         " out of range (have " +
                         std::to_string(nodes_.size()) + " nodes)");
  }

  static std::uint64_t pair_key(std::size_t src, std::size_t dst) {
    return (static_cast<std::uint64_t>(src) << 32) |
           static_cast<std::uint64_t>(dst);
  }

  std::vector<std::string> nodes_;
  std::vector<arc<T>> arcs_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Adjacency matrix: a_ij = weight of arc i → j, 𝟘 where absent.
template <semiring S>
matrix<value_t<S>> graph_to_matrix(const S& s,
                                   const digraph<value_t<S>>& g) {
  auto a = zeros(s, g.node_count(), g.node_count());
  for (const auto& e : g.arcs()) a(e.src, e.dst) = e.weight;
  return a;
}

/// Inverse of graph_to_matrix; 𝟘 entries become absent arcs. Node names
/// default to "1" … "n" when not supplied.
template <semiring S>
digraph<value_t<S>> matrix_to_graph(const S& s, const matrix<value_t<S>>& a,
                                    std::vector<std::string> names = {}) {
  detail::require_square(a.rows(), a.cols(), "matrix_to_graph");
  const std::size_t n = a.rows();
  digraph<value_t<S>> g = names.empty()
                              ? digraph<value_t<S>>::with_default_names(n)
                              : digraph<value_t<S>>(std::move(names));
  if (g.node_count() != n)
    throw domain_error("matrix_to_graph: " + std::to_string(g.node_count()) +
                       " names for a " + std::to_string(n) + "-node graph");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a(i, j) == s.zero())) g.add_arc(s, i, j, a(i, j));
  return g;
}

/// ⊙-product of arc weights along a node sequence; 𝟙 for a single node.
/// The sequence must be nonempty and consecutive pairs must be arcs.
template <semiring S>
value_t<S> path_weight(const S& s, const digraph<value_t<S>>& g,
                       std::span<const std::size_t> path) {
  if (path.empty()) throw domain_error("path_weight: empty node sequence");
  for (std::size_t i : path)
    if (i >= g.node_count())
      throw domain_error("path_weight: node index " + std::to_string(i) +
                         " out of range");
  value_t<S> acc = s.one();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto* w = g.arc_weight(path[i], path[i + 1]);
    if (w == nullptr)
      throw domain_error("path_weight: no arc " +
                         g.node_name(path[i]) + " -> " +
                         g.node_name(path[i + 1]));
    acc = s.mul(acc, *w);
  }
  return acc;
}

/// The algebraic path problem: closure of the adjacency matrix. Entry
/// (i,j) is the ⊕ over all paths i → j of their ⊙-weights.
template <semiring S>
matrix<value_t<S>> algebraic_path(const S& s, const digraph<value_t<S>>& g) {
  return star_elimination(s, graph_to_matrix(s, g));
}

/// Best achievable total profit per start node: entry i of A*B where b_j
/// is the terminal payoff of leaving the graph at node j. Arc profits
/// must not admit cycles above 𝟙 unless the carrier is completed.
template <semiring S>
matrix<value_t<S>> dp_best_profit(const S& s, const digraph<value_t<S>>& g,
                                  const matrix<value_t<S>>& terminal) {
  if (terminal.rows() != g.node_count())
    throw domain_error("dp_best_profit: terminal vector has " +
                       std::to_string(terminal.rows()) + " rows for a " +
                       std::to_string(g.node_count()) + "-node graph");
  return solve_bellman(s, graph_to_matrix(s, g), terminal);
}

namespace detail {

template <semiring S>
void extend_paths(const S& s, const matrix<value_t<S>>& a,
                  matrix<value_t<S>>& acc, std::size_t origin,
                  std::size_t node, std::size_t depth, std::size_t max_len,
                  value_t<S> weight) {
  if (depth > 0) acc(origin, node) = s.add(acc(origin, node), weight);
  if (depth == max_len) return;
  for (std::size_t next = 0; next < a.rows(); ++next) {
    if (a(node, next) == s.zero()) continue;  // no arc
    extend_paths(s, a, acc, origin, next, depth + 1, max_len,
                 s.mul(weight, a(node, next)));
  }
}

}  // namespace detail

/**
 * Exhaustive path-supremum oracle: folds the weights of every path of
 * length 1 … max_len with ⊕ and joins 𝟙 on the diagonal (the empty
 * paths). For convergent idempotent instances with max_len = n−1 this
 * equals A*. Enumeration is exponential, so n ≤ 8 is enforced.
 */
template <semiring S>
matrix<value_t<S>> brute_force_closure(const S& s,
                                       const matrix<value_t<S>>& a,
                                       std::size_t max_len) {
  detail::require_square(a.rows(), a.cols(), "brute_force_closure");
  const std::size_t n = a.rows();
  if (n > 8)
    throw domain_error("brute_force_closure: " + std::to_string(n) +
                       " nodes exceeds the enumeration limit of 8");
  auto acc = zeros(s, n, n);
  for (std::size_t origin = 0; origin < n; ++origin)
    detail::extend_paths(s, a, acc, origin, origin, 0, max_len, s.one());
  for (std::size_t i = 0; i < n; ++i) acc(i, i) = s.add(acc(i, i), s.one());
  return acc;
}

template <semiring S>
matrix<value_t<S>> brute_force_closure(const S& s,
                                       const digraph<value_t<S>>& g,
                                       std::size_t max_len) {
  return brute_force_closure(s, graph_to_matrix(s, g), max_len);
}

/// Oracle with the truncation default max_len = n−1: in a convergent
/// instance longer paths repeat a node and cannot improve the fold.
template <semiring S>
matrix<value_t<S>> brute_force_closure(const S& s,
                                       const matrix<value_t<S>>& a) {
  return brute_force_closure(s, a, a.rows() == 0 ? 0 : a.rows() - 1);
}

template <semiring S>
matrix<value_t<S>> brute_force_closure(const S& s,
                                       const digraph<value_t<S>>& g) {
  return brute_force_closure(s, graph_to_matrix(s, g));
}

}  // namespace kleene

#endif  // KLEENE_GRAPH_HPP
