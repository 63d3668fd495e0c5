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
 * @file io.hpp
 *
 * Text formats.
 *
 * Matrix: first content line "<rows> <cols>", then rows×cols values in
 * row-major order separated by whitespace. Lines starting with '#' are
 * comments. Infinities are the tokens "inf" and "-inf"; numbers are
 * printed with 17 significant digits so output re-parses to the same
 * bits. Interval cells are written "lo..hi"; on input a bare scalar
 * denotes the point interval.
 *
 * Graph (TSV): optional header directives "#semiring <id>" and
 * "#nodes <n1> <n2> …", then one arc per line "src dst weight"
 * (tab- or space-separated). Parallel arcs merge with ⊕; a weight equal
 * to 𝟘 means "no arc". Unknown directives are parse errors.
 *
 * Semiring identifiers: maxplus, maxplus-complete, minplus,
 * maxmin[:<a>:<b>], plustimes, subtropical:<h>.
 */

#ifndef KLEENE_IO_HPP
#define KLEENE_IO_HPP

#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kleene/errors.hpp"
#include "kleene/graph.hpp"
#include "kleene/interval.hpp"
#include "kleene/matrix.hpp"
#include "kleene/semiring.hpp"

namespace kleene {

/// Round-trip-safe rendering: 17 significant digits, "inf"/"-inf" tokens.
inline std::string format_value(double v) {
  if (v == infty) return "inf";
  if (v == -infty) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Parses one scalar token; nullopt when the token is not a number or an
/// infinity token.
inline std::optional<double> try_parse_value(std::string_view token) {
  if (token == "inf") return infty;
  if (token == "-inf") return -infty;
  double out = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  if (std::isnan(out)) return std::nullopt;  // not a carrier value
  return out;
}

template <class S>
struct is_interval_semiring : std::false_type {};
template <class B>
struct is_interval_semiring<interval_semiring<B>> : std::true_type {};

/// One matrix/arc-weight cell as text.
template <semiring S>
std::string format_cell(const S& s, const value_t<S>& v) {
  if constexpr (is_interval_semiring<S>::value) {
    return format_cell(s.base(), v.lo) + ".." + format_cell(s.base(), v.hi);
  } else {
    (void)s;
    return format_value(v);
  }
}

/// Parses one cell and validates it against the carrier. Interval
/// literals "lo..hi" are accepted only by interval descriptors; a bare
/// scalar under an interval descriptor is the point interval. Throws
/// domain_error without location info; readers add line/column.
template <semiring S>
value_t<S> parse_cell(const S& s, std::string_view token) {
  if constexpr (is_interval_semiring<S>::value) {
    const auto dots = token.find("..");
    if (dots == std::string_view::npos) {
      const auto v = parse_cell(s.base(), token);
      return {v, v};
    }
    const auto lo = parse_cell(s.base(), token.substr(0, dots));
    const auto hi = parse_cell(s.base(), token.substr(dots + 2));
    return make_interval(s.base(), lo, hi);
  } else {
    if (token.find("..") != std::string_view::npos)
      throw domain_error("interval literal '" + std::string(token) +
                         "' in scalar mode");
    const auto v = try_parse_value(token);
    if (!v) throw domain_error("malformed value '" + std::string(token) + "'");
    if (!s.contains(*v))
      throw domain_error("value '" + std::string(token) +
                         "' outside the carrier of " + s.name());
    return *v;
  }
}

namespace detail {

struct token_pos {
  std::string text;
  std::size_t column;  // 1-based byte offset
};

inline std::vector<token_pos> split_tokens(const std::string& line) {
  std::vector<token_pos> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline bool blank_or_comment(const std::vector<token_pos>& toks) {
  return toks.empty() || toks.front().text.front() == '#';
}

inline std::size_t parse_count(const token_pos& tok, std::size_t line) {
  std::size_t out = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw parse_error("expected a nonnegative integer, got '" + tok.text +
                          "'",
                      line, tok.column);
  return out;
}

}  // namespace detail

/// Reads a matrix in the text format, validating every cell against the
/// carrier. Malformed input raises parse_error with line and column.
template <semiring S>
matrix<value_t<S>> read_matrix(std::istream& in, const S& s) {
  std::string line;
  std::size_t line_no = 0;

  // Header: "<rows> <cols>".
  std::vector<detail::token_pos> header;
  while (std::getline(in, line)) {
    ++line_no;
    header = detail::split_tokens(line);
    if (!detail::blank_or_comment(header)) break;
    header.clear();
  }
  if (header.empty()) throw parse_error("missing matrix header", line_no + 1);
  if (header.size() != 2)
    throw parse_error("matrix header must be '<rows> <cols>'", line_no,
                      header.size() > 2 ? header[2].column : header[0].column);
  const std::size_t rows = detail::parse_count(header[0], line_no);
  const std::size_t cols = detail::parse_count(header[1], line_no);

  matrix<value_t<S>> out(rows, cols, s.zero());
  std::size_t filled = 0;
  const std::size_t want = rows * cols;
  while (filled < want && std::getline(in, line)) {
    ++line_no;
    const auto toks = detail::split_tokens(line);
    if (detail::blank_or_comment(toks)) continue;
    for (const auto& tok : toks) {
      if (filled == want)
        throw parse_error("matrix has more than " + std::to_string(want) +
                              " values",
                          line_no, tok.column);
      try {
        out.data()[filled] = parse_cell(s, tok.text);
      } catch (const domain_error& e) {
        throw parse_error(e.what(), line_no, tok.column);
      }
      ++filled;
    }
  }
  if (filled < want)
    throw parse_error("matrix ended after " + std::to_string(filled) +
                          " of " + std::to_string(want) + " values",
                      line_no);
  return out;
}

/// Writes a matrix in the text format, one row per line.
template <semiring S>
void write_matrix(std::ostream& out, const S& s,
                  const matrix<value_t<S>>& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_cell(s, m(i, j));
    }
    out << '\n';
  }
}

/// Carrier-independent parse of a graph file: directives plus arc lines
/// with source positions, weights still unparsed.
struct raw_graph {
  std::optional<std::string> semiring_id;
  std::vector<std::string> declared_nodes;
  bool nodes_declared = false;

  struct raw_arc {
    std::string src;
    std::string dst;
    std::string weight;
    std::size_t line;
    std::size_t weight_column;
  };
  std::vector<raw_arc> arcs;
};

inline raw_graph read_raw_graph(std::istream& in) {
  raw_graph raw;
  std::string line;
  std::size_t line_no = 0;
  bool in_body = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = detail::split_tokens(line);
    if (toks.empty()) continue;
    if (toks.front().text.front() == '#') {
      const std::string& directive = toks.front().text;
      if (in_body)
        throw parse_error("directive '" + directive +
                              "' after the first arc line",
                          line_no, toks.front().column);
      if (directive == "#semiring") {
        if (raw.semiring_id)
          throw parse_error("duplicate #semiring directive", line_no);
        if (toks.size() != 2)
          throw parse_error("#semiring takes exactly one identifier",
                            line_no);
        raw.semiring_id = toks[1].text;
      } else if (directive == "#nodes") {
        if (raw.nodes_declared)
          throw parse_error("duplicate #nodes directive", line_no);
        raw.nodes_declared = true;
        for (std::size_t i = 1; i < toks.size(); ++i) {
          for (const auto& seen : raw.declared_nodes)
            if (seen == toks[i].text)
              throw parse_error("duplicate node name '" + toks[i].text + "'",
                                line_no, toks[i].column);
          raw.declared_nodes.push_back(toks[i].text);
        }
      } else {
        throw parse_error("unknown directive '" + directive + "'", line_no,
                          toks.front().column);
      }
      continue;
    }
    in_body = true;
    if (toks.size() != 3)
      throw parse_error("arc line must be 'src dst weight', got " +
                            std::to_string(toks.size()) + " fields",
                        line_no, toks.front().column);
    raw.arcs.push_back(
        {toks[0].text, toks[1].text, toks[2].text, line_no, toks[2].column});
  }
  return raw;
}

/// Materializes a raw graph over a concrete carrier: resolves node names
/// (declared via #nodes, or inferred in order of first appearance),
/// parses and validates weights, merges parallel arcs with ⊕.
template <semiring S>
digraph<value_t<S>> build_graph(const raw_graph& raw, const S& s) {
  digraph<value_t<S>> g(raw.declared_nodes);
  for (const auto& a : raw.arcs) {
    auto src = g.find_node(a.src);
    auto dst = g.find_node(a.dst);
    if (raw.nodes_declared) {
      if (!src)
        throw parse_error("arc references undeclared node '" + a.src + "'",
                          a.line);
      if (!dst)
        throw parse_error("arc references undeclared node '" + a.dst + "'",
                          a.line);
    } else {
      if (!src) src = g.add_node(a.src);
      if (!dst) dst = g.add_node(a.dst);
    }
    value_t<S> w;
    try {
      w = parse_cell(s, a.weight);
    } catch (const domain_error& e) {
      throw parse_error(e.what(), a.line, a.weight_column);
    }
    g.add_arc(s, *src, *dst, w);
  }
  return g;
}

template <semiring S>
digraph<value_t<S>> read_graph(std::istream& in, const S& s) {
  return build_graph(read_raw_graph(in), s);
}

/// Any of the provided numeric carriers, selected at run time.
using semiring_variant =
    std::variant<max_plus, min_plus, max_min, plus_times, subtropical>;

/**
 * Maps a semiring identifier to a descriptor. With strict_divergence the
 * completable carriers (maxplus, minplus, plustimes) are strict — their
 * star throws past the unit; by default they are completed and saturate
 * to the top element. maxplus-complete is completed either way.
 */
inline semiring_variant make_semiring(std::string_view id,
                                      bool strict_divergence = false) {
  const auto param = [&](std::string_view text) -> double {
    const auto v = try_parse_value(text);
    if (!v)
      throw domain_error("malformed parameter '" + std::string(text) +
                         "' in semiring id '" + std::string(id) + "'");
    return *v;
  };

  if (id == "maxplus")
    return strict_divergence ? max_plus() : max_plus::completed();
  if (id == "maxplus-complete") return max_plus::completed();
  if (id == "minplus")
    return strict_divergence ? min_plus() : min_plus::completed();
  if (id == "plustimes")
    return strict_divergence ? plus_times::strict() : plus_times();
  if (id == "maxmin") return max_min();
  if (id.starts_with("maxmin:")) {
    const auto rest = id.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw domain_error("maxmin bounds must be 'maxmin:<a>:<b>', got '" +
                         std::string(id) + "'");
    return max_min(param(rest.substr(0, colon)), param(rest.substr(colon + 1)));
  }
  if (id.starts_with("subtropical:")) return subtropical(param(id.substr(12)));
  throw domain_error("unknown semiring id '" + std::string(id) + "'");
}

}  // namespace kleene

#endif  // KLEENE_IO_HPP
