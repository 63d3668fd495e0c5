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

// Command-line front end: parse a matrix or graph file, run one task
// (closure / bellman / dot / path) over a chosen semiring — scalar or
// interval — and print the result matrix, optionally with basic-op
// counts.
//
// Exit codes: 0 success; 1 parse/validation/usage error; 2 divergent
// closure in a strict (non-complete) carrier; 3 operation unsupported by
// the carrier.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kleene/kleene.hpp"

namespace {

struct run_config {
  std::string semiring_id;
  std::string task;
  std::string algorithm = "elimination";
  bool interval_mode = false;
  bool count_ops = false;
  bool strict_divergence = false;
  std::string input_path;
  std::string b_path;
  std::string output_path;
  std::size_t max_terms = 0;
  bool max_terms_set = false;
};

enum class input_kind { matrix_file, graph_file };

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kleene::domain_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

input_kind detect_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto toks = kleene::detail::split_tokens(line);
    if (toks.empty()) continue;
    if (toks.front().text.front() == '#') {
      if (toks.front().text == "#semiring" || toks.front().text == "#nodes")
        return input_kind::graph_file;
      continue;  // plain comment
    }
    return toks.size() == 3 ? input_kind::graph_file
                            : input_kind::matrix_file;
  }
  throw kleene::domain_error("input file holds no data");
}

/// Closure by the configured algorithm; a series that did not stabilize
/// is reported through the returned flag.
template <kleene::semiring SR>
kleene::matrix<kleene::value_t<SR>> run_closure(
    const run_config& cfg, const SR& sr,
    const kleene::matrix<kleene::value_t<SR>>& a, bool& series_stabilized) {
  series_stabilized = true;
  if (cfg.algorithm == "block") return kleene::star_block(sr, a);
  if (cfg.algorithm == "series") {
    const std::size_t terms =
        cfg.max_terms_set ? cfg.max_terms : a.rows();
    auto res = kleene::star_series(sr, a, terms);
    series_stabilized = res.stabilized;
    return std::move(res.sum);
  }
  return kleene::star_elimination(sr, a);
}

template <kleene::semiring SR>
void run_task(const run_config& cfg, const SR& sr, input_kind kind,
              const std::optional<kleene::raw_graph>& raw,
              const std::string& text, const kleene::op_count* tally) {
  using value = kleene::value_t<SR>;

  kleene::matrix<value> input;
  std::vector<std::string> node_names;
  if (kind == input_kind::graph_file) {
    const auto g = kleene::build_graph(*raw, sr);
    node_names = g.nodes();
    input = kleene::graph_to_matrix(sr, g);
  } else {
    std::istringstream in(text);
    input = kleene::read_matrix(in, sr);
  }

  kleene::matrix<value> result;
  bool series_stabilized = true;
  bool print_nodes = false;

  if (cfg.task == "closure" || cfg.task == "path") {
    if (cfg.task == "path") {
      if (kind != input_kind::graph_file)
        throw kleene::domain_error("task 'path' needs a graph input file");
      print_nodes = true;
    }
    result = run_closure(cfg, sr, input, series_stabilized);
  } else if (cfg.task == "bellman") {
    if (cfg.b_path.empty())
      throw kleene::domain_error("task 'bellman' needs --b <matrix file>");
    std::istringstream bin(slurp(cfg.b_path));
    const auto b = kleene::read_matrix(bin, sr);
    if (input.cols() != b.rows())
      throw kleene::domain_error(
          "bellman: B has " + std::to_string(b.rows()) +
          " rows, expected " + std::to_string(input.cols()));
    const auto closure = run_closure(cfg, sr, input, series_stabilized);
    result = kleene::mat_mul(sr, closure, b);
  } else if (cfg.task == "dot") {
    if (kind != input_kind::graph_file && !cfg.b_path.empty()) {
      std::istringstream bin(slurp(cfg.b_path));
      const auto psi = kleene::read_matrix(bin, sr);
      if (psi.rows() != input.rows() || psi.cols() != input.cols())
        throw kleene::domain_error("dot: operands must have equal shape");
      result = kleene::matrix<value>(1, 1);
      result(0, 0) = kleene::idempotent_measure_integral<SR>(
          sr, std::span<const value>(input.data()),
          std::span<const value>(psi.data()));
    } else {
      throw kleene::domain_error(
          "task 'dot' needs a matrix input and --b <matrix file>");
    }
  } else {
    throw kleene::domain_error("unknown task '" + cfg.task + "'");
  }

  std::ofstream file_out;
  if (!cfg.output_path.empty()) {
    file_out.open(cfg.output_path, std::ios::binary);
    if (!file_out)
      throw kleene::domain_error("cannot open output file '" +
                                 cfg.output_path + "'");
  }
  std::ostream& out = cfg.output_path.empty() ? std::cout : file_out;

  if (print_nodes) {
    out << "#nodes";
    for (const auto& name : node_names) out << ' ' << name;
    out << '\n';
  }
  kleene::write_matrix(out, sr, result);
  if (!series_stabilized) out << "#series-not-stabilized\n";
  if (tally != nullptr)
    out << "#ops adds=" << tally->adds << " muls=" << tally->muls
        << " stars=" << tally->stars << " sups=" << tally->sups
        << " infs=" << tally->infs << " invs=" << tally->invs << '\n';
}

template <kleene::semiring S>
void dispatch(const run_config& cfg, const S& base, input_kind kind,
              const std::optional<kleene::raw_graph>& raw,
              const std::string& text) {
  kleene::op_count tally;
  if (cfg.count_ops) {
    const kleene::counting<S> counted(base, tally);
    if (cfg.interval_mode)
      run_task(cfg, kleene::interval_semiring<kleene::counting<S>>(counted),
               kind, raw, text, &tally);
    else
      run_task(cfg, counted, kind, raw, text, &tally);
  } else {
    if (cfg.interval_mode)
      run_task(cfg, kleene::interval_semiring<S>(base), kind, raw, text,
               nullptr);
    else
      run_task(cfg, base, kind, raw, text, nullptr);
  }
}

int run(const run_config& cfg) {
  const std::string text = slurp(cfg.input_path);
  const input_kind kind = detect_kind(text);

  std::optional<kleene::raw_graph> raw;
  if (kind == input_kind::graph_file) {
    std::istringstream in(text);
    raw = kleene::read_raw_graph(in);
  }

  std::string id = cfg.semiring_id;
  if (id.empty() && raw && raw->semiring_id) id = *raw->semiring_id;
  if (id.empty())
    throw kleene::domain_error(
        "no semiring selected: pass --semiring or use a #semiring directive");

  const auto var = kleene::make_semiring(id, cfg.strict_divergence);
  std::visit([&](const auto& base) { dispatch(cfg, base, kind, raw, text); },
             var);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  run_config cfg;

  CLI::App app{
      "Semiring linear algebra: Kleene closure, algebraic paths, Bellman "
      "solves and exact interval bounds over tropical-style carriers."};
  app.add_option("input", cfg.input_path,
                 "matrix file or graph TSV (auto-detected)")
      ->required();
  app.add_option("--semiring", cfg.semiring_id,
                 "carrier id: maxplus, maxplus-complete, minplus, "
                 "maxmin[:<a>:<b>], plustimes, subtropical:<h>");
  app.add_option("--task", cfg.task, "closure | bellman | dot | path")
      ->required()
      ->check(CLI::IsMember({"closure", "bellman", "dot", "path"}));
  app.add_option("--algorithm", cfg.algorithm,
                 "closure algorithm: elimination (default) | block | series")
      ->check(CLI::IsMember({"elimination", "block", "series"}));
  app.add_flag("--interval", cfg.interval_mode,
               "interval mode: cells are 'lo..hi' (bare value = point)");
  app.add_flag("--count-ops", cfg.count_ops,
               "append a '#ops …' line with basic-operation counts");
  app.add_option("--b", cfg.b_path,
                 "second operand file (bellman right-hand side, dot psi)");
  app.add_option("--output", cfg.output_path,
                 "write the result here instead of standard output");
  app.add_option("--max-terms", cfg.max_terms,
                 "series truncation length (default: matrix dimension)")
      ->each([&cfg](const std::string&) { cfg.max_terms_set = true; });
  app.add_flag("--strict-divergence", cfg.strict_divergence,
               "use strict carriers: divergent closures fail (exit 2) "
               "instead of saturating to the completed carrier's top");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run(cfg);
  } catch (const kleene::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const kleene::divergence_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const kleene::unsupported_operation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const kleene::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
