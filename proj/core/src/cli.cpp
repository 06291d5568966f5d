#include "fulltree/cli.hpp"

#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fulltree/alt_power_list.hpp"
#include "fulltree/binary_list.hpp"
#include "fulltree/naive.hpp"
#include "fulltree/oracle.hpp"
#include "fulltree/tree.hpp"

namespace fulltree {

namespace {

using Labels = std::vector<std::string>;

Result<Labels, MalformedInput> parse_lines(const std::string& body) {
  Labels out;
  if (body.empty()) return out;
  std::size_t line = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] != '\n') continue;
    if (i == start) return MalformedInput{"empty label line", line, 1};
    out.push_back(body.substr(start, i - start));
    start = i + 1;
    ++line;
  }
  return out;
}

Result<Labels, MalformedInput> parse_csv_row(const std::string& body) {
  Labels out;
  if (body.empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '\n')
      return MalformedInput{"csv-row input must be a single line", 2, 1};
    if (i < body.size() && body[i] != ',') continue;
    if (i == start) return MalformedInput{"empty field", 1, start + 1};
    out.push_back(body.substr(start, i - start));
    start = i + 1;
  }
  return out;
}

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::naive: return "naive";
    case Algo::typed: return "typed";
    case Algo::structural: return "structural";
  }
  return "?";
}

std::optional<Tree<std::string>> run_balancer(Algo algo, const Labels& labels,
                                              std::ostream& err) {
  try {
    switch (algo) {
      case Algo::naive: {
        auto r = naive::balance(labels);
        if (!r.ok()) {
          err << "internal error: the naive balancer rejected its own completion\n";
          return std::nullopt;
        }
        return std::move(r).value();
      }
      case Algo::typed: return balance_typed(labels).tree();
      case Algo::structural: return balance_structural(labels).tree();
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return std::nullopt;
}

int run_check(const Labels& labels, std::ostream& out) {
  const auto report = oracle::cross_check(labels);
  out << "n=" << labels.size() << "\n";
  for (Algo a : {Algo::naive, Algo::typed, Algo::structural}) {
    const oracle::Issue<std::string>* found = nullptr;
    for (const auto& issue : report.issues)
      if (issue.algo == algo_name(a)) found = &issue;
    if (!found) {
      out << algo_name(a) << ": ok\n";
      continue;
    }
    out << algo_name(a) << ": FAIL (" << found->detail << "); minimized:";
    for (const auto& label : found->minimized) out << " " << label;
    out << "\n";
  }
  return report.ok() ? 0 : 2;
}

int run_stats(const Tree<std::string>& t, std::size_t n, std::ostream& out) {
  const auto k = is_full(t);
  out << "n=" << n << "\n";
  out << "height=" << height(t) << "\n";
  out << "full=" << (k ? "true" : "false") << "\n";
  if (k) out << "k=" << *k << "\n";
  return k ? 0 : 2;
}

}  // namespace

Result<Labels, MalformedInput> parse_input(const std::string& bytes, InputFormat format) {
  // One trailing newline is part of the framing, not of the last label.
  std::string body = bytes;
  if (!body.empty() && body.back() == '\n') body.pop_back();
  switch (format) {
    case InputFormat::lines: return parse_lines(body);
    case InputFormat::csv_row: return parse_csv_row(body);
  }
  return MalformedInput{"unknown input format", 1, 1};
}

int run_cli(const Options& options, const std::string& input_bytes, std::ostream& out,
            std::ostream& err) {
  auto labels = parse_input(input_bytes, options.input);
  if (!labels.ok()) {
    const auto& e = labels.error();
    err << "input error at line " << e.line << ", column " << e.column << ": " << e.message
        << "\n";
    return 1;
  }
  const Labels& ls = labels.value();
  if (options.check) return run_check(ls, out);
  auto tree = run_balancer(options.algo, ls, err);
  if (!tree) return 2;
  if (options.stats) return run_stats(*tree, ls.size(), out);
  std::string text = render_tree(*tree, options.format);
  out << text;
  if (options.format != TreeFormat::dot) out << "\n";
  return 0;
}

}  // namespace fulltree
