#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "fulltree/render.hpp"
#include "fulltree/result.hpp"

namespace fulltree {

enum class Algo { naive, typed, structural };
enum class InputFormat { lines, csv_row };

struct MalformedInput {
  std::string message;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based byte column
  bool operator==(const MalformedInput&) const = default;
};

// lines: one label per line, one trailing newline optional, empty input is
// the empty list, empty lines are rejected. csv-row: a single comma-separated
// line, empty fields rejected.
Result<std::vector<std::string>, MalformedInput> parse_input(const std::string& bytes,
                                                             InputFormat format);

struct Options {
  Algo algo = Algo::structural;
  TreeFormat format = TreeFormat::sexpr;
  InputFormat input = InputFormat::lines;
  bool stats = false;
  bool check = false;
};

// Balances the labels in input_bytes and writes the rendering (or the stats
// or cross-check report) to out. Exit codes: 0 success, 1 malformed input,
// 2 internal invariant violation (a library bug).
int run_cli(const Options& options, const std::string& input_bytes, std::ostream& out,
            std::ostream& err);

}  // namespace fulltree
