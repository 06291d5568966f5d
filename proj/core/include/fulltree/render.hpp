#pragma once

#include <cstddef>
#include <string>

#include "fulltree/result.hpp"
#include "fulltree/tree.hpp"

namespace fulltree {

enum class TreeFormat { sexpr, json, dot };

// The CLI treats labels as opaque text, so rendered trees carry strings.
using TextTree = Tree<std::string>;

struct ParseError {
  std::string message;
  std::size_t position = 0;  // 1-based byte offset where scanning stopped
  bool operator==(const ParseError&) const = default;
};

// sexpr: `leaf` | `(node <left> <label> <right>)`, labels quoted only when
//        they contain whitespace, parentheses, quotes, backslashes, or are
//        empty.
// json:  `null` | `{"l":…,"x":"<label>","r":…}` with exactly that key order.
// dot:   a digraph with internal nodes numbered in preorder; leaves omitted.
std::string render_tree(const TextTree& t, TreeFormat format);

// Inverse of render_tree for sexpr and json; dot is write-only.
Result<TextTree, ParseError> parse_tree(const std::string& text, TreeFormat format);

}  // namespace fulltree
