#include "fulltree/render.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>

#include <json.hpp>

namespace fulltree {

namespace {

// -------- sexpr --------

bool needs_quoting(const std::string& s) {
  if (s.empty()) return true;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return true;
    if (c == '(' || c == ')' || c == '"' || c == '\\') return true;
  }
  return false;
}

void append_sexpr_label(const std::string& s, std::string& out) {
  if (!needs_quoting(s)) {
    out += s;
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void append_sexpr(const TextTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += "leaf";
    return;
  }
  out += "(node ";
  append_sexpr(t.left(), out);
  out += ' ';
  append_sexpr_label(t.label(), out);
  out += ' ';
  append_sexpr(t.right(), out);
  out += ')';
}

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  ParseError error(std::string message) const { return ParseError{std::move(message), pos + 1}; }

  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
           c == '\\';
  }

  // Bare word: a maximal run free of whitespace, parens, quotes, backslashes.
  std::string take_bare() {
    std::size_t start = pos;
    while (pos < text.size() && !is_delimiter(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
};

Result<std::string, ParseError> parse_sexpr_label(Scanner& sc) {
  sc.skip_ws();
  if (sc.at_end()) return sc.error("expected a label");
  if (sc.peek() == '"') {
    ++sc.pos;
    std::string out;
    while (!sc.at_end() && sc.peek() != '"') {
      char c = sc.peek();
      if (c == '\\') {
        ++sc.pos;
        if (sc.at_end() || (sc.peek() != '"' && sc.peek() != '\\'))
          return sc.error("invalid escape in quoted label");
        c = sc.peek();
      }
      out += c;
      ++sc.pos;
    }
    if (sc.at_end()) return sc.error("unterminated quoted label");
    ++sc.pos;  // closing quote
    return out;
  }
  std::string word = sc.take_bare();
  if (word.empty()) return sc.error("expected a label");
  return word;
}

Result<TextTree, ParseError> parse_sexpr_tree(Scanner& sc) {
  sc.skip_ws();
  if (sc.at_end()) return sc.error("expected leaf or (node ...)");
  if (sc.peek() != '(') {
    const std::size_t at = sc.pos;
    std::string word = sc.take_bare();
    if (word == "leaf") return TextTree::leaf();
    return ParseError{"expected leaf or (node ...)", at + 1};
  }
  ++sc.pos;  // '('
  sc.skip_ws();
  const std::size_t at = sc.pos;
  if (sc.take_bare() != "node") return ParseError{"expected node after (", at + 1};
  auto left = parse_sexpr_tree(sc);
  if (!left) return left;
  auto label = parse_sexpr_label(sc);
  if (!label) return label.error();
  auto right = parse_sexpr_tree(sc);
  if (!right) return right;
  sc.skip_ws();
  if (sc.at_end() || sc.peek() != ')') return sc.error("expected )");
  ++sc.pos;
  return TextTree::node(std::move(left).value(), std::move(label).value(),
                        std::move(right).value());
}

// -------- json --------

nlohmann::ordered_json to_json(const TextTree& t) {
  if (t.is_leaf()) return nullptr;
  nlohmann::ordered_json j;
  j["l"] = to_json(t.left());
  j["x"] = t.label();
  j["r"] = to_json(t.right());
  return j;
}

struct JsonShape {
  std::string message;
};

TextTree tree_from_json(const nlohmann::json& j) {
  if (j.is_null()) return TextTree::leaf();
  if (!j.is_object() || j.size() != 3 || !j.contains("l") || !j.contains("x") ||
      !j.contains("r"))
    throw JsonShape{"expected null or an object with keys l, x, r"};
  if (!j.at("x").is_string()) throw JsonShape{"label x must be a string"};
  return TextTree::node(tree_from_json(j.at("l")), j.at("x").get<std::string>(),
                        tree_from_json(j.at("r")));
}

// -------- dot --------

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Preorder numbering: a node gets `id`, its left subtree the ids right after,
// the right subtree the ids after that. Returns the first id past t.
std::size_t append_dot(const TextTree& t, std::size_t id, std::string& decls,
                       std::string& edges) {
  decls += "  n" + std::to_string(id) + " [label=\"" + dot_escape(t.label()) + "\"];\n";
  std::size_t next = id + 1;
  if (!t.left().is_leaf()) {
    edges += "  n" + std::to_string(id) + " -> n" + std::to_string(next) + ";\n";
    next = append_dot(t.left(), next, decls, edges);
  }
  if (!t.right().is_leaf()) {
    edges += "  n" + std::to_string(id) + " -> n" + std::to_string(next) + ";\n";
    next = append_dot(t.right(), next, decls, edges);
  }
  return next;
}

}  // namespace

std::string render_tree(const TextTree& t, TreeFormat format) {
  switch (format) {
    case TreeFormat::sexpr: {
      std::string out;
      append_sexpr(t, out);
      return out;
    }
    case TreeFormat::json:
      return to_json(t).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    case TreeFormat::dot: {
      std::string decls;
      std::string edges;
      if (!t.is_leaf()) append_dot(t, 0, decls, edges);
      return "digraph tree {\n" + decls + edges + "}\n";
    }
  }
  return {};
}

Result<TextTree, ParseError> parse_tree(const std::string& text, TreeFormat format) {
  switch (format) {
    case TreeFormat::sexpr: {
      Scanner sc{text};
      auto tree = parse_sexpr_tree(sc);
      if (!tree) return tree;
      sc.skip_ws();
      if (!sc.at_end()) return sc.error("trailing characters after the tree");
      return tree;
    }
    case TreeFormat::json: {
      try {
        return tree_from_json(nlohmann::json::parse(text));
      } catch (const nlohmann::json::parse_error& e) {
        return ParseError{e.what(), e.byte};
      } catch (const JsonShape& e) {
        return ParseError{e.message, 1};
      }
    }
    case TreeFormat::dot:
      return ParseError{"dot output cannot be parsed back", 1};
  }
  return ParseError{"unknown format", 1};
}

}  // namespace fulltree
