#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "fulltree/errors.hpp"
#include "fulltree/ops.hpp"

namespace fulltree {

// A perfectly nested pair tree: depth d packs exactly 2^d base values.
// This is the runtime stand-in for element types that square level by
// level (pairs, pairs of pairs, ...); the depth field carries what the
// nesting type would pin down statically, and every operation checks it.
template <typename T>
class PackedValue {
 public:
  static PackedValue leaf(T value) {
    ops::alloc();
    return PackedValue(std::make_shared<const Node>(Node{std::move(value)}), 0);
  }

  // Pairs two packs of equal depth; the result is one level deeper.
  static PackedValue pair_of(PackedValue a, PackedValue b) {
    if (a.depth_ != b.depth_)
      throw DepthMismatchError("paired packed values must have equal depth");
    ops::alloc();
    const std::size_t d = a.depth_ + 1;
    return PackedValue(
        std::make_shared<const Node>(Node{
            std::pair<NodePtr, NodePtr>(std::move(a.node_), std::move(b.node_))}),
        d);
  }

  std::size_t depth() const { return depth_; }
  std::size_t size() const { return std::size_t{1} << depth_; }
  bool is_leaf() const { return depth_ == 0; }

  const T& value() const { return std::get<0>(node_->data); }

  PackedValue first() const {
    return PackedValue(std::get<1>(node_->data).first, depth_ - 1);
  }
  PackedValue second() const {
    return PackedValue(std::get<1>(node_->data).second, depth_ - 1);
  }

  void flatten_into(std::vector<T>& out) const {
    if (is_leaf()) {
      out.push_back(value());
      return;
    }
    first().flatten_into(out);
    second().flatten_into(out);
  }

  std::vector<T> flatten() const {
    std::vector<T> out;
    out.reserve(size());
    flatten_into(out);
    return out;
  }

  friend bool operator==(const PackedValue& a, const PackedValue& b) {
    if (a.depth_ != b.depth_) return false;
    if (a.node_ == b.node_) return true;
    if (a.is_leaf()) return a.value() == b.value();
    return a.first() == b.first() && a.second() == b.second();
  }
  friend bool operator!=(const PackedValue& a, const PackedValue& b) { return !(a == b); }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    std::variant<T, std::pair<NodePtr, NodePtr>> data;
  };

  PackedValue(NodePtr n, std::size_t d) : node_(std::move(n)), depth_(d) {}

  NodePtr node_;
  std::size_t depth_;
};

}  // namespace fulltree
