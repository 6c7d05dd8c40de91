#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace partgen {

/// Label shared by both tree kinds: x is the smallest part the next step may
/// use, y is what is left to distribute. Leaves have y == 0.
struct Node {
  std::uint64_t x = 1;
  std::uint64_t y = 0;

  bool is_leaf() const { return y == 0; }
  friend auto operator<=>(const Node&, const Node&) = default;
};

std::string to_string(const Node& node);

/// Children of (x, y) in the partition tree, ordered by increasing first
/// coordinate: (x', y - x') for x <= x' <= y/2, then the leaf (y, 0).
/// Throws DomainError for a leaf.
std::vector<Node> tree_children(const Node& parent);

/// Children in the partition strict binary tree (first child / next sibling
/// of the partition tree, expressed directly on labels):
///   left  = (x, y - x)     if 2x <= y, else (y, 0)
///   right = (x + 1, y - 1) if x + 2 <= y, else (x + y, 0)
/// Every node with y > 0 has both; leaves have neither (DomainError).
Node strict_left_child(const Node& node);
Node strict_right_child(const Node& node);

enum class TreeKind { kPartition, kStrictBinary };

/// Arena-backed ordered tree. Node 0 is the root, nodes are stored in
/// preorder, and child links are arena indices.
class Tree {
 public:
  struct Entry {
    Node label;
    std::vector<std::size_t> children;
  };

  Tree(TreeKind kind, std::uint64_t n) : kind_(kind), n_(n) {}

  TreeKind kind() const { return kind_; }
  std::uint64_t n() const { return n_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t leaf_count() const;

  const Entry& operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const Entry> nodes() const { return nodes_; }

  std::size_t add(Node label) {
    nodes_.push_back({label, {}});
    return nodes_.size() - 1;
  }
  void link(std::size_t parent, std::size_t child) {
    nodes_[parent].children.push_back(child);
  }

 private:
  TreeKind kind_;
  std::uint64_t n_;
  std::vector<Entry> nodes_;
};

inline constexpr std::uint64_t kMaxMaterializedN = 40;

/// Partition tree rooted at (1, n). 1 <= n <= 40, else CapacityError.
Tree build_partition_tree(std::uint64_t n);

/// Partition strict binary tree rooted at (1, n - 1), built from the
/// strict_left_child / strict_right_child formulas.
Tree build_strict_tree(std::uint64_t n);

/// First-child / next-sibling conversion of a partition tree with the original
/// root dropped. Produces the same tree as build_strict_tree for the same n.
Tree to_strict_binary(const Tree& partition_tree);

/// Ascending composition spelled by a root-to-leaf path of the strict binary
/// tree: a node contributes its x when the path continues to its left child,
/// and the leaf always contributes. Throws DomainError if the sequence is not
/// such a path.
std::vector<std::uint64_t> decode_path(std::span<const Node> path);

/// All root-to-leaf label paths of a tree, in left-to-right order.
std::vector<std::vector<Node>> root_to_leaf_paths(const Tree& tree);

/// Graphviz rendering. Node ids are arena indices, labels are "x,y".
std::string to_dot(const Tree& tree);

}  // namespace partgen
