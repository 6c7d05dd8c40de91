#include "partgen/ptree.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "partgen/errors.hpp"

namespace partgen {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

void check_materializable(std::uint64_t n) {
  if (n < 1 || n > kMaxMaterializedN) {
    throw CapacityError("tree materialization requires 1 <= n <= " +
                        std::to_string(kMaxMaterializedN) + ", got " +
                        std::to_string(n));
  }
}

// Preorder construction from a child function. Children are pushed in
// reverse so the leftmost is popped, and therefore stored, first.
template <class ChildrenOf>
Tree build(TreeKind kind, std::uint64_t n, Node root, ChildrenOf children_of) {
  Tree tree(kind, n);
  std::vector<std::pair<std::size_t, Node>> pending{{kNoParent, root}};
  while (!pending.empty()) {
    auto [parent, label] = pending.back();
    pending.pop_back();
    const std::size_t idx = tree.add(label);
    if (parent != kNoParent) tree.link(parent, idx);
    if (label.is_leaf()) continue;
    const std::vector<Node> kids = children_of(label);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      pending.emplace_back(idx, *it);
    }
  }
  return tree;
}

}  // namespace

std::string to_string(const Node& node) {
  return std::to_string(node.x) + "," + std::to_string(node.y);
}

std::vector<Node> tree_children(const Node& parent) {
  if (parent.is_leaf()) {
    throw DomainError("tree_children: (" + to_string(parent) + ") is a leaf");
  }
  std::vector<Node> kids;
  for (std::uint64_t x = parent.x; x <= parent.y / 2; ++x) {
    kids.push_back({x, parent.y - x});
  }
  kids.push_back({parent.y, 0});
  return kids;
}

Node strict_left_child(const Node& node) {
  if (node.is_leaf()) {
    throw DomainError("strict_left_child: (" + to_string(node) + ") is a leaf");
  }
  if (2 * node.x <= node.y) return {node.x, node.y - node.x};
  return {node.y, 0};
}

Node strict_right_child(const Node& node) {
  if (node.is_leaf()) {
    throw DomainError("strict_right_child: (" + to_string(node) +
                      ") is a leaf");
  }
  if (node.x + 2 <= node.y) return {node.x + 1, node.y - 1};
  return {node.x + node.y, 0};
}

std::size_t Tree::leaf_count() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(nodes_, [](const Entry& e) { return e.children.empty(); }));
}

Tree build_partition_tree(std::uint64_t n) {
  check_materializable(n);
  return build(TreeKind::kPartition, n, Node{1, n}, tree_children);
}

Tree build_strict_tree(std::uint64_t n) {
  check_materializable(n);
  return build(TreeKind::kStrictBinary, n, Node{1, n - 1}, [](const Node& v) {
    return std::vector<Node>{strict_left_child(v), strict_right_child(v)};
  });
}

Tree to_strict_binary(const Tree& partition_tree) {
  if (partition_tree.kind() != TreeKind::kPartition ||
      partition_tree.size() < 2) {
    throw DomainError("to_strict_binary expects a partition tree");
  }
  std::vector<std::size_t> next_sibling(partition_tree.size(), kNoParent);
  for (const auto& entry : partition_tree.nodes()) {
    for (std::size_t i = 0; i + 1 < entry.children.size(); ++i) {
      next_sibling[entry.children[i]] = entry.children[i + 1];
    }
  }

  Tree out(TreeKind::kStrictBinary, partition_tree.n());
  // (new parent, old index); right is pushed before left so left is stored
  // first.
  std::vector<std::pair<std::size_t, std::size_t>> pending{
      {kNoParent, partition_tree[0].children.front()}};
  while (!pending.empty()) {
    auto [parent, old] = pending.back();
    pending.pop_back();
    const std::size_t idx = out.add(partition_tree[old].label);
    if (parent != kNoParent) out.link(parent, idx);
    if (next_sibling[old] != kNoParent) pending.emplace_back(idx, next_sibling[old]);
    const auto& kids = partition_tree[old].children;
    if (!kids.empty()) pending.emplace_back(idx, kids.front());
  }
  return out;
}

std::vector<std::uint64_t> decode_path(std::span<const Node> path) {
  if (path.empty()) throw DomainError("decode_path: empty path");
  if (path.front().x != 1) {
    throw DomainError("decode_path: path does not start at a root (1, n-1)");
  }
  std::vector<std::uint64_t> parts;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Node& cur = path[i];
    const Node& nxt = path[i + 1];
    if (cur.is_leaf()) {
      throw DomainError("decode_path: path continues past leaf (" +
                        to_string(cur) + ")");
    }
    if (nxt == strict_left_child(cur)) {
      parts.push_back(cur.x);
    } else if (nxt != strict_right_child(cur)) {
      throw DomainError("decode_path: (" + to_string(nxt) +
                        ") is not a child of (" + to_string(cur) + ")");
    }
  }
  if (!path.back().is_leaf()) {
    throw DomainError("decode_path: path does not end at a leaf");
  }
  parts.push_back(path.back().x);
  return parts;
}

std::vector<std::vector<Node>> root_to_leaf_paths(const Tree& tree) {
  std::vector<std::vector<Node>> paths;
  if (tree.size() == 0) return paths;
  std::vector<Node> current;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    current.push_back(tree[i].label);
    if (tree[i].children.empty()) paths.push_back(current);
    for (std::size_t c : tree[i].children) walk(c);
    current.pop_back();
  };
  walk(0);
  return paths;
}

std::string to_dot(const Tree& tree) {
  std::string out = tree.kind() == TreeKind::kPartition
                        ? "digraph partition_tree {\n"
                        : "digraph strict_binary_tree {\n";
  out += "  node [shape=circle];\n";
  for (std::size_t i = 0; i < tree.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + to_string(tree[i].label) +
           "\"];\n";
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (std::size_t c : tree[i].children) {
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(c) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace partgen
