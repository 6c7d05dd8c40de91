#include "partgen/traversal.hpp"

#include <vector>

#include "partgen/errors.hpp"

namespace partgen {

namespace {

// Fixed-capacity stack with an explicit top index. Capacity n covers the
// deepest possible path.
template <class T>
class FixedStack {
 public:
  explicit FixedStack(std::size_t capacity) : items_(capacity) {}
  bool empty() const { return top_ == 0; }
  void push(const T& v) {
    if (top_ == items_.size()) throw CapacityError("traversal stack overflow");
    items_[top_++] = v;
  }
  T pop() { return items_[--top_]; }

 private:
  std::vector<T> items_;
  std::size_t top_ = 0;
};

class Visits {
 public:
  Visits(const NodeVisitor& fn, OpCounters& c) : fn_(fn), c_(c) {}
  void operator()(const Node& v) {
    ++c_.visits;
    if (fn_) fn_(v);
  }

 private:
  const NodeVisitor& fn_;
  OpCounters& c_;
};

void require_n(std::uint64_t n) {
  if (n < 1) throw DomainError("traversal requires n >= 1");
}

// Algorithm over any strict binary tree exposed through an adapter with
// root(), has_left(v), left(v), right(v), label(v).
template <class Adapter>
OpCounters generic_inorder(const Adapter& tree, std::size_t capacity,
                           const NodeVisitor& visit_fn) {
  using Ref = decltype(tree.root());
  OpCounters c;
  Visits visit(visit_fn, c);
  FixedStack<Ref> stack(capacity);

  Ref v = tree.root();
  ++c.assignments;
  bool more = true;
  ++c.assignments;
  while (++c.bool_evals, more) {
    ++c.outer_iterations;
    while (++c.bool_evals, tree.has_left(v)) {
      stack.push(v);
      ++c.pushes;
      v = tree.left(v);
      ++c.assignments;
    }
    visit(tree.label(v));
    if (++c.bool_evals, !stack.empty()) {
      v = stack.pop();
      ++c.pops;
      visit(tree.label(v));
      v = tree.right(v);
      ++c.assignments;
    } else {
      more = false;
      ++c.assignments;
    }
  }
  return c;
}

struct MaterializedAdapter {
  const Tree& tree;
  std::size_t root() const { return 0; }
  bool has_left(std::size_t v) const { return !tree[v].children.empty(); }
  std::size_t left(std::size_t v) const { return tree[v].children[0]; }
  std::size_t right(std::size_t v) const { return tree[v].children[1]; }
  const Node& label(std::size_t v) const { return tree[v].label; }
};

struct ImplicitAdapter {
  std::uint64_t n;
  Node root() const { return {1, n - 1}; }
  bool has_left(const Node& v) const { return !v.is_leaf(); }
  Node left(const Node& v) const { return strict_left_child(v); }
  Node right(const Node& v) const { return strict_right_child(v); }
  const Node& label(const Node& v) const { return v; }
};

}  // namespace

OpCounters inorder_generic(const Tree& tree, const NodeVisitor& visit_fn) {
  if (tree.kind() != TreeKind::kStrictBinary || tree.size() == 0) {
    throw DomainError("inorder_generic expects a strict binary tree");
  }
  for (const auto& e : tree.nodes()) {
    if (e.children.size() != 0 && e.children.size() != 2) {
      throw DomainError("inorder_generic: node (" + to_string(e.label) +
                        ") has " + std::to_string(e.children.size()) +
                        " children");
    }
  }
  return generic_inorder(MaterializedAdapter{tree}, tree.size(), visit_fn);
}

OpCounters inorder_generic_implicit(std::uint64_t n, const NodeVisitor& visit_fn) {
  require_n(n);
  return generic_inorder(ImplicitAdapter{n}, n, visit_fn);
}

OpCounters inorder_v1(std::uint64_t n, const NodeVisitor& visit_fn) {
  require_n(n);
  OpCounters c;
  Visits visit(visit_fn, c);
  FixedStack<Node> stack(n);

  Node v{1, n - 1};
  ++c.assignments;
  bool more = true;
  ++c.assignments;
  while (++c.bool_evals, more) {
    ++c.outer_iterations;
    while (++c.bool_evals, 2 * v.x <= v.y) {
      stack.push(v);
      ++c.pushes;
      v = {v.x, v.y - v.x};
      ++c.assignments;
    }
    while (++c.bool_evals, v.x <= v.y) {
      ++c.pair_iterations;
      visit({v.y, 0});
      visit(v);
      v = strict_right_child(v);
      ++c.assignments;
    }
    visit({v.x + v.y, 0});
    if (++c.bool_evals, !stack.empty()) {
      v = stack.pop();
      ++c.pops;
      visit(v);
      v = strict_right_child(v);
      ++c.assignments;
    } else {
      more = false;
      ++c.assignments;
    }
  }
  return c;
}

OpCounters inorder_v2(std::uint64_t n, const NodeVisitor& visit_fn) {
  require_n(n);
  OpCounters c;
  Visits visit(visit_fn, c);
  FixedStack<Node> stack(n);

  Node v{1, n - 1};
  ++c.assignments;
  bool more = true;
  ++c.assignments;
  while (++c.bool_evals, more) {
    ++c.outer_iterations;
    while (++c.bool_evals, 3 * v.x <= v.y) {
      stack.push(v);
      ++c.pushes;
      v = {v.x, v.y - v.x};
      ++c.assignments;
    }
    while (++c.bool_evals, 2 * v.x <= v.y) {
      ++c.middle_iterations;
      const Node left{v.x, v.y - v.x};
      visit({left.y, 0});
      visit(left);
      Node w = strict_right_child(left);
      ++c.assignments;
      while (++c.bool_evals, w.x <= w.y) {
        ++c.pair_iterations;
        visit({w.y, 0});
        visit(w);
        w = strict_right_child(w);
        ++c.assignments;
      }
      visit({w.x + w.y, 0});
      visit(v);
      v = strict_right_child(v);
      ++c.assignments;
    }
    while (++c.bool_evals, v.x <= v.y) {
      ++c.pair_iterations;
      visit({v.y, 0});
      visit(v);
      v = strict_right_child(v);
      ++c.assignments;
    }
    visit({v.x + v.y, 0});
    if (++c.bool_evals, !stack.empty()) {
      v = stack.pop();
      ++c.pops;
      visit(v);
      v = strict_right_child(v);
      ++c.assignments;
    } else {
      more = false;
      ++c.assignments;
    }
  }
  return c;
}

}  // namespace partgen
