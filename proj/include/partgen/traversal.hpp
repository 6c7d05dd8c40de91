#pragma once

#include <cstdint>
#include <functional>

#include "partgen/op_counters.hpp"
#include "partgen/ptree.hpp"

namespace partgen {

using NodeVisitor = std::function<void(const Node&)>;

// Inorder traversals of the partition strict binary tree. All three visit
// the same node sequence; they differ in which nodes go through the stack.
// An empty visitor is allowed and only the counters are produced.

/// Stack-based inorder traversal of any materialized strict binary tree.
/// Every internal node is pushed once. Throws DomainError for a tree that is
/// not strict binary.
OpCounters inorder_generic(const Tree& tree, const NodeVisitor& visit);

/// The same stack algorithm run on the strict tree of n without
/// materializing it: "has a left child" is y > 0 and the children come from
/// strict_left_child / strict_right_child. Lets the generic algorithm be
/// checked beyond the materialization guard.
OpCounters inorder_generic_implicit(std::uint64_t n, const NodeVisitor& visit);

/// Traversal of the strict tree of n computed from the child formulas,
/// pushing only nodes with 2x <= y.
OpCounters inorder_v1(std::uint64_t n, const NodeVisitor& visit);

/// As inorder_v1 but pushing only nodes with 3x <= y; the 2x <= y < 3x
/// subtrees are walked without the stack.
OpCounters inorder_v2(std::uint64_t n, const NodeVisitor& visit);

}  // namespace partgen
