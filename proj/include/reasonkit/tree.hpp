#pragma once

#include <cstdint>
#include <vector>

#include "reasonkit/boolean.hpp"
#include "reasonkit/numbers.hpp"

namespace reasonkit {

using NodeId = std::int32_t;

struct TreeNode {
    Var var = -1;          // internal nodes only
    NodeId left = -1;      // child for variable = 0
    NodeId right = -1;     // child for variable = 1
    std::int8_t label = -1; // leaves only, 0 or 1

    bool is_leaf() const { return var < 0; }

    static TreeNode leaf(int label) { return TreeNode{-1, -1, -1, static_cast<std::int8_t>(label)}; }
    static TreeNode internal(Var v, NodeId l, NodeId r) { return TreeNode{v, l, r, -1}; }
};

// Read-once binary decision tree over features 0..n-1, stored as a flat node
// pool so that large learned trees stay cheap to traverse. Immutable after
// construction and safe for concurrent read-only use.
class DecisionTree {
  public:
    // Validates all structural invariants: children in range, every non-root
    // node has exactly one parent, no cycles, read-once paths, var < n,
    // leaf labels in {0,1}. `external_ids` preserves file node ids across a
    // parse/serialize round trip; empty means identity.
    DecisionTree(std::int32_t feature_count, std::vector<TreeNode> nodes, NodeId root,
                 std::vector<std::int64_t> external_ids = {});

    static DecisionTree single_leaf(std::int32_t feature_count, int label) {
        return DecisionTree(feature_count, {TreeNode::leaf(label)}, 0);
    }

    std::int32_t feature_count() const { return n_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t leaf_count() const { return leaves_; }
    std::size_t internal_count() const { return nodes_.size() - leaves_; }
    NodeId root() const { return root_; }
    const TreeNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const std::vector<std::int64_t>& external_ids() const { return ids_; }

    // Distinct variables appearing in the tree, sorted.
    const std::vector<Var>& variables() const { return vars_; }

    int evaluate(const Instance& x) const;

  private:
    std::int32_t n_;
    std::vector<TreeNode> nodes_;
    NodeId root_;
    std::vector<std::int64_t> ids_;
    std::vector<Var> vars_;
    std::size_t leaves_ = 0;
};

// Same structure, complemented leaf labels: negate(T)(x) = 1 - T(x).
DecisionTree negate(const DecisionTree& tree);

// One clause per 0-leaf (negated path term) / one term per 1-leaf. The
// conjunction (resp. disjunction) is equivalent to the tree. Duplicate
// clauses are kept; deduplication happens at restriction time.
std::vector<Clause> to_cnf(const DecisionTree& tree);
std::vector<Term> to_dnf(const DecisionTree& tree);

// Literals along the root-to-leaf path compatible with x, in path order.
std::vector<Literal> path_literals(const DecisionTree& tree, const Instance& x);

// Exact number of assignments to `over` satisfying tree ∧ condition, via one
// traversal adding 2^(free vars) per compatible 1-leaf. `over` must be sorted,
// duplicate-free and cover Var(tree) ∪ Var(condition).
BigCount count_models(const DecisionTree& tree, const Term& condition, const std::vector<Var>& over);

} // namespace reasonkit
