#include "reasonkit/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace reasonkit {

DecisionTree::DecisionTree(std::int32_t feature_count, std::vector<TreeNode> nodes, NodeId root,
                           std::vector<std::int64_t> external_ids)
    : n_(feature_count), nodes_(std::move(nodes)), root_(root), ids_(std::move(external_ids)) {
    if (n_ < 0) throw StructureError("negative feature count");
    if (nodes_.empty()) throw StructureError("empty node pool");
    const auto count = static_cast<NodeId>(nodes_.size());
    if (root_ < 0 || root_ >= count) throw StructureError("root index out of range");
    if (!ids_.empty() && ids_.size() != nodes_.size())
        throw StructureError("external id list does not match node pool");

    std::vector<int> parents(nodes_.size(), 0);
    for (NodeId i = 0; i < count; ++i) {
        const TreeNode& nd = nodes_[static_cast<std::size_t>(i)];
        if (nd.is_leaf()) {
            if (nd.label != 0 && nd.label != 1)
                throw StructureError("leaf label must be 0 or 1 (node " + std::to_string(i) + ")");
            ++leaves_;
        } else {
            if (nd.var >= n_)
                throw StructureError("variable x" + std::to_string(nd.var) + " out of range (n=" +
                                     std::to_string(n_) + ")");
            for (NodeId child : {nd.left, nd.right}) {
                if (child < 0 || child >= count)
                    throw DanglingChildError("node " + std::to_string(i) + " references missing child " +
                                             std::to_string(child));
                ++parents[static_cast<std::size_t>(child)];
            }
        }
    }
    for (NodeId i = 0; i < count; ++i) {
        int expected = (i == root_) ? 0 : 1;
        if (parents[static_cast<std::size_t>(i)] != expected)
            throw StructureError("node " + std::to_string(i) + " has " +
                                 std::to_string(parents[static_cast<std::size_t>(i)]) +
                                 " parents, expected " + std::to_string(expected));
    }

    // Parent counts rule out sharing, so a DFS from the root visits every
    // node exactly once; check read-once along the way.
    std::set<Var> used;
    std::vector<Var> seen;
    std::size_t visited = 0;
    auto dfs = [&](auto&& self, NodeId id, std::vector<Var>& path) -> void {
        ++visited;
        const TreeNode& nd = nodes_[static_cast<std::size_t>(id)];
        if (nd.is_leaf()) return;
        if (std::find(path.begin(), path.end(), nd.var) != path.end())
            throw ReadOnceError("variable x" + std::to_string(nd.var) + " repeats on a root-to-leaf path");
        used.insert(nd.var);
        path.push_back(nd.var);
        self(self, nd.left, path);
        self(self, nd.right, path);
        path.pop_back();
    };
    std::vector<Var> path;
    dfs(dfs, root_, path);
    if (visited != nodes_.size())
        throw StructureError("node pool contains nodes unreachable from the root");

    vars_.assign(used.begin(), used.end());
}

int DecisionTree::evaluate(const Instance& x) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw InputError("instance has " + std::to_string(x.size()) + " bits, tree expects " +
                         std::to_string(n_));
    NodeId cur = root_;
    for (;;) {
        const TreeNode& nd = node(cur);
        if (nd.is_leaf()) return nd.label;
        cur = x[static_cast<std::size_t>(nd.var)] ? nd.right : nd.left;
    }
}

DecisionTree negate(const DecisionTree& tree) {
    std::vector<TreeNode> nodes = tree.nodes();
    for (auto& nd : nodes)
        if (nd.is_leaf()) nd.label = static_cast<std::int8_t>(1 - nd.label);
    return DecisionTree(tree.feature_count(), std::move(nodes), tree.root(), tree.external_ids());
}

namespace {

template <class Emit>
void walk_paths(const DecisionTree& tree, int target_label, Emit&& emit) {
    std::vector<Literal> path;
    auto dfs = [&](auto&& self, NodeId id) -> void {
        const TreeNode& nd = tree.node(id);
        if (nd.is_leaf()) {
            if (nd.label == target_label) emit(path);
            return;
        }
        path.push_back(neg(nd.var));
        self(self, nd.left);
        path.back() = pos(nd.var);
        self(self, nd.right);
        path.pop_back();
    };
    dfs(dfs, tree.root());
}

} // namespace

std::vector<Clause> to_cnf(const DecisionTree& tree) {
    std::vector<Clause> out;
    walk_paths(tree, 0, [&](const std::vector<Literal>& path) {
        std::vector<Literal> lits;
        lits.reserve(path.size());
        for (Literal l : path) lits.push_back(l.negated());
        out.emplace_back(std::move(lits));
    });
    return out;
}

std::vector<Term> to_dnf(const DecisionTree& tree) {
    std::vector<Term> out;
    walk_paths(tree, 1, [&](const std::vector<Literal>& path) { out.emplace_back(path); });
    return out;
}

std::vector<Literal> path_literals(const DecisionTree& tree, const Instance& x) {
    if (x.size() != static_cast<std::size_t>(tree.feature_count()))
        throw InputError("instance length does not match tree feature count");
    std::vector<Literal> out;
    NodeId cur = tree.root();
    for (;;) {
        const TreeNode& nd = tree.node(cur);
        if (nd.is_leaf()) return out;
        out.push_back(x.literal_of(nd.var));
        cur = x[static_cast<std::size_t>(nd.var)] ? nd.right : nd.left;
    }
}

BigCount count_models(const DecisionTree& tree, const Term& condition, const std::vector<Var>& over) {
    auto in_over = [&](Var v) { return std::binary_search(over.begin(), over.end(), v); };
    for (Var v : tree.variables())
        if (!in_over(v)) throw InputError("count_models: universe misses tree variable x" + std::to_string(v));
    for (const Literal& l : condition)
        if (!in_over(l.var)) throw InputError("count_models: universe misses condition variable x" + std::to_string(l.var));

    const std::size_t universe = over.size();
    const std::size_t cond_size = condition.size();
    BigCount total = 0;
    // depth = variables fixed by the path; cond_seen = condition variables among them.
    auto rec = [&](auto&& self, NodeId id, std::size_t depth, std::size_t cond_seen) -> void {
        const TreeNode& nd = tree.node(id);
        if (nd.is_leaf()) {
            if (nd.label == 1)
                total += pow2(universe - depth - (cond_size - cond_seen));
            return;
        }
        if (const Literal* l = condition.find_var(nd.var)) {
            self(self, l->positive ? nd.right : nd.left, depth + 1, cond_seen + 1);
        } else {
            self(self, nd.left, depth + 1, cond_seen);
            self(self, nd.right, depth + 1, cond_seen);
        }
    };
    rec(rec, tree.root(), 0, 0);
    return total;
}

} // namespace reasonkit
