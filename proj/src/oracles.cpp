#include "reasonkit/oracles.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace reasonkit {

namespace {

// Position of each tree variable within tree.variables(), for mask encoding.
std::map<Var, int> var_positions(const DecisionTree& tree) {
    std::map<Var, int> pos;
    int i = 0;
    for (Var v : tree.variables()) pos[v] = i++;
    return pos;
}

int eval_mask(const DecisionTree& tree, const std::map<Var, int>& pos, std::uint32_t assignment) {
    NodeId cur = tree.root();
    for (;;) {
        const TreeNode& nd = tree.node(cur);
        if (nd.is_leaf()) return nd.label;
        cur = (assignment >> pos.at(nd.var)) & 1u ? nd.right : nd.left;
    }
}

std::vector<Term> masks_to_terms(const std::vector<std::uint32_t>& masks,
                                 const std::vector<Var>& vars, const Instance& x) {
    std::vector<Term> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) {
        std::vector<Literal> lits;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if ((m >> i) & 1u) lits.push_back(x.literal_of(vars[i]));
        out.emplace_back(std::move(lits));
    }
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.vars() < b.vars(); });
    return out;
}

void check_limit(const DecisionTree& tree, std::size_t limit) {
    if (limit > 30) throw InputError("oracle variable limit capped at 30");
    if (tree.variables().size() > limit)
        throw OracleLimitError("tree uses " + std::to_string(tree.variables().size()) +
                               " variables, oracle limit is " + std::to_string(limit));
}

} // namespace

std::vector<Term> brute_force_sufficient_reasons(const DecisionTree& tree, const Instance& x,
                                                 std::size_t limit) {
    check_limit(tree, limit);
    if (tree.evaluate(x) != 1)
        throw ContractError("oracle requires T(x) = 1; negate the tree first");

    const std::vector<Var>& vars = tree.variables();
    const auto pos = var_positions(tree);
    const int nv = static_cast<int>(vars.size());
    const std::uint32_t full = nv == 0 ? 0u : (nv == 32 ? ~0u : (1u << nv) - 1u);

    std::vector<char> truth(std::size_t(1) << nv);
    for (std::uint32_t a = 0; a <= full; ++a) {
        truth[a] = static_cast<char>(eval_mask(tree, pos, a));
        if (full == 0) break;
    }
    std::uint32_t xmask = 0;
    for (int i = 0; i < nv; ++i)
        if (x[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])]) xmask |= 1u << i;

    std::vector<std::uint32_t> primes;
    auto superset_of_prime = [&](std::uint32_t s) {
        for (std::uint32_t p : primes)
            if ((s & p) == p) return true;
        return false;
    };
    auto is_implicant = [&](std::uint32_t s) {
        const std::uint32_t fixed = xmask & s;
        const std::uint32_t free = full & ~s;
        std::uint32_t sub = free;
        for (;;) {
            if (!truth[fixed | sub]) return false;
            if (sub == 0) return true;
            sub = (sub - 1) & free;
        }
    };

    // Subsets in increasing-size order (Gosper), so the first implicant found
    // along any chain is prime.
    for (int k = 0; k <= nv; ++k) {
        if (k == 0) {
            if (is_implicant(0)) primes.push_back(0);
            continue;
        }
        std::uint32_t s = (1u << k) - 1u;
        while (s <= full) {
            if (!superset_of_prime(s) && is_implicant(s)) primes.push_back(s);
            std::uint32_t c = s & -s;
            std::uint32_t r = s + c;
            if (r > full || r == 0) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return masks_to_terms(primes, vars, x);
}

std::vector<Term> shannon_sr(const DecisionTree& tree, const Instance& x, std::size_t limit) {
    check_limit(tree, limit);
    if (tree.evaluate(x) != 1)
        throw ContractError("oracle requires T(x) = 1; negate the tree first");

    const std::vector<Var>& vars = tree.variables();
    const auto pos = var_positions(tree);

    // Does the term (a subterm of t_x, encoded by its variable mask) imply
    // the subtree? Walk the fixed branch where the term sets the variable,
    // both branches otherwise.
    auto implies = [&](auto&& self, std::uint32_t mask, NodeId id) -> bool {
        const TreeNode& nd = tree.node(id);
        if (nd.is_leaf()) return nd.label == 1;
        if ((mask >> pos.at(nd.var)) & 1u) {
            NodeId next = x[static_cast<std::size_t>(nd.var)] ? nd.right : nd.left;
            return self(self, mask, next);
        }
        return self(self, mask, nd.left) && self(self, mask, nd.right);
    };

    auto minimal_filter = [](std::vector<std::uint32_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<std::uint32_t> kept;
        for (std::uint32_t a : v) {
            bool dominated = false;
            for (std::uint32_t b : v)
                if (b != a && (a & b) == b) { dominated = true; break; }
            if (!dominated) kept.push_back(a);
        }
        v = std::move(kept);
    };

    auto rec = [&](auto&& self, NodeId id) -> std::vector<std::uint32_t> {
        const TreeNode& nd = tree.node(id);
        if (nd.is_leaf()) {
            if (nd.label == 1) return {0u};
            return {};
        }
        const bool bit = x[static_cast<std::size_t>(nd.var)];
        const NodeId agree = bit ? nd.right : nd.left;
        const NodeId other = bit ? nd.left : nd.right;
        std::vector<std::uint32_t> sr_agree = self(self, agree);
        std::vector<std::uint32_t> sr_other = self(self, other);

        // max-merge: pairwise conjunctions, keep the ⊆-minimal terms
        std::vector<std::uint32_t> merged;
        merged.reserve(sr_agree.size() * sr_other.size());
        for (std::uint32_t a : sr_agree)
            for (std::uint32_t b : sr_other) merged.push_back(a | b);
        minimal_filter(merged);

        const std::uint32_t bitmask = 1u << pos.at(nd.var);
        for (std::uint32_t a : sr_agree)
            if (!implies(implies, a, other)) merged.push_back(a | bitmask);
        return merged;
    };

    std::vector<std::uint32_t> masks = rec(rec, tree.root());
    return masks_to_terms(masks, vars, x);
}

DecisionTree make_complete_tree(int depth) {
    if (depth < 1) throw InputError("complete tree depth must be >= 1");
    const std::int32_t n = (1 << depth) - 1;
    const NodeId total = static_cast<NodeId>((1 << (depth + 1)) - 1);
    std::vector<TreeNode> nodes(static_cast<std::size_t>(total));
    for (NodeId i = 0; i < n; ++i)
        nodes[static_cast<std::size_t>(i)] = TreeNode::internal(i, 2 * i + 1, 2 * i + 2);
    for (NodeId i = n; i < total; ++i)
        // heap order puts the leaves last; left children are odd indices
        nodes[static_cast<std::size_t>(i)] = TreeNode::leaf(i % 2 == 1 ? 0 : 1);
    return DecisionTree(n, std::move(nodes), 0);
}

DecisionTree make_comb_tree(int k) {
    if (k < 1) throw InputError("comb parameter must be >= 1");
    const std::int32_t n = 2 * k - 1;
    std::vector<TreeNode> nodes;
    Var next_var = 0;
    auto add = [&](TreeNode nd) {
        nodes.push_back(nd);
        return static_cast<NodeId>(nodes.size() - 1);
    };
    auto build = [&](auto&& self, int depth) -> NodeId {
        NodeId me = add(TreeNode{});
        Var v = next_var++;
        if (depth == 1) {
            NodeId l0 = add(TreeNode::leaf(0));
            NodeId l1 = add(TreeNode::leaf(1));
            nodes[static_cast<std::size_t>(me)] = TreeNode::internal(v, l0, l1);
            return me;
        }
        NodeId gadget = add(TreeNode{});
        Var gv = next_var++;
        NodeId g0 = add(TreeNode::leaf(0));
        NodeId g1 = add(TreeNode::leaf(1));
        nodes[static_cast<std::size_t>(gadget)] = TreeNode::internal(gv, g0, g1);
        NodeId rest = self(self, depth - 1);
        nodes[static_cast<std::size_t>(me)] = TreeNode::internal(v, gadget, rest);
        return me;
    };
    NodeId root = build(build, k);
    return DecisionTree(n, std::move(nodes), root);
}

DecisionTree random_read_once_tree(Rng& rng, std::int32_t max_vars, int max_depth,
                                   double leaf_probability) {
    if (max_vars < 1) throw InputError("need at least one variable");
    std::vector<TreeNode> nodes;
    auto add = [&](TreeNode nd) {
        nodes.push_back(nd);
        return static_cast<NodeId>(nodes.size() - 1);
    };
    auto build = [&](auto&& self, std::vector<Var> avail, int depth) -> NodeId {
        if (avail.empty() || depth == 0 || rng.chance(leaf_probability))
            return add(TreeNode::leaf(static_cast<int>(rng.below(2))));
        std::size_t pick = rng.below(avail.size());
        Var v = avail[pick];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
        NodeId me = add(TreeNode{});
        NodeId l = self(self, avail, depth - 1);
        NodeId r = self(self, avail, depth - 1);
        nodes[static_cast<std::size_t>(me)] = TreeNode::internal(v, l, r);
        return me;
    };
    std::vector<Var> avail(static_cast<std::size_t>(max_vars));
    for (std::int32_t i = 0; i < max_vars; ++i) avail[static_cast<std::size_t>(i)] = i;
    NodeId root = build(build, avail, max_depth);
    return DecisionTree(max_vars, std::move(nodes), root);
}

Instance random_instance(Rng& rng, std::int32_t n) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
    return Instance(std::move(bits));
}

} // namespace reasonkit
