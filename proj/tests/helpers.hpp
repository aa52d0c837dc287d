#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "reasonkit/boolean.hpp"
#include "reasonkit/oracles.hpp"
#include "reasonkit/tree.hpp"
#include "reasonkit/tree_io.hpp"

namespace testutil {

using namespace reasonkit;

inline std::string data_path(const std::string& name) {
    return std::string(REASONKIT_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline DecisionTree cattleya() { return load_tree(data_path("cattleya.json")); }

inline Instance bits(const std::string& s) { return Instance::from_string(s); }

// Terms/clauses over the anchor reduce to their variable sets.
inline std::vector<std::vector<Var>> var_sets(const std::vector<Term>& terms) {
    std::vector<std::vector<Var>> out;
    for (const Term& t : terms) out.push_back(t.vars());
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive evaluation over all assignments to the tree's variables, other
// coordinates taken from base.
template <class Fn>
void for_each_assignment(const DecisionTree& tree, const Instance& base, Fn&& fn) {
    const auto& vars = tree.variables();
    std::vector<std::uint8_t> b = base.bits();
    const std::size_t count = std::size_t(1) << vars.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            b[static_cast<std::size_t>(vars[i])] = (mask >> i) & 1u;
        fn(Instance(b));
    }
}

inline bool implicant_by_completions(const DecisionTree& tree, const Term& t, const Instance& x) {
    std::vector<Var> free;
    for (Var v : tree.variables())
        if (!t.find_var(v)) free.push_back(v);
    std::vector<std::uint8_t> b = x.bits();
    for (const Literal& l : t) b[static_cast<std::size_t>(l.var)] = l.positive ? 1 : 0;
    const std::size_t count = std::size_t(1) << free.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < free.size(); ++i)
            b[static_cast<std::size_t>(free[i])] = (mask >> i) & 1u;
        if (tree.evaluate(Instance(b)) != 1) return false;
    }
    return true;
}

// Random positive (tree, instance) pair; negates the tree when needed so the
// instance is always positive.
inline std::pair<DecisionTree, Instance> random_positive_case(Rng& rng, std::int32_t max_vars,
                                                              int max_depth) {
    DecisionTree tree = random_read_once_tree(rng, max_vars, max_depth);
    Instance x = random_instance(rng, max_vars);
    if (tree.evaluate(x) != 1) tree = negate(tree);
    return {std::move(tree), std::move(x)};
}

} // namespace testutil
