#include "reasonkit/abductive.hpp"

#include <algorithm>

#include "reasonkit/hypergraph.hpp"

namespace reasonkit {

const char* to_string(ReasonKind k) {
    switch (k) {
        case ReasonKind::direct: return "direct";
        case ReasonKind::sufficient: return "sufficient";
        case ReasonKind::minimal: return "minimal";
        case ReasonKind::probable: return "probable";
    }
    return "?";
}

RemovalOrder parse_order(const std::string& text) {
    if (text == "path") return RemovalOrder::path;
    if (text == "index") return RemovalOrder::index;
    throw InputError("unknown removal order '" + text + "' (use path or index)");
}

std::vector<Literal> removal_sequence(const Term& seed, const std::vector<Literal>& path_order,
                                      RemovalOrder order) {
    std::vector<Literal> seq;
    if (order == RemovalOrder::path) {
        for (auto it = path_order.rbegin(); it != path_order.rend(); ++it)
            if (seed.contains(*it)) seq.push_back(*it);
        for (const Literal& l : seed) // seed literals off the path, if any
            if (std::find(seq.begin(), seq.end(), l) == seq.end()) seq.push_back(l);
    } else {
        seq.assign(seed.begin(), seed.end()); // Term iterates in ascending var order
    }
    return seq;
}

Reason direct_reason(const DecisionTree& tree, const Instance& x) {
    if (tree.evaluate(x) != 1)
        throw ContractError("direct reason requires T(x) = 1; negate the tree first");
    return Reason{Term(path_literals(tree, x)), ReasonKind::direct, 1, "path"};
}

Reason sufficient_reason(const MonotoneClauseSet& g, const Term& seed,
                         const std::vector<Literal>& order) {
    if (!hits_all(seed, g))
        throw InputError("seed term is not an implicant covering the instance");
    Term t = seed;
    for (const Literal& l : order) {
        if (!t.contains(l)) continue;
        Term candidate = t.without(l);
        if (hits_all(candidate, g)) t = std::move(candidate);
    }
    return Reason{std::move(t), ReasonKind::sufficient, 1, "greedy"};
}

Reason minimal_reason(const MonotoneClauseSet& g) {
    MonotoneClauseSet mg = g.is_minimized() ? g : minimize(g);
    std::vector<Var> witness = min_hitting_set_exact(mg.clauses());
    return Reason{mg.vars_to_term(witness), ReasonKind::minimal, 1, "exact"};
}

Reason minimal_reason_greedy(const MonotoneClauseSet& g) {
    MonotoneClauseSet mg = g.is_minimized() ? g : minimize(g);
    Term cover = mg.vars_to_term(min_hitting_set_greedy(mg.clauses()));
    // The cover hits everything but need not be prime; prune it.
    Reason pruned = sufficient_reason(mg, cover, removal_sequence(cover, {}, RemovalOrder::index));
    pruned.seed = "greedy-cover";
    return pruned;
}

std::pair<std::vector<Reason>, bool> enumerate_minimal_reasons(const MonotoneClauseSet& g,
                                                               std::size_t cap) {
    if (cap == 0) throw InputError("enumeration cap must be positive");
    MonotoneClauseSet mg = g.is_minimized() ? g : minimize(g);
    const std::size_t k = min_hitting_set_exact(mg.clauses()).size();

    std::vector<std::vector<Var>> found;
    bool overflow = false;
    transversals_of_size(mg.clauses(), k, [&](const std::vector<Var>& t) {
        if (found.size() == cap) {
            overflow = true;
            return false;
        }
        found.push_back(t);
        return true;
    });
    std::sort(found.begin(), found.end());

    std::vector<Reason> out;
    out.reserve(found.size());
    for (const auto& vars : found)
        out.push_back(Reason{mg.vars_to_term(vars), ReasonKind::minimal, 1, "enumerated"});
    return {std::move(out), !overflow};
}

Rational precision(const DecisionTree& tree, const Term& t) {
    std::vector<Var> over = tree.variables();
    for (const Literal& l : t)
        over.push_back(l.var);
    std::sort(over.begin(), over.end());
    over.erase(std::unique(over.begin(), over.end()), over.end());
    BigCount models = count_models(tree, t, over);
    return Rational(models, pow2(over.size() - t.size()));
}

Reason probable_reason(const DecisionTree& tree, const Instance& x, const Rational& delta,
                       RemovalOrder order) {
    if (delta <= 0 || delta > 1)
        throw InputError("delta must lie in (0, 1]");
    if (tree.evaluate(x) != 1)
        throw ContractError("probable reason requires T(x) = 1; negate the tree first");

    std::vector<Literal> path = path_literals(tree, x);
    Term t(path);
    std::vector<Literal> seq = removal_sequence(t, path, order);

    // Precision is not monotone under shrinking, so one scan is not enough
    // to certify local minimality; iterate scans until nothing moves.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Literal& l : seq) {
            if (!t.contains(l)) continue;
            Term candidate = t.without(l);
            if (precision(tree, candidate) >= delta) {
                t = std::move(candidate);
                changed = true;
            }
        }
    }
    return Reason{std::move(t), ReasonKind::probable, delta, "direct"};
}

} // namespace reasonkit
