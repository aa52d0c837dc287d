#include "reasonkit/restriction.hpp"

#include <algorithm>
#include <set>

namespace reasonkit {

MonotoneClauseSet restrict_to_instance(const DecisionTree& tree, const Instance& x) {
    if (tree.evaluate(x) != 1)
        throw ContractError("restriction requires T(x) = 1; negate the tree to explain a negative instance");
    Term anchor = x.term();
    std::set<std::vector<Var>> seen;
    std::vector<std::vector<Var>> clauses;
    for (const Clause& c : to_cnf(tree)) {
        std::vector<Var> restricted;
        for (const Literal& l : c)
            if (anchor.contains(l)) restricted.push_back(l.var);
        // x satisfies every 0-path clause, so the restriction is nonempty.
        if (restricted.empty())
            throw StructureError("empty restricted clause; tree does not classify x as 1");
        std::sort(restricted.begin(), restricted.end());
        if (seen.insert(restricted).second) clauses.push_back(std::move(restricted));
    }
    return MonotoneClauseSet(tree.feature_count(), std::move(anchor), std::move(clauses), clauses.empty());
}

MonotoneClauseSet minimize(const MonotoneClauseSet& g) {
    const auto& cls = g.clauses();
    std::vector<std::vector<Var>> kept;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        bool superset = false;
        // clauses are pairwise distinct, so strict subset = smaller and included
        for (std::size_t j = 0; j < cls.size() && !superset; ++j)
            superset = cls[j].size() < cls[i].size() &&
                       std::includes(cls[i].begin(), cls[i].end(), cls[j].begin(), cls[j].end());
        if (!superset) kept.push_back(cls[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return MonotoneClauseSet(g.feature_count(), g.anchor(), std::move(kept), true);
}

bool hits_all(const Term& t, const MonotoneClauseSet& g) {
    if (!t.subset_of(g.anchor()))
        throw InputError("term is not a subterm of the anchor instance");
    std::vector<Var> tv = t.vars();
    for (const auto& clause : g.clauses()) {
        bool hit = false;
        auto a = tv.begin();
        auto b = clause.begin();
        while (a != tv.end() && b != clause.end()) {
            if (*a == *b) { hit = true; break; }
            if (*a < *b) ++a; else ++b;
        }
        if (!hit) return false;
    }
    return true;
}

} // namespace reasonkit
