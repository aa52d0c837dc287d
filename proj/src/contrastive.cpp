#include "reasonkit/contrastive.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "reasonkit/hypergraph.hpp"

namespace reasonkit {

std::vector<Term> all_contrastive(const MonotoneClauseSet& g) {
    MonotoneClauseSet mg = g.is_minimized() ? g : minimize(g);
    std::vector<std::vector<Var>> clauses = mg.clauses();
    std::sort(clauses.begin(), clauses.end());
    std::vector<Term> out;
    out.reserve(clauses.size());
    for (const auto& c : clauses) out.push_back(mg.vars_to_term(c));
    return out;
}

FeatureReport explanatory_features(const MonotoneClauseSet& g) {
    MonotoneClauseSet mg = g.is_minimized() ? g : minimize(g);
    std::set<Literal> necessary, relevant;
    for (const auto& clause : mg.clauses()) {
        if (clause.size() == 1) necessary.insert(mg.literal_for(clause[0]));
        for (Var v : clause) relevant.insert(mg.literal_for(v));
    }
    FeatureReport report;
    report.necessary.assign(necessary.begin(), necessary.end());
    report.relevant.assign(relevant.begin(), relevant.end());
    for (Var v = 0; v < mg.feature_count(); ++v)
        for (bool polarity : {false, true}) {
            Literal l{v, polarity};
            if (!relevant.count(l)) report.irrelevant.push_back(l);
        }
    return report;
}

std::pair<std::vector<Term>, bool> enumerate_sufficient_reasons(const MonotoneClauseSet& g,
                                                                std::size_t cap) {
    if (cap == 0) throw InputError("enumeration cap must be positive");
    MonotoneClauseSet mg = g.is_minimized() ? g : minimize(g);
    std::vector<std::vector<Var>> found;
    bool overflow = false;
    minimal_transversals(mg.clauses(), [&](const std::vector<Var>& t) {
        if (found.size() == cap) {
            overflow = true;
            return false;
        }
        found.push_back(t);
        return true;
    });
    std::sort(found.begin(), found.end());
    std::vector<Term> out;
    out.reserve(found.size());
    for (const auto& vars : found) out.push_back(mg.vars_to_term(vars));
    return {std::move(out), !overflow};
}

ImportanceMap count_and_importance(const MonotoneClauseSet& g, std::size_t cap) {
    auto [reasons, complete] = enumerate_sufficient_reasons(g, cap);
    ImportanceMap imp;
    imp.total_count = reasons.size();
    imp.exact = complete;
    if (reasons.empty()) return imp;
    std::map<Literal, std::size_t> occurrences;
    for (const Term& t : reasons)
        for (const Literal& l : t) ++occurrences[l];
    for (const auto& [l, c] : occurrences)
        imp.entries.emplace(l, Rational(BigCount(c), BigCount(reasons.size())));
    return imp;
}

ContrastiveStats contrastive_stats(const std::vector<Term>& explanations) {
    ContrastiveStats stats;
    stats.count = explanations.size();
    if (explanations.empty()) return stats;
    std::vector<std::size_t> sizes;
    sizes.reserve(explanations.size());
    for (const Term& t : explanations) sizes.push_back(t.size());
    std::sort(sizes.begin(), sizes.end());
    stats.min_size = sizes.front();
    stats.max_size = sizes.back();
    const std::size_t m = sizes.size();
    stats.median_size = (m % 2) ? double(sizes[m / 2])
                                : (double(sizes[m / 2 - 1]) + double(sizes[m / 2])) / 2.0;
    return stats;
}

std::string importance_csv(const ImportanceMap& imp, std::int32_t feature_count) {
    std::ostringstream out;
    out << "variable,polarity,importance_num,importance_den\n";
    for (Var v = 0; v < feature_count; ++v)
        for (bool polarity : {true, false}) {
            Rational r = imp.importance_of({v, polarity});
            out << v << ',' << (polarity ? 1 : 0) << ','
                << boost::multiprecision::numerator(r) << ','
                << boost::multiprecision::denominator(r) << '\n';
        }
    return out.str();
}

} // namespace reasonkit
