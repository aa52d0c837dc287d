#pragma once

#include <map>
#include <optional>
#include <vector>

#include "reasonkit/numbers.hpp"
#include "reasonkit/restriction.hpp"

namespace reasonkit {

struct FeatureReport {
    std::vector<Literal> necessary;  // in every sufficient reason
    std::vector<Literal> relevant;   // in at least one (necessary ⊆ relevant)
    std::vector<Literal> irrelevant; // the other literals over X_n, both polarities
};

struct ImportanceMap {
    BigCount total_count = 0;  // number of sufficient reasons seen
    bool exact = true;         // false when the enumeration hit the cap
    std::map<Literal, Rational> entries;

    Rational importance_of(Literal l) const {
        auto it = entries.find(l);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

struct ContrastiveStats {
    BigCount count = 0;
    std::optional<std::size_t> min_size;
    std::optional<std::size_t> max_size;
    std::optional<double> median_size;
};

// The complete set of contrastive explanations: the ⊆-minimal restricted
// clauses, reinterpreted as the sets of instance literals to switch.
// Lexicographic order.
std::vector<Term> all_contrastive(const MonotoneClauseSet& g);

// Necessary = unit clauses of minimize(g); relevant = literals occurring in
// minimize(g); irrelevant = the complement among all 2n literals.
FeatureReport explanatory_features(const MonotoneClauseSet& g);

// All ⊆-minimal hitting sets of minimize(g) — exactly the sufficient reasons
// covering the anchor instance. Lexicographic order, truncated at cap;
// second = true iff complete.
std::pair<std::vector<Term>, bool> enumerate_sufficient_reasons(const MonotoneClauseSet& g,
                                                                std::size_t cap);

// Per-literal frequency over the enumerated sufficient reasons. Counts above
// the cap are reported as lower bounds with exact = false.
ImportanceMap count_and_importance(const MonotoneClauseSet& g, std::size_t cap);

ContrastiveStats contrastive_stats(const std::vector<Term>& explanations);

// CSV feed for explanatory heat maps: one row per literal over X_n,
// columns variable, polarity, importance_num, importance_den.
std::string importance_csv(const ImportanceMap& imp, std::int32_t feature_count);

} // namespace reasonkit
