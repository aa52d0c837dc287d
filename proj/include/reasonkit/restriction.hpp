#pragma once

#include <vector>

#include "reasonkit/boolean.hpp"
#include "reasonkit/tree.hpp"

namespace reasonkit {

// The instance-restricted monotone CNF g = {c ∩ t_x : c ∈ cnf(T)}. Every
// literal occurs with the polarity it has in the anchor t_x, so clauses are
// stored as sorted variable-index sets and the anchor supplies polarities.
// Immutable once built.
class MonotoneClauseSet {
  public:
    MonotoneClauseSet(std::int32_t feature_count, Term anchor,
                      std::vector<std::vector<Var>> clauses, bool minimized)
        : n_(feature_count), anchor_(std::move(anchor)), clauses_(std::move(clauses)),
          minimized_(minimized) {}

    std::int32_t feature_count() const { return n_; }
    const Term& anchor() const { return anchor_; }
    const std::vector<std::vector<Var>>& clauses() const { return clauses_; }
    std::size_t size() const { return clauses_.size(); }
    bool is_minimized() const { return minimized_; }

    Literal literal_for(Var v) const {
        const Literal* l = anchor_.find_var(v);
        if (!l) throw InputError("variable x" + std::to_string(v) + " is not anchored");
        return *l;
    }

    Term vars_to_term(const std::vector<Var>& vars) const {
        std::vector<Literal> lits;
        lits.reserve(vars.size());
        for (Var v : vars) lits.push_back(literal_for(v));
        return Term(std::move(lits));
    }

    Clause clause_at(std::size_t i) const {
        std::vector<Literal> lits;
        lits.reserve(clauses_[i].size());
        for (Var v : clauses_[i]) lits.push_back(literal_for(v));
        return Clause(std::move(lits));
    }

  private:
    std::int32_t n_;
    Term anchor_;
    std::vector<std::vector<Var>> clauses_;
    bool minimized_;
};

// Requires T(x) = 1; for a negative instance negate the tree first. Clauses
// are deduplicated but not subsumption-reduced. Every restricted clause is
// nonempty because x satisfies each 0-path clause on a literal of t_x.
MonotoneClauseSet restrict_to_instance(const DecisionTree& tree, const Instance& x);

// Keep only the ⊆-minimal clauses; equivalent as a Boolean function and an
// antichain afterwards. Idempotent.
MonotoneClauseSet minimize(const MonotoneClauseSet& g);

// True iff t intersects every clause of g, i.e. t ⊆ t_x is an implicant of
// the tree covering x. Requires t ⊆ anchor.
bool hits_all(const Term& t, const MonotoneClauseSet& g);

} // namespace reasonkit
