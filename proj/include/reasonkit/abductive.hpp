#pragma once

#include <string>
#include <vector>

#include "reasonkit/numbers.hpp"
#include "reasonkit/restriction.hpp"

namespace reasonkit {

enum class ReasonKind { direct, sufficient, minimal, probable };

const char* to_string(ReasonKind k);

struct Reason {
    Term term;
    ReasonKind kind = ReasonKind::direct;
    Rational delta = 1;     // 1 for non-probable kinds
    std::string seed;       // which term the computation started from
    std::size_t size() const { return term.size(); }
};

// The greedy removal scan visits literals in a fixed, caller-visible order.
// `path` tries the deepest path literal first (the order used on direct-reason
// seeds); `index` scans by ascending variable index.
enum class RemovalOrder { path, index };

RemovalOrder parse_order(const std::string& text);

// Concrete removal sequence for a seed. `path_order` lists the direct-reason
// literals root-to-leaf; it may be empty for `index`.
std::vector<Literal> removal_sequence(const Term& seed, const std::vector<Literal>& path_order,
                                      RemovalOrder order);

// Literals of the unique root-to-leaf path compatible with x. Requires T(x)=1.
Reason direct_reason(const DecisionTree& tree, const Instance& x);

// One greedy scan over `order`: drop a literal whenever the rest still hits
// every clause. The result is a prime implicant of T covering x.
Reason sufficient_reason(const MonotoneClauseSet& g, const Term& seed,
                         const std::vector<Literal>& order);

// Minimum-cardinality term hitting every clause: exact branch-and-bound over
// minimize(g). Matches the optimal solution of the (C_soft, C_hard) partial
// MaxSAT formulation. Always feasible (the anchor hits everything).
Reason minimal_reason(const MonotoneClauseSet& g);

// Greedy max-degree cover of minimize(g), followed by a pruning scan so the
// output is always a sufficient reason. Size within ln m − ln ln m + 0.78 of
// the optimum (m = minimized clause count).
Reason minimal_reason_greedy(const MonotoneClauseSet& g);

// All minimum-cardinality reasons in lexicographic order, truncated at cap.
// second = true iff the enumeration is complete.
std::pair<std::vector<Reason>, bool> enumerate_minimal_reasons(const MonotoneClauseSet& g,
                                                               std::size_t cap);

// Fraction of completions of t classified 1, exact: #models(T ∧ t) over
// 2^(|Var(T) ∪ Var(t)| − |t|). Inconsistent terms cannot be constructed, so
// t is always a valid condition.
Rational precision(const DecisionTree& tree, const Term& t);

// Greedy removal scans seeded at the direct reason, iterated to a fixpoint:
// the result keeps precision ≥ delta and removing any single remaining
// literal drops below delta. With delta = 1 this is exactly the greedy
// sufficient reason for the same order.
Reason probable_reason(const DecisionTree& tree, const Instance& x, const Rational& delta,
                       RemovalOrder order);

} // namespace reasonkit
