#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "reasonkit/boolean.hpp"

namespace reasonkit {

// Hitting-set algorithms over hyperedges given as sorted vectors of variable
// indices. Edges are assumed nonempty; callers pass an antichain (minimized
// clause sets or reason sets) where that matters.

// Exact minimum-cardinality hitting set by branch and bound. Lower bound:
// greedy packing of pairwise-disjoint uncovered edges; branching: literals of
// a shortest uncovered edge, with exclusion sets so subtrees partition the
// solution space. Deterministic: always returns the same witness.
std::vector<Var> min_hitting_set_exact(const std::vector<std::vector<Var>>& edges);

// Greedy max-degree cover; ties broken toward the smallest variable.
// Guaranteed within ln m − ln ln m + 0.78 of optimal (m = edge count).
std::vector<Var> min_hitting_set_greedy(const std::vector<std::vector<Var>>& edges);

// All ⊆-minimal transversals, detected at emission time by the private-edge
// criterion (each chosen vertex is the sole cover of some edge). The sink
// returns false to stop early. Returns true iff enumeration ran to the end.
bool minimal_transversals(const std::vector<std::vector<Var>>& edges,
                          const std::function<bool(const std::vector<Var>&)>& sink);

// All hitting sets of size exactly k (k must be the optimum for the output
// to be the minimum-cardinality transversals). Same sink contract.
bool transversals_of_size(const std::vector<std::vector<Var>>& edges, std::size_t k,
                          const std::function<bool(const std::vector<Var>&)>& sink);

} // namespace reasonkit
