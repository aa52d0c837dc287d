#pragma once

#include <vector>

#include "reasonkit/boolean.hpp"
#include "reasonkit/rng.hpp"
#include "reasonkit/tree.hpp"

namespace reasonkit {

// Independent ground-truth oracles. Both enumerate the full set of sufficient
// reasons for x given T by routes that share nothing with the hitting-set
// machinery: subset enumeration over a truth table, and the Shannon-style
// recursion over cofactors. Disagreement between the two is a hard failure.

inline constexpr std::size_t kOracleVarLimit = 16;

// Every ⊆-minimal implicant subterm of t_x, by exhaustive subset enumeration
// with per-subset exhaustive completion checks. Throws OracleLimitError when
// the tree uses more than `limit` variables.
std::vector<Term> brute_force_sufficient_reasons(const DecisionTree& tree, const Instance& x,
                                                 std::size_t limit = kOracleVarLimit);

// Recursive computation: sr(x,1) = {empty}, sr(x,0) = {}, and at a node the
// max-merge of the cofactor sets plus the root-literal extensions filtered by
// "does not already imply the opposite cofactor".
std::vector<Term> shannon_sr(const DecisionTree& tree, const Instance& x,
                             std::size_t limit = kOracleVarLimit);

// Complete binary tree of the given depth with breadth-first variable labels;
// each bottom internal node has a 0-leaf (left) and a 1-leaf (right).
// n = 2^depth − 1. Sufficient-reason counts follow s(1)=1, s(d+1)=s(d)(s(d)+1).
DecisionTree make_complete_tree(int depth);

// Comb-shaped tree with fresh variables per node: every spine node hangs a
// one-test gadget on the left and recurses on the right. n = 2k−1 variables,
// 2n+1 nodes; the all-ones instance has 2^(k−1) minimal reasons of size k.
DecisionTree make_comb_tree(int k);

// Random read-once tree for property tests; deterministic in the rng state.
DecisionTree random_read_once_tree(Rng& rng, std::int32_t max_vars, int max_depth,
                                   double leaf_probability = 0.3);

Instance random_instance(Rng& rng, std::int32_t n);

} // namespace reasonkit
