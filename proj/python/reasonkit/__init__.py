"""Explanation portfolio for Boolean decision-tree classifiers.

Thin package wrapper around the compiled extension; everything lives in
reasonkit._core.
"""

from reasonkit._core import (  # noqa: F401
    DecisionTree,
    Instance,
    MonotoneClauseSet,
    ReasonkitError,
    all_contrastive,
    brute_force_sufficient_reasons,
    count_and_importance,
    direct_reason,
    enumerate_minimal_reasons,
    enumerate_sufficient_reasons,
    explanatory_features,
    hits_all,
    load_tree,
    make_comb_tree,
    make_complete_tree,
    minimal_reason,
    minimal_reason_greedy,
    minimize,
    parse_tree,
    precision,
    probable_reason,
    restrict,
    shannon_sr,
    sufficient_reason,
    verify,
)

__all__ = [
    "DecisionTree",
    "Instance",
    "MonotoneClauseSet",
    "ReasonkitError",
    "all_contrastive",
    "brute_force_sufficient_reasons",
    "count_and_importance",
    "direct_reason",
    "enumerate_minimal_reasons",
    "enumerate_sufficient_reasons",
    "explanatory_features",
    "hits_all",
    "load_tree",
    "make_comb_tree",
    "make_complete_tree",
    "minimal_reason",
    "minimal_reason_greedy",
    "minimize",
    "parse_tree",
    "precision",
    "probable_reason",
    "restrict",
    "shannon_sr",
    "sufficient_reason",
    "verify",
]
