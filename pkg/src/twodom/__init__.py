"""2-dominating sets: constructions, exact certification, and LP bounds.

A set D of vertices 2-dominates a graph when every vertex outside D has at
least two neighbors inside D.  This package builds such sets with greedy
procedures driven by a changing vertex-weight assignment, certifies runs
with exact rational arithmetic, checks the 41 weight-condition families that
make the (a/s)*n size guarantee sound, and optimizes that guarantee with an
exactly-verified linear program.  The ``twodom`` command line fronts it all.
"""

from .algorithms import (RunCertificate, StepRecord, certify_run, exact_gamma2,
                         partition_swap, rule_greedy, weight_greedy)
from .coloring import Color, ColoredState, StateType
from .graph import (EdgeListParseError, Graph, gen_named, gen_random_regular,
                    min_degree, parse_edge_list, to_edge_list)
from .lp import (COROLLARY_RATIOS, LinearConstraint, LpSolution,
                 build_constraints, corollary_fractions, reference_bound,
                 solve_min_a, verify_corollary)
from .weights import (CoefficientSet, ConditionReport, ConditionVerdict,
                      builtin_coefficients, check_conditions,
                      coefficients_from_json, coefficients_to_json,
                      load_coefficients, total_weight, vertex_weight)

__version__ = "0.1.0"

__all__ = [
    "Color", "ColoredState", "StateType", "Graph", "EdgeListParseError",
    "parse_edge_list", "to_edge_list", "gen_named", "gen_random_regular",
    "min_degree", "CoefficientSet", "ConditionReport", "ConditionVerdict",
    "builtin_coefficients", "check_conditions", "coefficients_from_json",
    "coefficients_to_json", "load_coefficients", "total_weight",
    "vertex_weight", "RunCertificate", "StepRecord", "certify_run",
    "exact_gamma2", "partition_swap", "rule_greedy", "weight_greedy",
    "LinearConstraint", "LpSolution", "build_constraints", "solve_min_a",
    "reference_bound", "corollary_fractions", "verify_corollary",
    "COROLLARY_RATIOS",
]
