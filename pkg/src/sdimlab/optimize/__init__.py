"""Exact LP machinery and the invariants computed with it."""

from .cover import minimum_vertex_cover, vertex_cover_number
from .invariants import (
    InvariantReport, fractional_vertex_cover, invariant_report, max_weight_on_optimal_face,
    resolving_problem, sdim, sdim_f, sdim_f_reduced, sl_f,
)
from .lp import (
    LpProblem, LpSolution, LpStatus, Rational, WeightFunction, lp_solve, maximize_on_optimal_face,
    prune_constraints,
)
from .matching import max_matching, maximum_matching

__all__ = [
    "InvariantReport", "LpProblem", "LpSolution", "LpStatus", "Rational", "WeightFunction",
    "fractional_vertex_cover", "invariant_report", "lp_solve", "max_matching",
    "max_weight_on_optimal_face", "maximize_on_optimal_face", "maximum_matching",
    "minimum_vertex_cover", "prune_constraints", "resolving_problem", "sdim", "sdim_f",
    "sdim_f_reduced", "sl_f", "vertex_cover_number",
]
