"""Fractional and integral strong resolving invariants of connected graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..errors import InvalidGraphError
from ..graph import (
    ComponentProfile, DistanceMatrix, Graph, all_pairs_distances, component_profile,
    require_connected,
)
from ..resolving import s_set, sl_set, strong_resolving_graph
from .cover import vertex_cover_number
from .lp import LpProblem, WeightFunction, lp_solve, maximize_on_optimal_face
from .matching import max_matching


def _prepare(g: Graph, what: str) -> DistanceMatrix:
    require_connected(g, what)
    if g.n < 2:
        raise InvalidGraphError(f"{what} needs at least two vertices")
    return all_pairs_distances(g)


def resolving_problem(g: Graph, locating: bool = False) -> LpProblem:
    """One covering constraint per unordered pair, supported on S{x,y} (or SL{x,y})."""
    d = _prepare(g, "sl_f" if locating else "sdim_f")
    support = sl_set if locating else s_set
    return LpProblem.from_sets(g.n, (support(g, d, x, y).support
                                     for x in g.vertices() for y in range(x + 1, g.n)))


def sdim_f(g: Graph, *, reduced: bool = False, prune: bool = True) -> tuple[Fraction, WeightFunction]:
    """Fractional strong metric dimension and a minimum strong resolving function.

    The default builds the definitional all-pairs LP. ``reduced=True`` opts into
    the LP over the MMD pairs only (the fractional vertex cover of G_SR), lifted
    back with weight 0 off the boundary.
    """
    if reduced:
        value, weights = _reduced(g)
        return value, weights
    sol = lp_solve(resolving_problem(g), prune=prune)
    return sol.value, sol.assignment


def _reduced(g: Graph) -> tuple[Fraction, WeightFunction]:
    _prepare(g, "sdim_f_reduced")
    sr = strong_resolving_graph(g)
    sol = lp_solve(LpProblem.from_sets(sr.graph.n, ({u, v} for u, v in sr.graph.edges())))
    weights = [Fraction(0)] * g.n
    for i, w in enumerate(sol.assignment):
        weights[sr.base_vertex(i)] = w
    return sol.value, tuple(weights)


def sdim_f_reduced(g: Graph) -> Fraction:
    return _reduced(g)[0]


def fractional_vertex_cover(g: Graph) -> Fraction:
    return lp_solve(LpProblem.from_sets(g.n, ({u, v} for u, v in g.edges()))).value


def sl_f(g: Graph) -> Fraction:
    """Minimum weight of a function hitting every SL{x,y} with weight at least 1."""
    return lp_solve(resolving_problem(g, locating=True)).value


def sdim(g: Graph) -> int:
    """Strong metric dimension, computed as the vertex cover number of G_SR."""
    _prepare(g, "sdim")
    return vertex_cover_number(strong_resolving_graph(g).graph)


def max_weight_on_optimal_face(g: Graph, v: int, optimum: Optional[Fraction] = None) -> Fraction:
    """Largest weight any minimum strong resolving function can put on ``v``."""
    return maximize_on_optimal_face(resolving_problem(g), v, optimum)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    boundary_size: int
    sdim_f: Fraction
    sdim: int
    sr_matching_number: int
    sr_vertex_cover_number: int
    leaves: int
    diameter: int
    sr_components: tuple[ComponentProfile, ...]

    def check(self) -> None:
        """Raise ``AssertionError`` unless the general sandwich bounds hold."""
        lower = max(Fraction(self.sr_matching_number), Fraction(self.sdim, 2), Fraction(1))
        upper = min(Fraction(self.boundary_size, 2), Fraction(self.sdim))
        if not lower <= self.sdim_f <= upper:
            raise AssertionError(f"sdim_f={self.sdim_f} outside [{lower}, {upper}]")
        if self.sdim != self.sr_vertex_cover_number:
            raise AssertionError("sdim differs from the vertex cover number of G_SR")


def invariant_report(g: Graph, *, reduced: bool = False) -> InvariantReport:
    d = _prepare(g, "invariant_report")
    sr = strong_resolving_graph(g, d)
    alpha = vertex_cover_number(sr.graph)
    report = InvariantReport(
        n=g.n,
        boundary_size=len(sr.boundary),
        sdim_f=sdim_f(g, reduced=reduced)[0],
        sdim=alpha,
        sr_matching_number=max_matching(sr.graph),
        sr_vertex_cover_number=alpha,
        leaves=g.leaf_count(),
        diameter=d.diameter(),
        sr_components=tuple(component_profile(sr.graph)),
    )
    report.check()
    return report
