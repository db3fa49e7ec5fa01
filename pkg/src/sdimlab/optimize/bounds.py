"""Closed-form values and bounds for sdim_f of product graphs.

Each helper evaluates the right-hand sides from the factors alone; callers
compare them against ``sdim_f`` of the product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .. import families
from ..errors import InvalidGraphError
from ..graph import (
    Graph, all_pairs_distances, connected_components, has_true_twins, is_connected,
    twin_partition,
)
from ..products import corona, lexicographic
from ..resolving import strong_resolving_graph
from .invariants import sdim_f, sl_f
from .matching import max_matching


@dataclass(frozen=True)
class Bounds:
    lower: Fraction
    upper: Fraction

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper


def _k1(h: Graph) -> Graph:
    return corona(families.complete(1), h)[0]


def corona_value(g: Graph, h: Graph) -> Fraction:
    """sdim_f of the corona for connected ``g`` of order at least 2."""
    if g.n < 2 or not is_connected(g) or h.n < 1:
        raise InvalidGraphError("needs connected g of order >= 2 and non-empty h")
    return Fraction(g.n * h.n, 2)


def k1_corona_bounds(h: Graph) -> Bounds:
    """Bracket for sdim_f(K_1 corona h), for connected or disconnected ``h``."""
    m = h.n
    if is_connected(h):
        if m < 2:
            raise InvalidGraphError("connected h needs order >= 2")
        return Bounds(sdim_f(h)[0], Fraction(1 + m, 2))
    largest = max(len(c) for c in connected_components(h))
    return Bounds(Fraction(min(m - largest, m // 2)), Fraction(m, 2))


def lexicographic_bounds(g: Graph, h: Graph) -> Bounds:
    """Bounds for sdim_f(g[h]) when ``g`` is connected and true-twin-free.

    For ``diam(h) <= 2`` the bounds use sdim_f(h) and |M(h)|; otherwise the
    corona ``K_1 . h`` stands in for ``h``.
    """
    if g.n < 2 or h.n < 2 or not is_connected(g):
        raise InvalidGraphError("needs connected g and h of order >= 2")
    if has_true_twins(g):
        raise InvalidGraphError("g must be free of true twins")
    n, m = g.n, h.n
    n_b = len(strong_resolving_graph(g).boundary)
    f_g = sdim_f(g)[0]
    if is_connected(h) and all_pairs_distances(h).diameter() <= 2:
        stand_in = h
    else:
        stand_in = _k1(h)
    m_b = len(strong_resolving_graph(stand_in).boundary)
    f_h = sdim_f(stand_in)[0]
    lower = max(n * f_h + (m - m_b) * f_g, (n - n_b) * f_h + m * f_g)
    upper = Fraction(n * m_b + m * n_b - n_b * m_b, 2)
    return Bounds(lower, upper)


def twin_class_lower_bound(g: Graph, h: Graph) -> Fraction:
    """Lower bound from the twin classes of ``g`` (sizes m1, m2, m3)."""
    if g.n < 2 or not is_connected(g):
        raise InvalidGraphError("needs connected g of order >= 2")
    tp = twin_partition(g)
    total = Fraction(tp.m3 * h.n, 2)
    if tp.m1:
        total += tp.m1 * sl_f(h)
    if tp.m2:
        k2h = lexicographic(families.complete(2), h)[0]
        total += Fraction(tp.m2, 2) * sdim_f(k2h)[0]
    return total


def cartesian_bounds(g: Graph, h: Graph) -> Bounds:
    """``max(2 f(g), 2 f(h)) <= sdim_f(g box h) <= min(|M(g)| f(h), |M(h)| f(g))``."""
    f_g, f_h = sdim_f(g)[0], sdim_f(h)[0]
    mg = len(strong_resolving_graph(g).boundary)
    mh = len(strong_resolving_graph(h).boundary)
    return Bounds(max(2 * f_g, 2 * f_h), min(mg * f_h, mh * f_g))


def cartesian_matching_bounds(g: Graph, h: Graph) -> Bounds:
    """``2 nu(G_SR) nu(H_SR) <= sdim_f(g box h) <= |M(g)| |M(h)| / 2``."""
    sg, sh = strong_resolving_graph(g), strong_resolving_graph(h)
    return Bounds(Fraction(2 * max_matching(sg.graph) * max_matching(sh.graph)),
                  Fraction(len(sg.boundary) * len(sh.boundary), 2))
