"""Exact graph isomorphism by colour refinement plus individualization.

Both graphs are refined together with a shared colour namespace, so a colour
means the same thing on each side. When refinement stalls, a vertex of the
first graph is individualized against each same-coloured candidate in the
second and the search recurses. A discrete colouring is checked edge by edge,
so the answer never depends on a heuristic.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .graph import Graph
from .limits import check_size

Coloring = list[int]


def _refine(a: Graph, b: Graph, ca: Coloring, cb: Coloring) -> tuple[Coloring, Coloring]:
    while True:
        sig_a = [(ca[v], tuple(sorted(ca[w] for w in a.adjacency[v]))) for v in a.vertices()]
        sig_b = [(cb[v], tuple(sorted(cb[w] for w in b.adjacency[v]))) for v in b.vertices()]
        palette = {s: i for i, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        na = [palette[s] for s in sig_a]
        nb = [palette[s] for s in sig_b]
        if len(set(na)) == len(set(ca)) and len(set(nb)) == len(set(cb)):
            return na, nb
        ca, cb = na, nb


def _search(a: Graph, b: Graph, ca: Coloring, cb: Coloring) -> Optional[list[int]]:
    ca, cb = _refine(a, b, ca, cb)
    hist = Counter(ca)
    if hist != Counter(cb):
        return None
    if len(hist) == a.n:
        where = {c: v for v, c in enumerate(cb)}
        mapping = [where[c] for c in ca]
        for u, v in a.edges():
            if not b.has_edge(mapping[u], mapping[v]):
                return None
        return mapping
    # branch on the smallest non-singleton cell
    cell = min((c for c, k in hist.items() if k > 1), key=lambda c: (hist[c], c))
    u = next(v for v in a.vertices() if ca[v] == cell)
    fresh = max(hist) + 1
    ca2 = list(ca)
    ca2[u] = fresh
    for w in b.vertices():
        if cb[w] != cell:
            continue
        cb2 = list(cb)
        cb2[w] = fresh
        found = _search(a, b, ca2, cb2)
        if found is not None:
            return found
    return None


def find_isomorphism(a: Graph, b: Graph) -> Optional[list[int]]:
    """Vertex map ``a -> b`` preserving adjacency both ways, or ``None``."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return None
    check_size("isomorphism", a.n)
    if a.n == 0:
        return []
    return _search(a, b, [0] * a.n, [0] * b.n)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return find_isomorphism(a, b) is not None
