"""Corona, lexicographic, Cartesian and direct products.

Product vertices are numbered row-major: ``(u, w)`` gets id ``u * m + w``
where ``m = |V(h)|``. The corona keeps the copy of ``g`` first (ids ``0..n-1``)
and places the copy of ``h`` attached to ``u`` at ids ``n + u*m .. n + u*m + m - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Optional

from .graph import Graph, build_graph


class ProductKind(Enum):
    CORONA = "corona"
    LEXICOGRAPHIC = "lexicographic"
    CARTESIAN = "cartesian"
    DIRECT = "direct"


@dataclass(frozen=True)
class ProductVertexMap:
    """``pairs[i]`` is the factor pair behind product vertex ``i``.

    For the corona a vertex of the ``g`` copy is ``(u, None)`` and vertex ``w``
    of the copy attached to ``u`` is ``(u, w)``.
    """

    kind: ProductKind
    left_order: int
    right_order: int
    pairs: tuple[tuple[int, Optional[int]], ...]

    @cached_property
    def _index(self) -> dict[tuple[int, Optional[int]], int]:
        return {p: i for i, p in enumerate(self.pairs)}

    def index(self, u: int, w: Optional[int]) -> int:
        return self._index[(u, w)]

    def pair(self, i: int) -> tuple[int, Optional[int]]:
        return self.pairs[i]


def _grid_product(kind: ProductKind, g: Graph, h: Graph,
                  adjacent: Callable[[int, int, int, int], bool]) -> tuple[Graph, ProductVertexMap]:
    n, m = g.n, h.n
    pairs = tuple((u, w) for u in range(n) for w in range(m))
    edges = []
    for i, (u, w) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            u2, w2 = pairs[j]
            if adjacent(u, w, u2, w2):
                edges.append((i, j))
    labels = [f"({g.label(u)},{h.label(w)})" for u, w in pairs]
    return build_graph(n * m, edges, labels), ProductVertexMap(kind, n, m, pairs)


def corona(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    n, m = g.n, h.n
    pairs: list[tuple[int, Optional[int]]] = [(u, None) for u in range(n)]
    pairs += [(u, w) for u in range(n) for w in range(m)]
    edges = list(g.edges())
    for u in range(n):
        base = n + u * m
        edges.extend((base + a, base + b) for a, b in h.edges())
        edges.extend((u, base + w) for w in range(m))
    labels = [g.label(u) for u in range(n)]
    labels += [f"{g.label(u)}:{h.label(w)}" for u in range(n) for w in range(m)]
    return (build_graph(n + n * m, edges, labels),
            ProductVertexMap(ProductKind.CORONA, n, m, tuple(pairs)))


def lexicographic(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    return _grid_product(
        ProductKind.LEXICOGRAPHIC, g, h,
        lambda u, w, u2, w2: g.has_edge(u, u2) or (u == u2 and h.has_edge(w, w2)))


def cartesian(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    return _grid_product(
        ProductKind.CARTESIAN, g, h,
        lambda u, w, u2, w2: (u == u2 and h.has_edge(w, w2)) or (w == w2 and g.has_edge(u, u2)))


def direct(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    return _grid_product(
        ProductKind.DIRECT, g, h,
        lambda u, w, u2, w2: g.has_edge(u, u2) and h.has_edge(w, w2))


PRODUCTS: dict[str, Callable[[Graph, Graph], tuple[Graph, ProductVertexMap]]] = {
    "corona": corona,
    "lexicographic": lexicographic,
    "lex": lexicographic,
    "cartesian": cartesian,
    "direct": direct,
}
