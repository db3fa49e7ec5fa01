"""Geodesic sets, mutually maximally distant pairs and the strong resolving graph."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import DifferentComponentsError, DisconnectedInputError, SameVertexError
from .graph import DistanceMatrix, Graph, all_pairs_distances, build_graph, is_connected


class SupportKind(Enum):
    S = "S"
    SL = "SL"


@dataclass(frozen=True)
class PairConstraint:
    pair: tuple[int, int]
    support: frozenset[int]
    kind: SupportKind


def _check_pair(d: DistanceMatrix, x: int, y: int) -> None:
    if x == y:
        raise SameVertexError(f"pair ({x}, {y}) is not two distinct vertices")
    if not d.reachable(x, y):
        raise DifferentComponentsError(f"vertices {x} and {y} lie in different components")


def s_set(g: Graph, d: DistanceMatrix, x: int, y: int) -> PairConstraint:
    """Vertices z with x on a y-z geodesic or y on an x-z geodesic."""
    _check_pair(d, x, y)
    dxy = d[x, y]
    row_x, row_y = d.dist[x], d.dist[y]
    support = []
    for z in g.vertices():
        dx, dy = row_x[z], row_y[z]
        if not d.reachable(x, z):
            continue
        if dxy + dx == dy or dxy + dy == dx:  # type: ignore[operator]
            support.append(z)
    return PairConstraint((x, y), frozenset(support), SupportKind.S)


def sl_set(g: Graph, d: DistanceMatrix, x: int, y: int) -> PairConstraint:
    """``s_set`` restricted to the closed neighborhoods of x and y."""
    s = s_set(g, d, x, y)
    near = g.closed_neighborhood(x) | g.closed_neighborhood(y)
    return PairConstraint((x, y), s.support & near, SupportKind.SL)


def is_maximally_distant(g: Graph, d: DistanceMatrix, u: int, v: int) -> bool:
    """True when no neighbor of u is farther from v than u is."""
    duv = d[u, v]
    return all(d[w, v] <= duv for w in g.adjacency[u])


def is_mmd(g: Graph, d: DistanceMatrix, u: int, v: int) -> bool:
    _check_pair(d, u, v)
    return is_maximally_distant(g, d, u, v) and is_maximally_distant(g, d, v, u)


def mmd_pairs(g: Graph, d: Optional[DistanceMatrix] = None) -> list[tuple[int, int]]:
    """All MMD pairs ``(u, v)``, ``u < v``, among mutually reachable vertices."""
    d = d or all_pairs_distances(g)
    return [(u, v) for u in g.vertices() for v in range(u + 1, g.n)
            if d.reachable(u, v) and is_mmd(g, d, u, v)]


@dataclass(frozen=True)
class StrongResolvingGraph:
    """The MMD graph on the boundary set, re-indexed, with a back-map.

    Vertex ``i`` of ``graph`` is base vertex ``boundary[i]``.
    """

    boundary: tuple[int, ...]
    graph: Graph

    def base_vertex(self, i: int) -> int:
        return self.boundary[i]

    def base_edges(self) -> list[tuple[int, int]]:
        return [(self.boundary[u], self.boundary[v]) for u, v in self.graph.edges()]

    def to_dict(self) -> dict[str, list]:
        """``{"boundary": [base ids], "edges": [[base id, base id], ...]}``."""
        return {"boundary": list(self.boundary), "edges": [list(e) for e in self.base_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def strong_resolving_graph(g: Graph, d: Optional[DistanceMatrix] = None) -> StrongResolvingGraph:
    if not is_connected(g):
        raise DisconnectedInputError("the strong resolving graph is defined for connected graphs")
    d = d or all_pairs_distances(g)
    pairs = mmd_pairs(g, d)
    boundary = tuple(sorted({v for p in pairs for v in p}))
    index = {v: i for i, v in enumerate(boundary)}
    sr = build_graph(len(boundary), [(index[u], index[v]) for u, v in pairs],
                     [g.label(v) for v in boundary])
    return StrongResolvingGraph(boundary, sr)


def star_closure(h: Graph) -> Graph:
    """Join pairs at distance at least 2 (or in different components) and true twins."""
    d = all_pairs_distances(h)
    edges = []
    for u in h.vertices():
        for v in range(u + 1, h.n):
            far = not d.reachable(u, v) or d[u, v] >= 2
            if far or h.closed_neighborhood(u) == h.closed_neighborhood(v):
                edges.append((u, v))
    return build_graph(h.n, edges, h.labels)


def drop_isolated(h: Graph) -> Graph:
    sub, _ = h.induced_subgraph(v for v in h.vertices() if h.degree(v) > 0)
    return sub
