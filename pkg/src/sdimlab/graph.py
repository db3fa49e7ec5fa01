"""Immutable simple undirected graphs and the structural primitives built on them.

Vertices are the dense integers ``0..n-1``. Display labels are an optional
overlay and never take part in algorithms or in equality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DisconnectedInputError, InvalidGraphError
from .limits import check_size


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise InvalidGraphError("adjacency length does not match n")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidGraphError("labels length does not match n")

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adjsets[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def leaf_count(self) -> int:
        return sum(1 for nb in self.adjacency if len(nb) == 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def with_labels(self, labels: Optional[Sequence[str]]) -> Graph:
        return Graph(self.n, self.adjacency, tuple(labels) if labels is not None else None)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on ``vertices`` (re-indexed in ascending order) and the back-map."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        labels = [self.label(v) for v in keep]
        return build_graph(len(keep), edges, labels), keep

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]],
                labels: Optional[Sequence[str]] = None) -> Graph:
    """Build a normalized graph; duplicate edges collapse, self-loops are rejected."""
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge {pair!r} has a vertex id outside 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"edge {pair!r} is a self-loop")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs),
                 tuple(labels) if labels is not None else None)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    offset = 0
    for k, g in enumerate(graphs):
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        labels.extend(f"{k}.{g.label(v)}" for v in g.vertices())
        offset += g.n
    return build_graph(offset, edges, labels)


class _Unreachable:
    """Distance between vertices in different components.

    Deliberately supports no arithmetic or ordering, so it can never leak
    into a sum or a maximum unnoticed.
    """

    _instance: Optional[_Unreachable] = None

    def __new__(cls) -> _Unreachable:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple[tuple[object, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        d = self.dist[u][v]
        if d is UNREACHABLE:
            raise DisconnectedInputError(f"vertices {u} and {v} lie in different components")
        return d  # type: ignore[return-value]

    def reachable(self, u: int, v: int) -> bool:
        return self.dist[u][v] is not UNREACHABLE

    def raw(self, u: int, v: int) -> object:
        return self.dist[u][v]

    def diameter(self) -> int:
        """Largest finite distance (0 for graphs without edges)."""
        return max((d for row in self.dist for d in row if d is not UNREACHABLE), default=0)  # type: ignore[type-var]

    def is_connected(self) -> bool:
        return all(d is not UNREACHABLE for row in self.dist for d in row)


def bfs_distances(g: Graph, source: int) -> list[object]:
    dist: list[object] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du + 1  # type: ignore[operator]
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def require_connected(g: Graph, what: str = "operation") -> None:
    if not is_connected(g):
        raise DisconnectedInputError(f"{what} requires a connected graph")


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points via iterative low-link DFS."""
    require_connected(g, "cut_vertices")
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.adjacency[root]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append((w, u, iter(g.adjacency[w])))
                advanced = True
                break
            if w != parent:
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent != -1:
            low[parent] = min(low[parent], low[u])
            if parent != root and low[u] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


class TwinClassType(Enum):
    SINGLETON = 1
    TRUE_TWIN_CLIQUE = 2
    FALSE_TWIN_INDEPENDENT = 3


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[frozenset[int], ...]
    class_types: tuple[TwinClassType, ...]

    def _total(self, kind: TwinClassType) -> int:
        return sum(len(c) for c, t in zip(self.classes, self.class_types) if t is kind)

    @property
    def m1(self) -> int:
        return self._total(TwinClassType.SINGLETON)

    @property
    def m2(self) -> int:
        return self._total(TwinClassType.TRUE_TWIN_CLIQUE)

    @property
    def m3(self) -> int:
        return self._total(TwinClassType.FALSE_TWIN_INDEPENDENT)


def twin_partition(g: Graph) -> TwinPartition:
    """Classes of the relation: equal, or equal closed, or equal open neighborhoods.

    A vertex with a true twin cannot also have a false twin, so grouping by
    closed neighborhoods first and open neighborhoods second is exact.
    """
    by_closed: dict[frozenset[int], list[int]] = {}
    for v in g.vertices():
        by_closed.setdefault(g.closed_neighborhood(v), []).append(v)
    found: list[tuple[frozenset[int], TwinClassType]] = []
    rest = []
    for members in by_closed.values():
        if len(members) > 1:
            found.append((frozenset(members), TwinClassType.TRUE_TWIN_CLIQUE))
        else:
            rest.extend(members)
    by_open: dict[frozenset[int], list[int]] = {}
    for v in rest:
        by_open.setdefault(g.neighbor_set(v), []).append(v)
    for members in by_open.values():
        kind = TwinClassType.FALSE_TWIN_INDEPENDENT if len(members) > 1 else TwinClassType.SINGLETON
        found.append((frozenset(members), kind))
    found.sort(key=lambda item: min(item[0]))
    return TwinPartition(tuple(c for c, _ in found), tuple(t for _, t in found))


def has_true_twins(g: Graph) -> bool:
    return g.n > 0 and len({g.closed_neighborhood(v) for v in g.vertices()}) < g.n


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    return build_graph(g.n, edges, g.labels)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def hamiltonian_cycle(g: Graph) -> Optional[list[int]]:
    """A Hamiltonian cycle as a vertex list (closing edge implied), or ``None``.

    Exact backtracking: extends a path from vertex 0, trying neighbors with the
    fewest unvisited neighbors first, and prunes when some unvisited vertex can
    no longer get two path edges or the unvisited part splits.
    """
    require_connected(g, "hamiltonian_cycle")
    if g.n < 3:
        return None
    check_size("hamiltonian", g.n)
    if g.min_degree() < 2:
        return None
    n = g.n
    adj = g._adjsets
    visited = [False] * n
    path = [0]
    visited[0] = True

    def free_degree(v: int) -> int:
        return sum(1 for w in adj[v] if not visited[w])

    def viable(end: int) -> bool:
        unvisited = [v for v in range(n) if not visited[v]]
        if not unvisited:
            return True
        # each unvisited vertex needs two exits among unvisited + the two path ends
        for v in unvisited:
            exits = free_degree(v) + (end in adj[v]) + (0 in adj[v])
            if exits < 2:
                return False
        # the unvisited vertices must stay in one piece
        start = unvisited[0]
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not visited[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(unvisited)

    def extend(end: int) -> bool:
        if len(path) == n:
            return 0 in adj[end]
        candidates = sorted((w for w in adj[end] if not visited[w]), key=free_degree)
        for w in candidates:
            visited[w] = True
            path.append(w)
            if viable(w) and extend(w):
                return True
            path.pop()
            visited[w] = False
        return False

    return list(path) if extend(0) else None


@dataclass(frozen=True)
class ComponentProfile:
    vertices: frozenset[int]
    order: int
    is_regular: bool
    regular_degree: Optional[int]
    is_bipartite: bool


def component_profile(g: Graph) -> list[ComponentProfile]:
    profiles = []
    for comp in connected_components(g):
        sub, _ = g.induced_subgraph(comp)
        degs = set(sub.degrees())
        regular = len(degs) == 1
        profiles.append(ComponentProfile(
            vertices=comp,
            order=len(comp),
            is_regular=regular,
            regular_degree=degs.pop() if regular else None,
            is_bipartite=is_bipartite(sub),
        ))
    return profiles
