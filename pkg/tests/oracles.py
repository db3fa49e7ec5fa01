"""Brute-force reference implementations used only by the tests.

None of these share code with the library beyond the ``Graph`` container;
they are deliberately naive so that agreement is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

from sdimlab.graph import Graph

INF = None


def floyd_warshall(g: Graph) -> list[list[Optional[int]]]:
    n = g.n
    d: list[list[Optional[int]]] = [[0 if i == j else None for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                a, b = d[i][k], d[k][j]
                if a is not None and b is not None and (d[i][j] is None or a + b < d[i][j]):
                    d[i][j] = a + b
    return d


def reachable_set(g: Graph, removed: frozenset[int] = frozenset()) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in removed or s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in removed and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def cut_vertices(g: Graph) -> set[int]:
    base = len(reachable_set(g))
    return {v for v in range(g.n) if len(reachable_set(g, frozenset({v}))) > base}


def isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    eb = {frozenset(e) for e in b.edges()}
    return any(all(frozenset((p[u], p[v])) in eb for u, v in a.edges())
               for p in permutations(range(a.n)))


def matching_number(g: Graph) -> int:
    edges = g.edges()
    best = 0

    def grow(i: int, used: set[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                grow(j + 1, used | {u, v}, size + 1)

    grow(0, set(), 0)
    return best


def vertex_cover_number(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n + 1):
        for c in combinations(range(g.n), k):
            cs = set(c)
            if all(u in cs or v in cs for u, v in edges):
                return k
    raise AssertionError("unreachable")


def mmd(g: Graph, d: list[list[Optional[int]]], u: int, v: int) -> bool:
    duv = d[u][v]
    return (all(d[w][v] <= duv for w in g.adjacency[u])
            and all(d[w][u] <= duv for w in g.adjacency[v]))


def s_support(d: list[list[Optional[int]]], x: int, y: int) -> set[int]:
    """Vertices z with x on a y-z geodesic or y on an x-z geodesic."""
    n = len(d)
    return {z for z in range(n)
            if d[y][x] + d[x][z] == d[y][z] or d[x][y] + d[y][z] == d[x][z]}


def twin_classes(g: Graph) -> list[set[int]]:
    """Classes of the relation ``N[u] = N[v]`` or ``N(u) = N(v)``."""
    def op(v: int) -> frozenset[int]:
        return frozenset(g.adjacency[v])

    classes: list[set[int]] = []
    for v in range(g.n):
        for c in classes:
            w = next(iter(c))
            if op(v) | {v} == op(w) | {w} or op(v) == op(w):
                c.add(v)
                break
        else:
            classes.append({v})
    return classes


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Gauss-Jordan on a square system; ``None`` when singular."""
    n = len(rows)
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def covering_lp_by_vertices(n: int, constraints: list[set[int]]) -> Fraction:
    """min sum(x) over {A x >= 1, 0 <= x <= 1}, by enumerating every vertex."""
    one, zero = Fraction(1), Fraction(0)
    halfspaces = [([one if i in c else zero for i in range(n)], one) for c in constraints]
    halfspaces += [([one if i == j else zero for i in range(n)], zero) for j in range(n)]
    halfspaces += [([one if i == j else zero for i in range(n)], one) for j in range(n)]
    best: Optional[Fraction] = None
    for chosen in combinations(range(len(halfspaces)), n):
        x = _solve([halfspaces[i][0] for i in chosen], [halfspaces[i][1] for i in chosen])
        if x is None:
            continue
        if any(v < 0 or v > 1 for v in x):
            continue
        if any(sum(x[i] for i in c) < 1 for c in constraints):
            continue
        value = sum(x, zero)
        if best is None or value < best:
            best = value
    assert best is not None
    return best
