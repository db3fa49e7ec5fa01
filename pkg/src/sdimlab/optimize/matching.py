"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from ..graph import Graph
from ..limits import check_size


def _augmenting_path_end(g: Graph, match: list[int], root: int) -> tuple[int, list[int]]:
    """BFS from a free root, contracting odd cycles. Returns (free end, parent) or (-1, ...)."""
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in g.adjacency[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximum matching as sorted ``(u, v)`` pairs with ``u < v``."""
    check_size("matching", g.n)
    match = [-1] * g.n
    # greedy warm start; augmentation fixes any suboptimal choice
    for u, v in g.edges():
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u
    for root in range(g.n):
        if match[root] != -1:
            continue
        end, parent = _augmenting_path_end(g, match, root)
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end], match[pv] = pv, end
            end = nxt
    return sorted((u, v) for u, v in enumerate(match) if v > u)


def max_matching(g: Graph) -> int:
    return len(maximum_matching(g))
