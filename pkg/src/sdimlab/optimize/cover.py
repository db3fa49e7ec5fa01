"""Exact minimum vertex cover by branch and bound with degree-0/1 kernel rules."""

from __future__ import annotations

from ..graph import Graph, connected_components
from ..limits import check_size


def _greedy_matching_size(adj: dict[int, set[int]]) -> int:
    used: set[int] = set()
    size = 0
    for u in sorted(adj, key=lambda v: len(adj[v])):
        if u in used:
            continue
        w = next((w for w in adj[u] if w not in used), None)
        if w is not None:
            used.update((u, w))
            size += 1
    return size


def _remove(adj: dict[int, set[int]], v: int) -> None:
    for w in adj.pop(v):
        adj[w].discard(v)


def _kernelize(adj: dict[int, set[int]], cover: list[int]) -> None:
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v not in adj:
                continue
            deg = len(adj[v])
            if deg == 0:
                del adj[v]
                changed = True
            elif deg == 1:
                (w,) = adj[v]
                cover.append(w)
                _remove(adj, w)
                changed = True


def _branch(adj: dict[int, set[int]], best: list[int] | None, taken: list[int]) -> list[int] | None:
    adj = {v: set(ws) for v, ws in adj.items()}
    taken = list(taken)
    _kernelize(adj, taken)
    if not adj:
        return taken if best is None or len(taken) < len(best) else best
    if best is not None and len(taken) + _greedy_matching_size(adj) >= len(best):
        return best
    v = max(adj, key=lambda u: (len(adj[u]), -u))
    nbrs = sorted(adj[v])
    # branch 1: v joins the cover
    with_v = {u: set(ws) for u, ws in adj.items()}
    _remove(with_v, v)
    best = _branch(with_v, best, taken + [v])
    # branch 2: v stays out, so all its neighbors join
    without_v = {u: set(ws) for u, ws in adj.items()}
    for w in nbrs:
        _remove(without_v, w)
    return _branch(without_v, best, taken + nbrs)


def minimum_vertex_cover(g: Graph) -> frozenset[int]:
    """One minimum vertex cover; connected components are solved independently."""
    active = [v for v in g.vertices() if g.degree(v) > 0]
    check_size("vertex_cover", len(active))
    cover: set[int] = set()
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        adj = {v: set(g.adjacency[v]) for v in comp}
        found = _branch(adj, None, [])
        assert found is not None
        cover.update(found)
    return frozenset(cover)


def vertex_cover_number(g: Graph) -> int:
    return len(minimum_vertex_cover(g))
