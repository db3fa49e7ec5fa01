"""Deterministic generators for the named graphs and gadget families.

Conventions worth knowing:

* ``wheel(n)`` has ``n`` vertices in total: hub 0 plus a rim cycle on ``n - 1``
  vertices. ``wheel(4)`` is ``K_4``.
* ``star(q)`` is ``K_{1,q}`` with centre 0.
* Random generators use ``random.Random(seed)`` (Mersenne Twister MT19937,
  integer seeding), drawing only through ``random()`` and ``randrange()``, whose
  output sequences are stable across CPython releases. ``PRNG_ALGORITHM``
  names this contract.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .errors import InvalidParamsError
from .graph import Graph, build_graph, is_connected

PRNG_ALGORITHM = "mt19937-python-random/v1"


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParamsError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty needs n >= 1")
    return build_graph(n, [])


def complete_multipartite(*parts: int) -> Graph:
    """Parts are laid out in the order given: part 0 takes the first ids."""
    _need(len(parts) >= 2 and all(p >= 1 for p in parts),
          "complete_multipartite needs at least two parts of size >= 1")
    owner = [k for k, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def star(q: int) -> Graph:
    _need(q >= 1, "star needs q >= 1")
    return build_graph(q + 1, [(0, i) for i in range(1, q + 1)])


def wheel(n: int) -> Graph:
    _need(n >= 4, "wheel needs n >= 4 (total vertex count)")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return build_graph(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def hypercube(d: int) -> Graph:
    _need(d >= 1, "hypercube needs d >= 1")
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def house() -> Graph:
    """Cycle 0-1-2-3-4-0 with chord 1-3: roof apex 2 on shoulders 1 and 3.

    Labels follow the usual drawing: apex u1, shoulders u2/u5, base u3/u4.
    """
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)],
                       ["u3", "u2", "u1", "u5", "u4"])


def fig5_example() -> Graph:
    """Six-vertex graph with one class of each twin type: u1~u3 true twins,
    u2~u4 false twins, u5 and u6 without twins. Vertex ``i`` is ``u{i+1}``."""
    named = [(1, 2), (2, 3), (1, 3), (3, 5), (1, 5), (1, 4), (3, 4), (5, 6)]
    return build_graph(6, [(a - 1, b - 1) for a, b in named], [f"u{i}" for i in range(1, 7)])


def _gq(q: int, with_pendants: bool) -> Graph:
    names: list[str] = []
    ids: dict[str, int] = {}

    def vertex(name: str) -> int:
        ids[name] = len(names)
        names.append(name)
        return ids[name]

    for letter in "abc":
        for i in range(q + 1):
            vertex(f"{letter}{i}")
    if with_pendants:
        for letter in "yz":
            for i in range(q + 1):
                vertex(f"{letter}{i}")
    vertex("x")
    edges = []
    for i in range(q + 1):
        edges += [(ids[f"a{i}"], ids[f"b{i}"]), (ids[f"b{i}"], ids[f"c{i}"])]
    for i in range(1, q + 1):
        edges += [(ids[f"{t}{i}"], ids[f"{t}0"]) for t in "abc"]
    if with_pendants:
        for i in range(q + 1):
            edges += [(ids[f"a{i}"], ids[f"y{i}"]), (ids[f"c{i}"], ids[f"z{i}"])]
    edges += [(ids["x"], ids["a0"]), (ids["x"], ids["c0"])]
    return build_graph(len(names), edges, names)


def gq_full(q: int) -> Graph:
    """Gadget on ``q + 1`` paths a_i b_i c_i with spokes to index 0, pendants
    y_i on a_i and z_i on c_i, and apex x on a_0 and c_0 (order 5q + 6)."""
    _need(q >= 1, "gq_full needs q >= 1")
    return _gq(q, with_pendants=True)


def gq_core(q: int) -> Graph:
    """``gq_full`` without the pendant vertices y_i, z_i (order 3q + 4)."""
    _need(q >= 2, "gq_core needs q >= 2")
    return _gq(q, with_pendants=False)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    _need(n >= 2, "random_tree needs n >= 2")
    rng = random.Random(seed)
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return build_graph(n, edges)


def random_connected(n: int, seed: int, p_percent: int = 50) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity by rejection."""
    _need(n >= 1, "random_connected needs n >= 1")
    _need(0 < p_percent <= 100, "edge probability percent must be in 1..100")
    rng = random.Random(seed)
    p = p_percent / 100
    while True:
        g = build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])
        if is_connected(g):
            return g


_GENERATORS: dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "complete_multipartite": complete_multipartite,
    "star": star,
    "wheel": wheel,
    "petersen": petersen,
    "hypercube": hypercube,
    "house": house,
    "fig5_example": fig5_example,
    "gq_full": gq_full,
    "gq_core": gq_core,
    "random_tree": random_tree,
    "random_connected": random_connected,
}

_ALIASES = {"gq": "gq_full", "multipartite": "complete_multipartite"}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse the inline syntax ``name:p1,p2,...`` (e.g. ``cycle:7``, ``gq:4``)."""
        name, _, rest = text.strip().partition(":")
        try:
            params = tuple(int(p) for p in rest.split(",") if p.strip())
        except ValueError:
            raise InvalidParamsError(f"non-integer parameter in {text!r}") from None
        return cls(_ALIASES.get(name, name), params)

    def __str__(self) -> str:
        return f"{self.name}:{','.join(map(str, self.params))}" if self.params else self.name


def family_names() -> list[str]:
    return sorted(_GENERATORS)


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    gen = _GENERATORS.get(spec.name)
    if gen is None:
        raise InvalidParamsError(f"unknown family {spec.name!r}; known: {', '.join(family_names())}")
    try:
        return gen(*spec.params)
    except TypeError as exc:
        raise InvalidParamsError(f"bad parameters for {spec.name}: {exc}") from None


NAMED_SMALL: tuple[str, ...] = (
    *(f"path:{n}" for n in range(2, 8)),
    *(f"cycle:{n}" for n in range(3, 9)),
    *(f"complete:{n}" for n in range(2, 6)),
    "complete_multipartite:1,2", "complete_multipartite:2,2", "complete_multipartite:1,1,3",
    "complete_multipartite:1,2,3", "complete_multipartite:2,3,3",
    *(f"star:{q}" for q in range(2, 6)),
    *(f"wheel:{n}" for n in range(4, 9)),
    "petersen", "hypercube:2", "hypercube:3", "house", "fig5_example",
    "gq_full:1", "gq_core:2",
)


def corpus(seed: int, count: int, max_n: int = 12) -> list[Graph]:
    """Named small graphs followed by ``count`` seeded random connected graphs.

    Orders of the random graphs are drawn uniformly from ``3..max_n``.
    """
    _need(max_n >= 3, "corpus needs max_n >= 3")
    graphs = [generate(s) for s in NAMED_SMALL]
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randrange(3, max_n + 1)
        graphs.append(random_connected(n, rng.randrange(2**31)))
    return graphs

