from __future__ import annotations

import os
from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sdimlab.graph import Graph, build_graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    """A random spanning tree plus a random subset of the remaining pairs."""
    n = draw(st.integers(min_n, max_n))
    tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    tree_set = {frozenset(e) for e in tree}
    rest = [p for p in combinations(range(n), 2) if frozenset(p) not in tree_set]
    mask = draw(st.lists(st.booleans(), min_size=len(rest), max_size=len(rest)))
    return build_graph(n, tree + [p for p, keep in zip(rest, mask) if keep])
