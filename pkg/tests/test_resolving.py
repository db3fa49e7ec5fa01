from __future__ import annotations

import pytest
from hypothesis import given

import oracles
from conftest import connected_graphs, graphs
from sdimlab import families as F
from sdimlab.errors import DifferentComponentsError, DisconnectedInputError, SameVertexError
from sdimlab.graph import (
    all_pairs_distances, build_graph, disjoint_union, has_true_twins, is_connected,
)
from sdimlab.isomorphism import is_isomorphic
from sdimlab.products import cartesian, direct, lexicographic
from sdimlab.resolving import (
    SupportKind, drop_isolated, is_mmd, mmd_pairs, s_set, sl_set, star_closure,
    strong_resolving_graph,
)


class TestSSet:
    def test_mmd_pair_support_is_the_pair(self):
        g = F.path(5)
        d = all_pairs_distances(g)
        assert s_set(g, d, 0, 4).support == {0, 4}

    def test_path_interior_pair(self):
        g = F.path(4)
        c = s_set(g, all_pairs_distances(g), 1, 2)
        assert c.support == {0, 1, 2, 3} and c.kind is SupportKind.S

    def test_c5_adjacent_pair(self):
        # brute-force geodesic check gives {4, 0, 1, 2}
        g = F.cycle(5)
        ref = oracles.s_support(oracles.floyd_warshall(g), 0, 1)
        assert ref == {4, 0, 1, 2}
        assert s_set(g, all_pairs_distances(g), 0, 1).support == ref

    def test_errors(self):
        g = disjoint_union(F.path(2), F.path(2))
        d = all_pairs_distances(g)
        with pytest.raises(SameVertexError):
            s_set(g, d, 1, 1)
        with pytest.raises(DifferentComponentsError):
            s_set(g, d, 0, 2)
        with pytest.raises(DifferentComponentsError):
            is_mmd(g, d, 0, 3)

    @given(connected_graphs())
    def test_matches_oracle(self, g):
        d = all_pairs_distances(g)
        ref = oracles.floyd_warshall(g)
        for x in g.vertices():
            for y in range(x + 1, g.n):
                c = s_set(g, d, x, y)
                assert c.support == oracles.s_support(ref, x, y)
                assert {x, y} <= c.support


class TestSLSet:
    def test_diameter_two_equal(self):
        for g in (F.petersen(), F.wheel(6), F.complete_multipartite(2, 3), F.path(3)):
            d = all_pairs_distances(g)
            for x in g.vertices():
                for y in range(x + 1, g.n):
                    assert sl_set(g, d, x, y).support == s_set(g, d, x, y).support

    def test_true_twins(self):
        g = F.complete(4)
        assert sl_set(g, all_pairs_distances(g), 0, 3).support == {0, 3}

    @given(connected_graphs())
    def test_adjacent_pair_formula(self, g):
        d = all_pairs_distances(g)
        for x, y in g.edges():
            sym = g.neighbor_set(x) ^ g.neighbor_set(y)
            assert sl_set(g, d, x, y).support == {x, y} | sym

    @given(connected_graphs())
    def test_containment(self, g):
        d = all_pairs_distances(g)
        for x in g.vertices():
            for y in range(x + 1, g.n):
                sl = sl_set(g, d, x, y)
                assert sl.kind is SupportKind.SL
                assert {x, y} <= sl.support <= s_set(g, d, x, y).support
                assert sl.support <= g.closed_neighborhood(x) | g.closed_neighborhood(y)


class TestMMD:
    def test_tree_leaves(self):
        g = F.random_tree(9, 3)
        d = all_pairs_distances(g)
        leaves = [v for v in g.vertices() if g.degree(v) == 1]
        assert all(is_mmd(g, d, a, b) for a in leaves for b in leaves if a != b)

    def test_true_twins(self):
        g = F.fig5_example()
        assert is_mmd(g, all_pairs_distances(g), 0, 2)

    def test_path(self):
        g = F.path(4)
        d = all_pairs_distances(g)
        assert is_mmd(g, d, 0, 3) and not is_mmd(g, d, 0, 2)

    @given(connected_graphs())
    def test_symmetric_and_matches_oracle(self, g):
        d = all_pairs_distances(g)
        ref = oracles.floyd_warshall(g)
        for u in g.vertices():
            for v in g.vertices():
                if u != v:
                    assert is_mmd(g, d, u, v) == is_mmd(g, d, v, u) == oracles.mmd(g, ref, u, v)

    @given(connected_graphs(min_n=2))
    def test_mmd_support_is_pair(self, g):
        d = all_pairs_distances(g)
        for u, v in mmd_pairs(g, d):
            assert s_set(g, d, u, v).support == {u, v}


class TestStrongResolvingGraph:
    def test_house_is_p5(self):
        sr = strong_resolving_graph(F.house())
        assert is_isomorphic(sr.graph, F.path(5))
        # path u5 u3 u1 u4 u2 in the drawing's names
        names = {frozenset((sr.graph.label(a), sr.graph.label(b))) for a, b in sr.graph.edges()}
        assert names == {frozenset(p) for p in (("u5", "u3"), ("u3", "u1"), ("u1", "u4"), ("u4", "u2"))}

    def test_gadget(self):
        sr = strong_resolving_graph(F.gq_full(4))
        assert len(sr.boundary) == 15
        assert is_isomorphic(sr.graph, disjoint_union(F.complete(10), F.star(4)))

    def test_hypercube(self):
        sr = strong_resolving_graph(F.hypercube(3))
        assert is_isomorphic(sr.graph, disjoint_union(*[F.complete(2)] * 4))
        assert all(u ^ v == 7 for u, v in sr.base_edges())

    def test_disconnected_refused(self):
        with pytest.raises(DisconnectedInputError):
            strong_resolving_graph(build_graph(3, [(0, 1)]))

    def test_json_shape(self):
        sr = strong_resolving_graph(F.path(4))
        assert sr.to_dict() == {"boundary": [0, 3], "edges": [[0, 3]]}

    @given(connected_graphs(min_n=2))
    def test_invariants(self, g):
        sr = strong_resolving_graph(g)
        d = all_pairs_distances(g)
        assert sr.graph.min_degree() >= 1
        assert set(sr.base_edges()) == set(mmd_pairs(g, d))
        assert set(sr.boundary) == {v for p in mmd_pairs(g, d) for v in p}

    def test_tree_boundary_is_leaves(self):
        for seed in range(10):
            t = F.random_tree(10, seed)
            sr = strong_resolving_graph(t)
            assert set(sr.boundary) == {v for v in t.vertices() if t.degree(v) == 1}
            k = t.leaf_count()
            assert sr.graph.edge_count == k * (k - 1) // 2


class TestStarClosure:
    def test_p3(self):
        assert is_isomorphic(star_closure(F.path(3)), disjoint_union(F.complete(2), F.complete(1)))

    def test_house(self):
        assert is_isomorphic(star_closure(F.house()), F.path(5))

    def test_complete(self):
        assert star_closure(F.complete(5)) == F.complete(5)

    def test_disconnected_pairs_join(self):
        assert star_closure(build_graph(3, [(0, 1)])).edges() == [(0, 1), (0, 2), (1, 2)]


class TestDropIsolated:
    def test_k2_k1(self):
        assert drop_isolated(disjoint_union(F.complete(2), F.complete(1))) == F.complete(2)

    def test_p3_star(self):
        assert drop_isolated(star_closure(F.path(3))) == F.complete(2)

    def test_identity(self):
        assert drop_isolated(F.cycle(5)) == F.cycle(5)


def _lex_mmd_case(g, h, dg, dh, x, y):
    """Case analysis for MMD in G[H] from the factors alone."""
    (x1, x2), (y1, y2) = x, y
    if x1 == y1:
        far = not dh.reachable(x2, y2) or dh[x2, y2] >= 2
        return far or h.closed_neighborhood(x2) == h.closed_neighborhood(y2)
    if g.closed_neighborhood(x1) != g.closed_neighborhood(y1):
        return is_mmd(g, dg, x1, y1)
    return h.degree(x2) == h.degree(y2) == h.n - 1


@given(connected_graphs(min_n=2, max_n=5), graphs(min_n=2, max_n=4))
def test_lexicographic_mmd_case_analysis(g, h):
    p, vmap = lexicographic(g, h)
    dp, dg, dh = all_pairs_distances(p), all_pairs_distances(g), all_pairs_distances(h)
    for i in p.vertices():
        for j in range(i + 1, p.n):
            assert is_mmd(p, dp, i, j) == _lex_mmd_case(g, h, dg, dh, vmap.pair(i), vmap.pair(j))


@given(connected_graphs(min_n=2, max_n=5), graphs(min_n=2, max_n=4))
def test_lexicographic_structure(g, h):
    if has_true_twins(g):
        return
    sr_g = strong_resolving_graph(g)
    hs = star_closure(h)
    pieces = [lexicographic(sr_g.graph, hs)[0]]
    pieces += [drop_isolated(hs)] * (g.n - len(sr_g.boundary))
    lhs = strong_resolving_graph(lexicographic(g, h)[0]).graph
    assert is_isomorphic(lhs, disjoint_union(*pieces))


@given(connected_graphs(min_n=2, max_n=5), connected_graphs(min_n=2, max_n=5))
def test_cartesian_structure(g, h):
    lhs = strong_resolving_graph(cartesian(g, h)[0]).graph
    rhs = direct(strong_resolving_graph(g).graph, strong_resolving_graph(h).graph)[0]
    assert is_isomorphic(lhs, rhs)


def test_lexicographic_with_edgeless_right_factor_is_connected():
    assert is_connected(lexicographic(F.path(2), build_graph(2, []))[0])
