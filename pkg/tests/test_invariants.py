from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest
from networkx.algorithms import isomorphism as nx_iso
from hypothesis import given, settings

import oracles
from conftest import connected_graphs, graphs
from sdimlab import families as F
from sdimlab.errors import DisconnectedInputError, InvalidGraphError
from sdimlab.graph import (
    all_pairs_distances, build_graph, complement, component_profile, cut_vertices,
    hamiltonian_cycle, is_bipartite, is_connected,
)
from sdimlab.optimize import (
    fractional_vertex_cover, invariant_report, max_matching, max_weight_on_optimal_face,
    resolving_problem, sdim, sdim_f, sdim_f_reduced, sl_f,
)
from sdimlab.isomorphism import is_isomorphic
from sdimlab.products import corona, direct
from sdimlab.resolving import s_set, sl_set, strong_resolving_graph


def _brute_sdim_f(g, locating=False):
    d = oracles.floyd_warshall(g)
    sets = []
    for x in g.vertices():
        for y in range(x + 1, g.n):
            s = oracles.s_support(d, x, y)
            if locating:
                s &= set(g.closed_neighborhood(x) | g.closed_neighborhood(y))
            sets.append(s)
    return oracles.covering_lp_by_vertices(g.n, sets)


class TestSdimF:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_paths(self, n):
        assert sdim_f(F.path(n))[0] == 1

    def test_petersen(self):
        assert sdim_f(F.petersen())[0] == 5

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_gadget(self, q):
        assert sdim_f(F.gq_full(q))[0] == q + 2

    def test_disconnected(self):
        with pytest.raises(DisconnectedInputError):
            sdim_f(build_graph(4, [(0, 1), (2, 3)]))

    def test_single_vertex(self):
        with pytest.raises(InvalidGraphError):
            sdim_f(F.path(1))

    @pytest.mark.parametrize("g", [F.path(4), F.cycle(5), F.star(3), F.house(), F.complete_multipartite(1, 2, 2)])
    def test_vertex_enumeration_oracle(self, g):
        assert sdim_f(g)[0] == _brute_sdim_f(g)

    @settings(max_examples=25)
    @given(connected_graphs(min_n=2, max_n=4))
    def test_oracle_small(self, g):
        assert sdim_f(g)[0] == sdim_f(g, prune=False)[0] == _brute_sdim_f(g)

    @given(connected_graphs(min_n=2, max_n=9))
    def test_witness_valid(self, g):
        value, w = sdim_f(g, prune=False)
        d = all_pairs_distances(g)
        assert sum(w) == value
        assert all(0 <= x <= 1 for x in w)
        for x in g.vertices():
            for y in range(x + 1, g.n):
                assert sum(w[z] for z in s_set(g, d, x, y).support) >= 1


class TestReduced:
    @pytest.mark.parametrize("n", range(3, 11))
    def test_cycles(self, n):
        assert sdim_f_reduced(F.cycle(n)) == Fraction(n, 2)

    def test_trees(self):
        for seed in range(8):
            t = F.random_tree(11, seed)
            assert sdim_f_reduced(t) == Fraction(t.leaf_count(), 2)

    def test_w4(self):
        assert sdim_f_reduced(F.wheel(4)) == 2

    def test_lifted_witness_lives_on_boundary(self):
        g = F.gq_full(2)
        value, w = sdim_f(g, reduced=True)
        boundary = set(strong_resolving_graph(g).boundary)
        assert value == 4 and all(w[v] == 0 for v in g.vertices() if v not in boundary)

    @given(connected_graphs(min_n=2, max_n=10))
    def test_full_equals_reduced(self, g):
        sr = strong_resolving_graph(g)
        assert sdim_f(g, prune=False)[0] == sdim_f_reduced(g) == fractional_vertex_cover(sr.graph)


class TestSlF:
    def test_diameter_two(self):
        for g in (F.petersen(), F.wheel(7), F.house(), F.complete_multipartite(2, 2, 3)):
            assert sl_f(g) == sdim_f(g)[0]

    def test_p3(self):
        assert sl_f(F.path(3)) == 1

    def test_p5(self):
        # vertex-enumeration oracle gives 3/2
        assert _brute_sdim_f(F.path(5), locating=True) == Fraction(3, 2)
        assert sl_f(F.path(5)) == Fraction(3, 2)

    def test_disconnected_refused(self):
        with pytest.raises(DisconnectedInputError):
            sl_f(build_graph(3, [(0, 1)]))

    @given(connected_graphs(min_n=2, max_n=8))
    def test_dominates_sdim_f(self, g):
        assert sl_f(g) >= sdim_f(g)[0]
        if all_pairs_distances(g).diameter() <= 2:
            assert sl_f(g) == sdim_f(g)[0]

    @settings(max_examples=25)
    @given(connected_graphs(min_n=2, max_n=4))
    def test_oracle_small(self, g):
        assert sl_f(g) == _brute_sdim_f(g, locating=True)


class TestSdim:
    @pytest.mark.parametrize("q", [1, 2, 3, 4])
    def test_gadget(self, q):
        assert sdim(F.gq_full(q)) == 2 * q + 2

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_odd_cycle(self, k):
        assert sdim(F.cycle(2 * k + 1)) == k + 1

    def test_trees(self):
        for seed in range(6):
            t = F.random_tree(10, seed)
            assert sdim(t) == t.leaf_count() - 1


class TestOptimalFace:
    def test_p2_leaf(self):
        assert max_weight_on_optimal_face(F.path(2), 0) == 1

    def test_star_centre(self):
        assert max_weight_on_optimal_face(F.star(3), 0) == 0

    def test_cycle_vertex(self):
        # C_4: G_SR = 2K_2 so one vertex of an antipodal pair may carry full weight
        assert max_weight_on_optimal_face(F.cycle(4), 0) == 1
        assert max_weight_on_optimal_face(F.cycle(5), 0) == Fraction(1, 2)

    @settings(max_examples=40)
    @given(connected_graphs(min_n=3, max_n=8))
    def test_cut_vertices_get_zero(self, g):
        opt = sdim_f(g)[0]
        for v in cut_vertices(g):
            assert max_weight_on_optimal_face(g, v, opt) == 0


class TestReport:
    def test_gadget(self):
        r = invariant_report(F.gq_full(4))
        assert (r.boundary_size, r.sdim, r.sdim_f) == (15, 10, 6)
        assert r.sr_matching_number == 6
        assert sorted(c.order for c in r.sr_components) == [5, 10]

    def test_c6(self):
        r = invariant_report(F.cycle(6))
        assert (r.boundary_size, r.sdim, r.sdim_f) == (6, 3, 3)
        assert max_matching(strong_resolving_graph(F.cycle(6)).graph) == 3

    def test_p7(self):
        r = invariant_report(F.path(7))
        assert (r.boundary_size, r.sdim, r.sdim_f) == (2, 1, 1)
        assert (r.leaves, r.diameter) == (2, 6)

    def test_reduced_flag(self):
        assert invariant_report(F.petersen(), reduced=True) == invariant_report(F.petersen())

    @given(connected_graphs(min_n=2, max_n=10))
    def test_sandwich_and_consequences(self, g):
        r = invariant_report(g)
        lower = max(Fraction(r.sr_matching_number), Fraction(r.sdim, 2), Fraction(1))
        upper = min(Fraction(r.boundary_size, 2), Fraction(r.sdim))
        assert lower <= r.sdim_f <= upper
        sr = strong_resolving_graph(g).graph
        if is_bipartite(sr):
            assert r.sdim_f == r.sdim
        if all(p.is_regular for p in component_profile(sr)):
            assert r.sdim_f == Fraction(r.boundary_size, 2)
        if sr.n >= 3 and is_connected(sr) and hamiltonian_cycle(sr) is not None:
            assert r.sdim_f == Fraction(r.boundary_size, 2)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def _embedding(small, big):
    """An injective edge-preserving map small -> big, found by networkx and re-checked here."""
    matcher = nx_iso.GraphMatcher(_nx(big), _nx(small))
    found = next(matcher.subgraph_monomorphisms_iter(), None)
    if found is None:
        return None
    inv = {s: b for b, s in found.items()}
    mapping = [inv[v] for v in range(small.n)]
    assert len(set(mapping)) == small.n
    assert all(big.has_edge(mapping[u], mapping[v]) for u, v in small.edges())
    return mapping


class TestMonotonicity:
    @pytest.mark.parametrize("m", [5, 6, 7])
    def test_cycle_into_k1_corona_path(self, m):
        c, g = F.cycle(m), corona(F.complete(1), F.path(m))[0]
        assert _embedding(strong_resolving_graph(c).graph, strong_resolving_graph(g).graph) is not None
        assert sdim_f(c)[0] <= sdim_f(g)[0] == Fraction(m, 2)

    def test_house_into_c5(self):
        sr_h = strong_resolving_graph(F.house()).graph
        sr_c = strong_resolving_graph(F.cycle(5)).graph
        assert _embedding(sr_h, sr_c) is not None
        assert sdim_f(F.house())[0] == 2 < sdim_f(F.cycle(5))[0]

    def test_trees_by_leaf_count(self):
        trees = sorted((F.random_tree(9, s) for s in range(6)), key=lambda t: t.leaf_count())
        for small, big in zip(trees, trees[1:]):
            assert _embedding(strong_resolving_graph(small).graph, strong_resolving_graph(big).graph)
            assert sdim_f(small)[0] <= sdim_f(big)[0]

    @settings(max_examples=40)
    @given(connected_graphs(min_n=2, max_n=7), connected_graphs(min_n=2, max_n=7))
    def test_random_pairs(self, a, b):
        if _embedding(strong_resolving_graph(a).graph, strong_resolving_graph(b).graph) is not None:
            assert sdim_f(a)[0] <= sdim_f(b)[0]


@given(graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=5))
def test_direct_product_matching_bounds(a, b):
    assert max_matching(direct(a, b)[0]) >= 2 * max_matching(a) * max_matching(b)


@given(graphs(min_n=2, max_n=7))
def test_direct_with_clique_matching_bound(a):
    for n in (2, 3, 4):
        assert max_matching(direct(a, F.complete(n))[0]) >= n * max_matching(a)


@settings(max_examples=30)
@given(connected_graphs(min_n=2, max_n=5), graphs(min_n=1, max_n=4))
def test_corona_law(g, h):
    assert sdim_f(corona(g, h)[0])[0] == Fraction(g.n * h.n, 2)


def test_resolving_problem_shapes():
    g = F.cycle(5)
    assert len(resolving_problem(g).constraints) == 10
    d = all_pairs_distances(g)
    sl = resolving_problem(g, locating=True).constraints
    assert sl[0] == sl_set(g, d, 0, 1).support


def test_k1_corona_disconnected_example_value():
    h1 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 3), (3, 5), (5, 1), (1, 4)]
    g = corona(F.complete(1), build_graph(7, h1))[0]
    assert sdim_f(g)[0] == sdim(g) == 3


def test_k1_corona_path_sr_is_complement():
    for m in (4, 5, 6):
        sr = strong_resolving_graph(corona(F.complete(1), F.path(m))[0])
        assert is_isomorphic(sr.graph, complement(F.path(m)))
