"""Exact fractional strong metric dimension of graphs and graph products."""

from .graph import (
    UNREACHABLE, DistanceMatrix, Graph, TwinPartition, all_pairs_distances, build_graph,
    complement, component_profile, connected_components, cut_vertices, hamiltonian_cycle,
    twin_partition,
)
from .isomorphism import is_isomorphic
from .optimize import invariant_report, max_matching, sdim, sdim_f, sdim_f_reduced, sl_f
from .products import cartesian, corona, direct, lexicographic
from .resolving import drop_isolated, star_closure, strong_resolving_graph

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE", "DistanceMatrix", "Graph", "TwinPartition", "all_pairs_distances", "build_graph",
    "complement", "component_profile", "connected_components", "cut_vertices", "hamiltonian_cycle",
    "twin_partition", "is_isomorphic", "invariant_report", "max_matching", "sdim", "sdim_f",
    "sdim_f_reduced", "sl_f", "cartesian", "corona", "direct", "lexicographic", "drop_isolated",
    "star_closure", "strong_resolving_graph",
]
