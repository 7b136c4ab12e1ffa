"""Seeded random hypernetworks for randomized verification runs."""

from __future__ import annotations

import random
from itertools import combinations

from .hypernet import Hyperedge, Hypernetwork, Hypervertex, _edge


def random_hypernetwork(
    rng: random.Random,
    max_nodes: int = 12,
    max_hypervertices: int = 6,
    max_hypervertex_size: int = 5,
    edge_probability: float = 0.4,
) -> Hypernetwork:
    """Draw a small undirected hypernetwork.

    Hypervertex node sets may overlap or coincide; hyperedges are drawn
    independently over distinct hypervertex pairs. Deterministic for a
    given rng state.
    """
    n = rng.randint(1, max_nodes)
    nodes = [f"v{i}" for i in range(n)]
    n_hv = rng.randint(0, max_hypervertices)
    hvs = []
    for i in range(n_hv):
        size = rng.randint(1, min(n, max_hypervertex_size))
        members = rng.sample(nodes, size)
        hvs.append(Hypervertex(f"V{i}", frozenset(members)))
    edges: list[Hyperedge] = []
    eid = 0
    for a, b in combinations(range(n_hv), 2):
        if rng.random() < edge_probability:
            eid += 1
            edges.append(_edge(f"E{eid}", f"V{a}", f"V{b}", directed=False))
    return Hypernetwork(frozenset(nodes), tuple(hvs), tuple(edges), directed=False)
