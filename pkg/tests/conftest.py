from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from hyperforman import (
    Hypernetwork,
    Hypervertex,
    SimplicialComplex,
    order_complex,
    poset_from_hypernetwork,
)
from hyperforman.hypernet import _edge

CORPUS_DIR = Path(__file__).resolve().parents[1] / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


def build(labels, faces) -> SimplicialComplex:
    return SimplicialComplex.from_faces(labels, faces)


def path_complex(n: int) -> SimplicialComplex:
    return build([f"p{i}" for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def cycle_complex(n: int) -> SimplicialComplex:
    return build(
        [f"c{i}" for i in range(n)],
        [(i, (i + 1) % n) for i in range(n)],
    )


def torus_complex() -> SimplicialComplex:
    # minimal 7-vertex triangulated torus: two triangle orbits mod 7
    tris = set()
    for i in range(7):
        tris.add(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        tris.add(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    assert len(tris) == 14
    return build([f"t{i}" for i in range(7)], tris)


def example_order_complex() -> SimplicialComplex:
    # order complex of the running example's poset, transcribed by hand:
    # vertices 0..5 = {a},{b},{c},{a,b},{b,c},{a,b,c}
    labels = ["{a}", "{b}", "{c}", "{a,b}", "{b,c}", "{a,b,c}"]
    triangles = [(0, 3, 5), (1, 3, 5), (1, 4, 5), (2, 4, 5)]
    return build(labels, triangles)


def corpus_complexes() -> dict[str, SimplicialComplex]:
    """The bundled complex corpus: every shape the acceptance gate names."""
    triangle = build(["a", "b", "c"], [(0, 1, 2)])
    edge = build(["a", "b"], [(0, 1)])
    tetra = build(
        ["a", "b", "c", "d"],
        [t for t in combinations(range(4), 3)],
    )
    star = build(["hub", "x", "y", "z"], [(0, 1), (0, 2), (0, 3)])
    pendant = build(["a", "b", "c", "d"], [(0, 1, 2), (0, 3)])
    from helpers import disjoint_union

    return {
        "single_edge": edge,
        "path3": path_complex(3),
        "path5": path_complex(5),
        "cycle4": cycle_complex(4),
        "cycle5": cycle_complex(5),
        "star_k13": star,
        "triangle": triangle,
        "tetrahedron": tetra,
        "torus7": torus_complex(),
        "example_order": example_order_complex(),
        "pendant_triangle": pendant,
        "two_component_mixed": disjoint_union(triangle, edge),
        "two_component_cycles": disjoint_union(cycle_complex(4), path_complex(3)),
        "isolated_vertices": build(["u", "v", "w"], []),
    }


@pytest.fixture(scope="session")
def corpus() -> dict[str, SimplicialComplex]:
    return corpus_complexes()


def example_network() -> Hypernetwork:
    return Hypernetwork(
        nodes=frozenset({"a", "b", "c"}),
        hypervertices=(
            Hypervertex("V1", frozenset({"a", "b"})),
            Hypervertex("V2", frozenset({"b", "c"})),
        ),
        hyperedges=(_edge("E12", "V1", "V2", False),),
    )


@pytest.fixture
def example_net() -> Hypernetwork:
    return example_network()


# -- hypothesis strategies ----------------------------------------------------


@st.composite
def hypernetworks(draw, max_nodes=7, max_hypervertices=4, covered_only=False):
    n = draw(st.integers(1, max_nodes))
    nodes = [f"n{i}" for i in range(n)]
    n_hv = draw(st.integers(0, max_hypervertices))
    hvs = []
    for i in range(n_hv):
        members = draw(
            st.sets(st.sampled_from(nodes), min_size=1, max_size=min(n, 4))
        )
        hvs.append(Hypervertex(f"V{i}", frozenset(members)))
    pairs = list(combinations(range(n_hv), 2))
    chosen = draw(
        st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
        if pairs
        else st.just([])
    )
    edges = tuple(
        _edge(f"E{k + 1}", f"V{a}", f"V{b}", False)
        for k, (a, b) in enumerate(chosen)
    )
    node_set = frozenset(nodes)
    if covered_only:
        # the text format declares nodes only through hypervertices
        node_set = frozenset(x for hv in hvs for x in hv.nodes)
    return Hypernetwork(node_set, tuple(hvs), edges, False)


@st.composite
def complexes(draw):
    kind = draw(st.sampled_from(["order2", "order_full", "flag"]))
    if kind == "flag":
        from helpers import flag_two_complex

        n = draw(st.integers(1, 7))
        all_pairs = list(combinations(range(n), 2))
        edges = draw(
            st.lists(st.sampled_from(all_pairs), unique=True, max_size=len(all_pairs))
            if all_pairs
            else st.just([])
        )
        return flag_two_complex(n, edges)
    h = draw(hypernetworks())
    p = poset_from_hypernetwork(h, include_singletons=draw(st.booleans()))
    return order_complex(p, skeleton_dim=2 if kind == "order2" else None)
