"""Hypernetworks as inclusion posets and simplicial complexes, with
exact combinatorial Ricci curvature and Gauss-Bonnet accounting."""

from .complexes import SimplicialComplex, order_complex
from .curvature import (
    TRIANGLE_TERM,
    CurvatureReport,
    DirectedComplex,
    DirectedConfig,
    DirectionError,
    FiltrationStep,
    curvature_filtration,
    forman_ricci,
    forman_ricci_closed,
    gauss_bonnet,
    triangle_curvature,
    two_skeleton,
    vertex_curvature,
)
from .halfint import HalfInteger
from .hypernet import (
    Hyperedge,
    Hypernetwork,
    HypernetworkError,
    Hypervertex,
    ParseError,
    clique_expansion,
    geometric_complex,
    geometric_euler_characteristic,
    parse,
    serialize,
)
from .poset import (
    DEFAULT_CHAIN_CAP,
    ChainCapExceeded,
    NotRanked,
    NotRankedError,
    Poset,
    RankFunction,
    face_poset,
    poset_from_hypernetwork,
)
from .randgen import random_hypernetwork

__version__ = "0.1.0"

__all__ = [
    "ChainCapExceeded",
    "CurvatureReport",
    "DEFAULT_CHAIN_CAP",
    "DirectedComplex",
    "DirectedConfig",
    "DirectionError",
    "FiltrationStep",
    "HalfInteger",
    "Hyperedge",
    "Hypernetwork",
    "HypernetworkError",
    "Hypervertex",
    "NotRanked",
    "NotRankedError",
    "ParseError",
    "Poset",
    "RankFunction",
    "SimplicialComplex",
    "TRIANGLE_TERM",
    "clique_expansion",
    "curvature_filtration",
    "face_poset",
    "forman_ricci",
    "forman_ricci_closed",
    "gauss_bonnet",
    "geometric_complex",
    "geometric_euler_characteristic",
    "order_complex",
    "parse",
    "poset_from_hypernetwork",
    "random_hypernetwork",
    "serialize",
    "triangle_curvature",
    "two_skeleton",
    "vertex_curvature",
]
