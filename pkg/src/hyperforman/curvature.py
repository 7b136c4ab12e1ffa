"""Combinatorial Ricci curvature on 2-complexes and its exact
vertex/edge/triangle accounting against the Euler characteristic.

The edge curvature of e is

    ric(e) = #{triangles above e} - #{edges parallel to e} + 2

with parallelism as in :meth:`SimplicialComplex.parallel_edges`. Since a
parallel edge is exactly a vertex-sharing edge outside every common
triangle, the same number has the closed form

    ric(e) = 3 * #{triangles above e} + 4 - deg(u) - deg(v)

for e = (u, v). Each vertex carries 1 + (3/2) deg(v) - deg(v)^2 and each
triangle the constant 10 = 1 + 6*3 - 3^2 (a triangle has three edges
below it). These are tuned so that

    sum(vertex terms) - sum(ric) + sum(triangle terms) = chi

holds exactly, which is what :func:`gauss_bonnet` verifies.

The directed variants accept a 2-complex whose every edge carries a
direction; triangles whose edge orientations are coherent (transitive or
cyclic) play the role of the chosen triangle set.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal, Mapping

from .complexes import Simplex, SimplicialComplex
from .halfint import HalfInteger

TRIANGLE_TERM = 10  # 1 + 6*3 - 3^2; forced by exactness on a single triangle


def two_skeleton(k: SimplicialComplex) -> SimplicialComplex:
    """The complex curvature operates on: k itself, or its 2-skeleton
    with a warning when higher faces are present."""
    if k.dim > 2:
        warnings.warn(
            f"complex has dimension {k.dim}; curvature ignores faces above "
            "dimension 2 and operates on the 2-skeleton",
            stacklevel=3,
        )
        return k.skeleton(2)
    return k


def forman_ricci(k: SimplicialComplex, e: Iterable[int]) -> int:
    """Edge curvature by its definition: triangles minus parallels plus 2."""
    if k.dim > 2:
        k = two_skeleton(k)
    return len(k.triangles_containing(e)) - len(k.parallel_edges(e)) + 2


def forman_ricci_closed(k: SimplicialComplex, e: Iterable[int]) -> int:
    """Edge curvature in closed form: 3T + 4 - deg(u) - deg(v).

    Must agree with :func:`forman_ricci` on every edge of every valid
    2-complex; the test suite enforces this.
    """
    if k.dim > 2:
        k = two_skeleton(k)
    u, v = tuple(sorted(e))
    t = len(k.triangles_containing((u, v)))
    return 3 * t + 4 - k.degree(u) - k.degree(v)


def vertex_curvature(k: SimplicialComplex, v: int) -> HalfInteger:
    """Vertex term 1 + (3/2) deg(v) - deg(v)^2, exactly."""
    d = k.degree(v)
    return HalfInteger(2 + 3 * d - 2 * d * d)


def triangle_curvature(k: SimplicialComplex, t: Iterable[int]) -> int:
    """Triangle term; the constant 10 for every triangle of a complex."""
    face = tuple(sorted(t))
    if len(face) != 3 or not k.has_face(face):
        raise ValueError(f"triangle {face} is not a face of the complex")
    return TRIANGLE_TERM


@dataclass(frozen=True)
class CurvatureReport:
    """Per-face curvature terms and their exact balance against chi.

    ``residual = vertex_sum - ricci_sum + triangle_sum - chi`` and is
    exactly zero for every valid 2-complex.
    """

    ricci: dict[Simplex, int]
    vertex_terms: dict[int, HalfInteger]
    triangle_terms: dict[Simplex, int]
    vertex_sum: HalfInteger
    ricci_sum: int
    triangle_sum: int
    chi: int
    residual: HalfInteger

    def verify_sums(self) -> None:
        assert self.vertex_sum == sum(self.vertex_terms.values(), HalfInteger(0))
        assert self.ricci_sum == sum(self.ricci.values())
        assert self.triangle_sum == sum(self.triangle_terms.values())
        assert self.residual == (
            self.vertex_sum - self.ricci_sum + self.triangle_sum - self.chi
        )


def gauss_bonnet(k: SimplicialComplex) -> CurvatureReport:
    """Full curvature accounting of a 2-complex.

    Computes every edge, vertex, and triangle term and the residual of
    their alternating sum against the Euler characteristic. A nonzero
    residual would falsify the discrete curvature identity; callers
    treat it as a hard failure, never a warning.
    """
    k = two_skeleton(k)
    ricci = {e: forman_ricci(k, e) for e in k.edges}
    vertex_terms = {v: vertex_curvature(k, v) for v in range(k.n_vertices)}
    triangle_terms = {t: TRIANGLE_TERM for t in k.triangles}
    vertex_sum = sum(vertex_terms.values(), HalfInteger(0))
    ricci_sum = sum(ricci.values())
    triangle_sum = sum(triangle_terms.values())
    chi = k.euler_characteristic()
    residual = vertex_sum - ricci_sum + triangle_sum - chi
    return CurvatureReport(
        ricci=ricci,
        vertex_terms=vertex_terms,
        triangle_terms=triangle_terms,
        vertex_sum=vertex_sum,
        ricci_sum=ricci_sum,
        triangle_sum=triangle_sum,
        chi=chi,
        residual=residual,
    )


@dataclass(frozen=True)
class FiltrationStep:
    threshold: int
    f_vector: tuple[int, ...]
    chi: int


def curvature_filtration(k: SimplicialComplex) -> list[FiltrationStep]:
    """Sublevel filtration of the edge curvature.

    Thresholds are the sorted distinct edge curvature values. The
    subcomplex at threshold t keeps every vertex, the edges with
    curvature <= t, and the triangles all of whose edges are kept, so
    successive steps are nested and the last one is the whole complex.
    Steps always carry a fixed-width (f0, f1, f2) vector. An edgeless
    nonempty complex yields the single step at threshold 0.
    """
    k = two_skeleton(k)
    n = k.n_vertices
    if not k.edges:
        if n == 0:
            return []
        return [FiltrationStep(0, (n, 0, 0), n)]
    ric = {e: forman_ricci(k, e) for e in k.edges}
    steps = []
    for threshold in sorted(set(ric.values())):
        kept_edges = {e for e, r in ric.items() if r <= threshold}
        kept_tris = [
            t
            for t in k.triangles
            if all(pair in kept_edges for pair in combinations(t, 2))
        ]
        chi = n - len(kept_edges) + len(kept_tris)
        steps.append(
            FiltrationStep(threshold, (n, len(kept_edges), len(kept_tris)), chi)
        )
    return steps


# -- directed complexes ------------------------------------------------------


class DirectionError(ValueError):
    """An edge without a usable direction was encountered."""


DegreeMode = Literal["in", "out"]
TriangleMode = Literal["transitive", "cyclic"]


@dataclass(frozen=True)
class DirectedConfig:
    degree_mode: DegreeMode = "out"
    triangle_mode: TriangleMode = "transitive"


@dataclass(frozen=True)
class DirectedComplex:
    """A 2-complex whose every edge carries a direction.

    ``directions`` maps each edge (as a sorted vertex pair) to the
    ordered pair (tail, head). Triangles are faces of the underlying
    complex; their orientation pattern is always a tournament on three
    vertices, hence either transitive or cyclic.
    """

    complex: SimplicialComplex
    directions: Mapping[Simplex, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.complex.dim > 2:
            raise ValueError("directed curvature requires dimension <= 2")
        for e in self.complex.edges:
            arc = self.directions.get(e)
            if arc is None:
                raise DirectionError(
                    f"undirected edge encountered: {self.complex.face_label(e)}"
                )
            if tuple(sorted(arc)) != e:
                raise DirectionError(
                    f"direction {arc} does not match edge {e}"
                )
        extra = set(self.directions) - set(self.complex.edges)
        if extra:
            raise DirectionError(f"directions given for non-edges: {sorted(extra)}")

    @classmethod
    def from_arcs(
        cls,
        labels: Iterable[str],
        arcs: Iterable[tuple[int, int]],
        fill_triangles: bool = False,
    ) -> "DirectedComplex":
        """Build from directed vertex pairs.

        With ``fill_triangles``, every 3-clique of the arc graph becomes
        a 2-face. Antiparallel arc pairs are rejected: a single edge
        cannot carry two directions.
        """
        labels = tuple(labels)
        directions: dict[Simplex, tuple[int, int]] = {}
        for tail, head in arcs:
            if tail == head:
                raise DirectionError(f"loop arc at vertex {tail}")
            e = tuple(sorted((tail, head)))
            if e in directions:
                if directions[e] != (tail, head):
                    raise DirectionError(
                        f"conflicting directions for edge {e}: "
                        f"{directions[e]} and {(tail, head)}"
                    )
                continue
            directions[e] = (tail, head)
        faces: set[tuple[int, ...]] = set(directions)
        if fill_triangles:
            neighbours: dict[int, set[int]] = {i: set() for i in range(len(labels))}
            for u, v in directions:
                neighbours[u].add(v)
                neighbours[v].add(u)
            for u, v in sorted(directions):
                for w in sorted(neighbours[u] & neighbours[v]):
                    if w > v:
                        faces.add((u, v, w))
        cx = SimplicialComplex.from_faces(labels, faces)
        return cls(cx, directions)

    def io_degree(self, v: int, mode: DegreeMode) -> int:
        """Number of edges entering (``in``) or leaving (``out``) v."""
        return self.io_degrees(mode)[v]

    def io_degrees(self, mode: DegreeMode) -> dict[int, int]:
        if mode not in ("in", "out"):
            raise ValueError(f"degree mode must be 'in' or 'out', not {mode!r}")
        degs = {v: 0 for v in range(self.complex.n_vertices)}
        pick = 1 if mode == "in" else 0
        for arc in self.directions.values():
            degs[arc[pick]] += 1
        return degs

    def _orientation(self, t: Simplex) -> TriangleMode:
        outdeg = {v: 0 for v in t}
        for e in combinations(t, 2):
            outdeg[self.directions[e][0]] += 1
        return "cyclic" if set(outdeg.values()) == {1} else "transitive"

    def directed_triangles(self, mode: TriangleMode) -> list[Simplex]:
        """Triangle faces whose edges orient coherently in the given mode:
        u->v, v->w, u->w for transitive, u->v, v->w, w->u for cyclic."""
        if mode not in ("transitive", "cyclic"):
            raise ValueError(
                f"triangle mode must be 'transitive' or 'cyclic', not {mode!r}"
            )
        return [t for t in self.complex.triangles if self._orientation(t) == mode]

    def directed_euler_formula(self, cfg: DirectedConfig) -> HalfInteger:
        """Directed vertex/edge/triangle combination, evaluated verbatim.

        Vertex terms use the configured one-sided degrees, edge terms
        count only the chosen triangles, and the chosen triangles enter
        through a flat 28 per triangle.
        """
        degs = self.io_degrees(cfg.degree_mode)
        chosen = self.directed_triangles(cfg.triangle_mode)
        above: dict[Simplex, int] = {e: 0 for e in self.complex.edges}
        for t in chosen:
            for e in combinations(t, 2):
                above[e] += 1
        total = HalfInteger(0)
        for v in range(self.complex.n_vertices):
            d = degs[v]
            total += HalfInteger(2 + 3 * d - 2 * d * d)
        for e in self.complex.edges:
            u, v = e
            total -= 4 + 3 * above[e] - (degs[u] + degs[v])
        total += 28 * len(chosen)
        return total

    def directed_euler_count(self, cfg: DirectedConfig) -> int:
        """Face count form: vertices - edges + chosen triangles."""
        chosen = self.directed_triangles(cfg.triangle_mode)
        return self.complex.n_vertices - len(self.complex.edges) + len(chosen)
