"""Simplicial complexes, order complexes, and the adjacency queries
curvature needs.

Faces are sorted tuples of vertex indices, bucketed by dimension in
hash sets, so membership tests and the edge-to-triangle index are O(1)
lookups. Complexes are immutable once built and every constructor
enforces downward closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Iterable

from .poset import DEFAULT_CHAIN_CAP

if TYPE_CHECKING:
    from .poset import Poset

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces stratified by dimension, downward closed.

    Every index 0..len(labels)-1 is a vertex of the complex; labels are
    only used for reporting. Use :meth:`from_faces` instead of the raw
    constructor.
    """

    labels: tuple[str, ...]
    faces_by_dim: tuple[frozenset[Simplex], ...]

    @classmethod
    def from_faces(
        cls,
        labels: Iterable[str],
        faces: Iterable[Iterable[int]],
        closed: bool = False,
    ) -> "SimplicialComplex":
        """Build a complex from arbitrary faces.

        Unless ``closed`` promises the input is already downward closed,
        all subfaces are added. All labels become vertices either way.
        """
        labels = tuple(labels)
        n = len(labels)
        norm: set[Simplex] = set()
        for f in faces:
            t = tuple(sorted(f))
            if not t:
                raise ValueError("empty face")
            if len(set(t)) != len(t):
                raise ValueError(f"face {t} repeats a vertex")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"face {t} references a vertex out of range")
            norm.add(t)
        if not closed:
            for f in list(norm):
                for m in range(1, len(f)):
                    norm.update(combinations(f, m))
        norm.update((i,) for i in range(n))
        if not norm:
            return cls(labels, ())
        max_dim = max(len(f) for f in norm) - 1
        buckets: list[set[Simplex]] = [set() for _ in range(max_dim + 1)]
        for f in norm:
            buckets[len(f) - 1].add(f)
        cx = cls(labels, tuple(frozenset(b) for b in buckets))
        cx._check_closed()
        return cx

    def _check_closed(self) -> None:
        # codimension-1 closure implies full closure by induction
        for d in range(1, len(self.faces_by_dim)):
            below = self.faces_by_dim[d - 1]
            for f in self.faces_by_dim[d]:
                for sub in combinations(f, d):
                    if sub not in below:
                        raise ValueError(
                            f"complex is not downward closed: {f} lacks {sub}"
                        )

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.faces_by_dim)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(b) for d, b in enumerate(self.faces_by_dim))

    def faces(self, d: int) -> list[Simplex]:
        if d < 0 or d > self.dim:
            return []
        return sorted(self.faces_by_dim[d])

    def has_face(self, f: Iterable[int]) -> bool:
        t = tuple(sorted(f))
        d = len(t) - 1
        return 0 <= d <= self.dim and t in self.faces_by_dim[d]

    def skeleton(self, d: int) -> "SimplicialComplex":
        """Subcomplex of all faces of dimension <= d."""
        if d < 0:
            raise ValueError("skeleton dimension must be >= 0")
        if d >= self.dim:
            return self
        return SimplicialComplex(self.labels, self.faces_by_dim[: d + 1])

    @cached_property
    def edges(self) -> tuple[Simplex, ...]:
        return tuple(self.faces(1))

    @cached_property
    def triangles(self) -> tuple[Simplex, ...]:
        return tuple(self.faces(2))

    @cached_property
    def _incident_edges(self) -> dict[int, tuple[Simplex, ...]]:
        inc: dict[int, list[Simplex]] = {i: [] for i in range(self.n_vertices)}
        for e in self.edges:
            inc[e[0]].append(e)
            inc[e[1]].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def _edge_triangles(self) -> dict[Simplex, tuple[Simplex, ...]]:
        idx: dict[Simplex, list[Simplex]] = {e: [] for e in self.edges}
        for t in self.triangles:
            for e in combinations(t, 2):
                idx[e].append(t)
        return {e: tuple(ts) for e, ts in idx.items()}

    def _require_edge(self, e: Iterable[int]) -> Simplex:
        t = tuple(sorted(e))
        if len(t) != 2 or not self.has_face(t):
            raise ValueError(f"edge {t} is not a face of the complex")
        return t

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        if not (0 <= v < self.n_vertices):
            raise ValueError(f"vertex {v} is not in the complex")
        return len(self._incident_edges[v])

    def triangles_containing(self, e: Iterable[int]) -> list[Simplex]:
        """All 2-faces having edge e as a face."""
        t = self._require_edge(e)
        return sorted(self._edge_triangles[t])

    def parallel_edges(self, e: Iterable[int]) -> list[Simplex]:
        """Edges parallel to e: sharing a vertex XOR sharing a triangle.

        Two distinct edges in a common triangle necessarily share a
        vertex, so this reduces to edges meeting e in exactly one vertex
        while lying in no common triangle with it.
        """
        t = self._require_edge(e)
        u, v = t
        cand = set(self._incident_edges[u]) | set(self._incident_edges[v])
        cand.discard(t)
        for tri in self._edge_triangles[t]:
            for other in combinations(tri, 2):
                cand.discard(other)
        return sorted(cand)

    def vertex_label(self, v: int) -> str:
        return self.labels[v]

    def face_label(self, f: Iterable[int]) -> str:
        return "|".join(self.labels[v] for v in sorted(f))


def order_complex(
    p: "Poset",
    skeleton_dim: int | None = None,
    chain_cap: int = DEFAULT_CHAIN_CAP,
) -> SimplicialComplex:
    """The chain complex of a poset: one m-simplex per (m+1)-chain.

    ``skeleton_dim`` bounds the dimension (None means unbounded). The
    result is downward closed by construction since subchains of chains
    are chains; isolated poset elements still appear as vertices.
    """
    max_len = None if skeleton_dim is None else skeleton_dim + 1
    faces = [c for c in p.chains(max_length=max_len, cap=chain_cap)]
    labels = tuple(p.element_label(i) for i in range(len(p)))
    return SimplicialComplex.from_faces(labels, faces, closed=True)
