"""Independent oracles used to pin expected values.

Everything here recomputes results by brute force (exhaustive loops,
powerset materialization, Fraction arithmetic) without reusing the
library's indexed or closed-form code paths.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from hyperforman import SimplicialComplex
from hyperforman.curvature import DirectedComplex, DirectedConfig


def brute_less(elements) -> set[tuple[int, int]]:
    """All strict inclusions among the elements, as index pairs."""
    out = set()
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j and a < b:
                out.add((i, j))
    return out


def brute_covers(elements) -> set[tuple[int, int]]:
    """Transitive reduction of inclusion by triple loop."""
    less = brute_less(elements)
    return {
        (i, j)
        for (i, j) in less
        if not any((i, k) in less and (k, j) in less for k in range(len(elements)))
    }


def brute_chains(elements, max_length=None) -> set[tuple[int, ...]]:
    """Every subset of pairwise comparable elements, as index tuples."""
    n = len(elements)
    limit = n if max_length is None else min(n, max_length)
    out: set[tuple[int, ...]] = set()
    for size in range(1, limit + 1):
        for combo in combinations(range(n), size):
            if all(
                elements[a] < elements[b] or elements[b] < elements[a]
                for a, b in combinations(combo, 2)
            ):
                out.add(combo)
    return out


def brute_rank_candidates(elements, covers) -> list[set[int]]:
    """All rank values each element receives along any cover path from a
    minimal element. Order independent by construction."""
    n = len(elements)
    parents = [[] for _ in range(n)]
    for q, p in covers:
        parents[p].append(q)
    cand: list[set[int]] = [set() for _ in range(n)]
    # canonical index order is topological for inclusion posets
    for i in range(n):
        if not parents[i]:
            cand[i] = {0}
        else:
            cand[i] = {c + 1 for q in parents[i] for c in cand[q]}
    return cand


def brute_triangles_above(k: SimplicialComplex, e) -> int:
    e = set(e)
    return sum(1 for t in k.faces(2) if e <= set(t))


def brute_parallel(k: SimplicialComplex, e) -> set[tuple[int, int]]:
    """Edges sharing a vertex XOR sharing a triangle with e."""
    e = tuple(sorted(e))
    out = set()
    for other in k.faces(1):
        if other == e:
            continue
        share_vertex = bool(set(e) & set(other))
        share_triangle = any(
            set(e) | set(other) <= set(t) for t in k.faces(2)
        )
        if share_vertex != share_triangle:
            out.add(other)
    return out


def brute_ricci(k: SimplicialComplex, e) -> int:
    return brute_triangles_above(k, e) - len(brute_parallel(k, e)) + 2


def brute_balance_residual(k: SimplicialComplex) -> Fraction:
    """Vertex/edge/triangle balance against chi, in Fraction arithmetic."""
    total = Fraction(0)
    for v in range(k.n_vertices):
        d = sum(1 for e in k.faces(1) if v in e)
        total += 1 + Fraction(3, 2) * d - d * d
    for e in k.faces(1):
        total -= brute_ricci(k, e)
    for _t in k.faces(2):
        total += 1 + 6 * 3 - 3 * 3
    chi = sum((-1) ** d * len(k.faces(d)) for d in range(k.dim + 1))
    return total - chi


def brute_geometric_faces(h) -> set[frozenset]:
    """Materialized face set of the full simplex view of a hypernetwork."""
    by_id = {hv.id: hv.nodes for hv in h.hypervertices}
    gens = [hv.nodes for hv in h.hypervertices]
    gens.extend(by_id[e.tail] | by_id[e.head] for e in h.hyperedges)
    gens.extend(frozenset({n}) for n in h.nodes)
    faces: set[frozenset] = set()
    for g in gens:
        members = sorted(g)
        for size in range(1, len(members) + 1):
            faces.update(frozenset(c) for c in combinations(members, size))
    return faces


def brute_geometric_chi(h) -> int:
    return sum((-1) ** (len(f) - 1) for f in brute_geometric_faces(h))


def brute_directed_formula(dc: DirectedComplex, cfg: DirectedConfig) -> Fraction:
    """Direct Fraction evaluation of the directed combination."""
    degs = dc.io_degrees(cfg.degree_mode)
    chosen = [set(t) for t in dc.directed_triangles(cfg.triangle_mode)]
    total = Fraction(0)
    for v in range(dc.complex.n_vertices):
        d = degs[v]
        total += 1 + Fraction(3, 2) * d - d * d
    for e in dc.complex.faces(1):
        above = sum(1 for t in chosen if set(e) <= t)
        total -= 4 + 3 * above - sum(degs[v] for v in e)
    total += 28 * len(chosen)
    return total


def flag_two_complex(n: int, edges) -> SimplicialComplex:
    """2-skeleton of the clique complex of a graph on n vertices."""
    labels = [f"g{i}" for i in range(n)]
    edge_set = {tuple(sorted(e)) for e in edges}
    neighbours = {i: set() for i in range(n)}
    for u, v in edge_set:
        neighbours[u].add(v)
        neighbours[v].add(u)
    faces = set(edge_set)
    for u, v in sorted(edge_set):
        for w in sorted(neighbours[u] & neighbours[v]):
            if w > v:
                faces.add((u, v, w))
    return SimplicialComplex.from_faces(labels, faces)


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    labels = tuple(f"L.{x}" for x in a.labels) + tuple(f"R.{x}" for x in b.labels)
    shift = a.n_vertices
    faces = []
    for d in range(a.dim + 1):
        faces.extend(a.faces(d))
    for d in range(b.dim + 1):
        faces.extend(tuple(v + shift for v in f) for f in b.faces(d))
    return SimplicialComplex.from_faces(labels, faces, closed=True)
