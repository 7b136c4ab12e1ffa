"""Finite inclusion posets: cover relations, rank functions, chains.

Every poset in this library is a family of distinct finite sets ordered
by strict inclusion. That covers all three sources we care about: the
canonical poset of a hypernetwork (singletons, hypervertex sets, and
hyperedge unions), face posets of simplicial complexes (faces as vertex
sets), and hand-built fixtures. The cover relation is always the
transitive reduction of inclusion, so it never needs to be supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Iterator

if TYPE_CHECKING:
    from .complexes import SimplicialComplex
    from .hypernet import Hypernetwork

DEFAULT_CHAIN_CAP = 10_000_000


class ChainCapExceeded(RuntimeError):
    """Raised when a chain enumeration would emit more chains than allowed."""

    def __init__(self, cap: int):
        super().__init__(f"chain enumeration exceeded the cap of {cap} chains")
        self.cap = cap


@dataclass(frozen=True)
class NotRanked:
    """Witness that no rank function exists.

    ``element`` received the two conflicting ``ranks`` when rank 0 is
    propagated up from the minimal elements along covers.
    """

    element_index: int
    element: frozenset
    ranks: tuple[int, int]

    def describe(self) -> str:
        lo, hi = self.ranks
        return f"element {set_label(self.element)} would need rank {lo} and rank {hi}"


class NotRankedError(ValueError):
    def __init__(self, witness: NotRanked):
        super().__init__(f"poset is not ranked: {witness.describe()}")
        self.witness = witness


@dataclass(frozen=True)
class RankFunction:
    """The unique rank function of a ranked poset, indexed like the elements."""

    ranks: tuple[int, ...]
    max_rank: int

    def level_counts(self) -> tuple[int, ...]:
        """Number of elements per rank, index j = rank j."""
        if not self.ranks:
            return ()
        counts = [0] * (self.max_rank + 1)
        for r in self.ranks:
            counts[r] += 1
        return tuple(counts)


def set_label(s: frozenset) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def _canonical_key(s: frozenset):
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class Poset:
    """Distinct finite sets under strict inclusion.

    ``elements`` are stored in a canonical order (by size, then sorted
    members) so indices are stable regardless of construction order.
    ``covers`` holds index pairs ``(q, p)`` with p covering q; it is the
    transitive reduction of inclusion and is normally computed by
    :meth:`from_sets` or :func:`face_poset`, not passed by hand.
    """

    elements: tuple[frozenset, ...]
    covers: frozenset[tuple[int, int]]

    def __post_init__(self):
        for q, p in self.covers:
            if not (0 <= q < len(self.elements) and 0 <= p < len(self.elements)):
                raise ValueError(f"cover pair ({q}, {p}) out of range")
            if not self.elements[q] < self.elements[p]:
                raise ValueError(
                    f"cover pair ({q}, {p}) does not respect inclusion"
                )

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable]) -> "Poset":
        """Build the poset of the given sets (deduplicated) under inclusion.

        Covers come from pairwise subset tests followed by removal of
        pairs that admit an intermediate element.
        """
        uniq = {frozenset(s) for s in sets}
        elements = tuple(sorted(uniq, key=_canonical_key))
        n = len(elements)
        up: list[set[int]] = [set() for _ in range(n)]
        dn: list[set[int]] = [set() for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                # canonical order sorts by size, so only j can contain i
                if len(elements[i]) < len(elements[j]) and elements[i] < elements[j]:
                    up[i].add(j)
                    dn[j].add(i)
        covers = frozenset(
            (i, j) for i in range(n) for j in up[i] if not (up[i] & dn[j])
        )
        return cls(elements, covers)

    def __len__(self) -> int:
        return len(self.elements)

    def element_label(self, i: int) -> str:
        return set_label(self.elements[i])

    def index_of(self, s: Iterable) -> int:
        return self._index[frozenset(s)]

    @cached_property
    def _index(self) -> dict[frozenset, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _children(self) -> tuple[tuple[int, ...], ...]:
        """Direct cover successors of each element, ascending."""
        out: list[list[int]] = [[] for _ in self.elements]
        for q, p in self.covers:
            out[q].append(p)
        return tuple(tuple(sorted(c)) for c in out)

    @cached_property
    def _parents(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.elements]
        for q, p in self.covers:
            out[p].append(q)
        return tuple(tuple(sorted(c)) for c in out)

    @cached_property
    def _above(self) -> tuple[tuple[int, ...], ...]:
        """All strict successors under inclusion, from the cover digraph."""
        n = len(self.elements)
        above: list[set[int]] = [set() for _ in range(n)]
        # canonical order is a topological order: subsets sort earlier
        for i in reversed(range(n)):
            acc: set[int] = set()
            for c in self._children[i]:
                acc.add(c)
                acc |= above[c]
            above[i] = acc
        return tuple(tuple(sorted(s)) for s in above)

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if not self._parents[i])

    def comparable_pair_count(self) -> int:
        return sum(len(s) for s in self._above)

    def is_less(self, i: int, j: int) -> bool:
        return self.elements[i] < self.elements[j]

    def rank_function(self) -> RankFunction | NotRanked:
        """The unique rank function, or a :class:`NotRanked` witness.

        Minimal elements get 0 and every cover increments by exactly 1;
        the first element whose parents disagree is the witness.
        """
        n = len(self.elements)
        ranks: list[int] = []
        for i in range(n):
            parents = self._parents[i]
            if not parents:
                ranks.append(0)
                continue
            vals = sorted({ranks[q] + 1 for q in parents})
            if len(vals) > 1:
                return NotRanked(i, self.elements[i], (vals[0], vals[-1]))
            ranks.append(vals[0])
        return RankFunction(tuple(ranks), max(ranks, default=0))

    def is_ranked(self) -> bool:
        return isinstance(self.rank_function(), RankFunction)

    def ranked_euler_characteristic(self) -> int:
        """Alternating sum of level counts over ranks.

        Distinct from the Euler characteristic of the order complex; the
        two agree for face posets but not in general.
        """
        rf = self.rank_function()
        if isinstance(rf, NotRanked):
            raise NotRankedError(rf)
        return sum((-1) ** j * c for j, c in enumerate(rf.level_counts()))

    def chains(
        self,
        max_length: int | None = None,
        cap: int = DEFAULT_CHAIN_CAP,
    ) -> Iterator[tuple[int, ...]]:
        """Yield every chain (totally ordered subset) of size 1..max_length.

        Chains are emitted as strictly increasing index tuples, in
        lexicographic order, each exactly once. Comparability is full
        inclusion, not just covers. Raises :class:`ChainCapExceeded`
        rather than silently truncating when more than ``cap`` chains
        would be emitted.
        """
        if max_length is not None and max_length < 1:
            return
        above = self._above
        emitted = 0
        # size-ordered indices make every comparable pair point upward,
        # so extending by a successor of the last element is enough
        for start in range(len(self.elements)):
            work = [(start,)]
            while work:
                chain = work.pop()
                emitted += 1
                if emitted > cap:
                    raise ChainCapExceeded(cap)
                yield chain
                if max_length is None or len(chain) < max_length:
                    for j in reversed(above[chain[-1]]):
                        work.append(chain + (j,))

    def to_json_obj(self) -> dict:
        """Elements (as sorted label lists) and cover pairs."""
        return {
            "elements": [sorted(str(x) for x in e) for e in self.elements],
            "covers": sorted([q, p] for q, p in self.covers),
        }


def poset_from_hypernetwork(
    h: "Hypernetwork", include_singletons: bool = True
) -> Poset:
    """The canonical poset of a hypernetwork.

    Elements are the node singletons (optional), the hypervertex node
    sets, and the union of endpoints for every hyperedge, deduplicated
    and ordered by inclusion.
    """
    sets: list[frozenset] = []
    if include_singletons:
        sets.extend(frozenset({v}) for v in h.nodes)
    by_id = {hv.id: hv.nodes for hv in h.hypervertices}
    sets.extend(hv.nodes for hv in h.hypervertices)
    for e in h.hyperedges:
        sets.append(by_id[e.tail] | by_id[e.head])
    return Poset.from_sets(sets)


def face_poset(k: "SimplicialComplex") -> Poset:
    """Faces of a complex ordered by inclusion.

    Covers are the codimension-1 containments, which coincide with the
    transitive reduction because the complex is downward closed. The
    result is always ranked, with rank equal to dimension.
    """
    faces: list[tuple[int, ...]] = []
    for dim_faces in k.faces_by_dim:
        faces.extend(dim_faces)
    elements = tuple(
        sorted((frozenset(f) for f in faces), key=_canonical_key)
    )
    index = {e: i for i, e in enumerate(elements)}
    covers = set()
    for f in faces:
        if len(f) < 2:
            continue
        p = index[frozenset(f)]
        for sub in combinations(f, len(f) - 1):
            covers.add((index[frozenset(sub)], p))
    return Poset(elements, frozenset(covers))
