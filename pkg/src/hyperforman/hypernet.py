"""Hypernetworks: node groups (hypervertices) joined pairwise by
hyperedges, plus parsing, validation, and the two non-poset views.

Two interchange formats are supported. JSON:

    {"nodes": ["a", "b", "c"],
     "hypervertices": [{"id": "V1", "nodes": ["a", "b"]}, ...],
     "hyperedges": [{"id": "E1", "tail": "V1", "head": "V2",
                     "directed": false}, ...],
     "directed": false}

and a line-oriented text format:

    # comment
    V1: a b
    V2: b c
    E: V1 V2      (undirected; "E>:" for a directed edge)

The text format declares nodes implicitly through hypervertices, so it
cannot express isolated nodes; JSON is the lossless format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .complexes import SimplicialComplex


class HypernetworkError(ValueError):
    """An invariant of the hypernetwork model is violated."""


class ParseError(ValueError):
    """Malformed input, with a position when one is known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None and col is not None:
            message = f"line {line}, column {col}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Hypervertex:
    id: str
    nodes: frozenset[str]


@dataclass(frozen=True)
class Hyperedge:
    id: str
    tail: str
    head: str
    directed: bool = False


@dataclass(frozen=True)
class Hypernetwork:
    """Validated, immutable hypernetwork.

    Hyperedges are strictly pairwise and never loop; undirected edges
    store their endpoints in lexicographic order so equal networks
    compare equal.
    """

    nodes: frozenset[str] = field(default_factory=frozenset)
    hypervertices: tuple[Hypervertex, ...] = ()
    hyperedges: tuple[Hyperedge, ...] = ()
    directed: bool = False

    def __post_init__(self):
        seen_hv: set[str] = set()
        for hv in self.hypervertices:
            if hv.id in seen_hv:
                raise HypernetworkError(f"duplicate hypervertex id '{hv.id}'")
            seen_hv.add(hv.id)
            if not hv.nodes:
                raise HypernetworkError(f"empty hypervertex '{hv.id}'")
            for n in sorted(hv.nodes):
                if n not in self.nodes:
                    raise HypernetworkError(
                        f"hypervertex '{hv.id}' references unknown node '{n}'"
                    )
        seen_he: set[str] = set()
        seen_pairs: dict[object, str] = {}
        for e in self.hyperedges:
            if e.id in seen_he:
                raise HypernetworkError(f"duplicate hyperedge id '{e.id}'")
            seen_he.add(e.id)
            for ref in (e.tail, e.head):
                if ref not in seen_hv:
                    raise HypernetworkError(
                        f"hyperedge '{e.id}' references unknown hypervertex '{ref}'"
                    )
            if e.tail == e.head:
                raise HypernetworkError(
                    f"hyperedge '{e.id}' is a hyper-loop (tail equals head)"
                )
            if self.directed and not e.directed:
                raise HypernetworkError(
                    f"hypernetwork marked directed but hyperedge '{e.id}' is undirected"
                )
            if not e.directed and e.tail > e.head:
                raise HypernetworkError(
                    f"undirected hyperedge '{e.id}' must order its endpoints "
                    "lexicographically"
                )
            key = (e.tail, e.head) if self.directed else frozenset((e.tail, e.head))
            if key in seen_pairs:
                raise HypernetworkError(
                    f"hyperedges '{seen_pairs[key]}' and '{e.id}' connect the "
                    "same hypervertex pair"
                )
            seen_pairs[key] = e.id

    def hypervertex(self, hv_id: str) -> Hypervertex:
        for hv in self.hypervertices:
            if hv.id == hv_id:
                return hv
        raise KeyError(hv_id)

    def summary(self) -> str:
        def count(n: int, singular: str, plural: str) -> str:
            return f"{n} {singular if n == 1 else plural}"

        s = ", ".join(
            [
                count(len(self.nodes), "node", "nodes"),
                count(len(self.hypervertices), "hypervertex", "hypervertices"),
                count(len(self.hyperedges), "hyperedge", "hyperedges"),
            ]
        )
        if self.directed:
            s += ", directed"
        return s


def _edge(eid: str, tail: str, head: str, directed: bool) -> Hyperedge:
    if not directed and tail > head:
        tail, head = head, tail
    return Hyperedge(eid, tail, head, directed)


# -- JSON ------------------------------------------------------------------


def _expect(cond: bool, msg: str):
    if not cond:
        raise ParseError(msg)


def from_json_obj(obj) -> Hypernetwork:
    _expect(isinstance(obj, dict), "top level must be a JSON object")
    _expect("nodes" in obj, "missing required key 'nodes'")
    nodes = obj["nodes"]
    _expect(
        isinstance(nodes, list) and all(isinstance(n, str) for n in nodes),
        "'nodes' must be an array of strings",
    )
    directed = obj.get("directed", False)
    _expect(isinstance(directed, bool), "'directed' must be a boolean")

    hvs = []
    for i, raw in enumerate(obj.get("hypervertices", [])):
        _expect(isinstance(raw, dict), f"hypervertices[{i}] must be an object")
        _expect(
            isinstance(raw.get("id"), str), f"hypervertices[{i}].id must be a string"
        )
        members = raw.get("nodes")
        _expect(
            isinstance(members, list) and all(isinstance(n, str) for n in members),
            f"hypervertices[{i}].nodes must be an array of strings",
        )
        hvs.append(Hypervertex(raw["id"], frozenset(members)))

    edges = []
    for i, raw in enumerate(obj.get("hyperedges", [])):
        _expect(isinstance(raw, dict), f"hyperedges[{i}] must be an object")
        for banned in ("nodes", "members", "hypervertices"):
            _expect(
                banned not in raw,
                f"hyperedges[{i}]: hyperedges connect exactly two hypervertices "
                f"(unexpected key '{banned}')",
            )
        for k in ("id", "tail", "head"):
            _expect(
                isinstance(raw.get(k), str), f"hyperedges[{i}].{k} must be a string"
            )
        e_directed = raw.get("directed", False)
        _expect(
            isinstance(e_directed, bool), f"hyperedges[{i}].directed must be a boolean"
        )
        edges.append(_edge(raw["id"], raw["tail"], raw["head"], e_directed))

    return Hypernetwork(frozenset(nodes), tuple(hvs), tuple(edges), directed)


def to_json_obj(h: Hypernetwork) -> dict:
    out = {
        "nodes": sorted(h.nodes),
        "hypervertices": [
            {"id": hv.id, "nodes": sorted(hv.nodes)} for hv in h.hypervertices
        ],
        "hyperedges": [
            {"id": e.id, "tail": e.tail, "head": e.head}
            | ({"directed": True} if e.directed else {})
            for e in h.hyperedges
        ],
        "directed": h.directed,
    }
    return out


# -- text ------------------------------------------------------------------


def _from_text(text: str) -> Hypernetwork:
    hvs: list[Hypervertex] = []
    arcs: list[tuple[str, str, bool]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("E>:") or line.startswith("E:"):
            directed = line.startswith("E>:")
            rest = line[3:] if directed else line[2:]
            refs = rest.split()
            if len(refs) != 2:
                raise ParseError(
                    "hyperedges connect exactly two hypervertices", line=lineno
                )
            arcs.append((refs[0], refs[1], directed))
            continue
        if ":" not in line:
            raise ParseError(
                "expected '<id>: node node ...' or 'E: <id> <id>'", line=lineno
            )
        hv_id, _, rest = line.partition(":")
        hv_id = hv_id.strip()
        if not hv_id:
            raise ParseError("missing hypervertex id", line=lineno)
        members = rest.split()
        if not members:
            raise ParseError(f"empty hypervertex '{hv_id}'", line=lineno)
        hvs.append(Hypervertex(hv_id, frozenset(members)))

    nodes = frozenset(n for hv in hvs for n in hv.nodes)
    edges = tuple(
        _edge(f"E{i}", tail, head, directed)
        for i, (tail, head, directed) in enumerate(arcs, start=1)
    )
    directed = bool(edges) and all(e.directed for e in edges)
    return Hypernetwork(nodes, tuple(hvs), edges, directed)


_TOKEN_BREAKERS = (" ", "\t", ":", "#", "\n")


def to_text(h: Hypernetwork) -> str:
    """Serialize to the text format. Raises when the network cannot be
    expressed in it (isolated nodes, ids colliding with edge syntax)."""
    covered = {n for hv in h.hypervertices for n in hv.nodes}
    if covered != set(h.nodes):
        raise ValueError(
            "text format cannot express nodes outside every hypervertex: "
            + ", ".join(sorted(set(h.nodes) - covered))
        )
    # the text reader infers the flag as "has edges and all are directed"
    inferred = bool(h.hyperedges) and all(e.directed for e in h.hyperedges)
    if h.directed != inferred:
        raise ValueError(
            "text format cannot express this network's directed flag; "
            "use the JSON format"
        )
    for hv in h.hypervertices:
        tokens = [hv.id, *hv.nodes]
        for tok in tokens:
            if tok.startswith("#") or any(b in tok for b in _TOKEN_BREAKERS):
                raise ValueError(f"token {tok!r} cannot be written in text format")
        if hv.id in ("E", "E>"):
            raise ValueError(f"hypervertex id '{hv.id}' collides with edge syntax")
    lines = [f"{hv.id}: " + " ".join(sorted(hv.nodes)) for hv in h.hypervertices]
    for e in h.hyperedges:
        prefix = "E>:" if e.directed else "E:"
        lines.append(f"{prefix} {e.tail} {e.head}")
    return "\n".join(lines) + "\n"


# -- entry points ----------------------------------------------------------


def parse(data: bytes | str, fmt: str) -> Hypernetwork:
    """Parse a hypernetwork from ``data`` in format ``json`` or ``text``."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as ex:
            raise ParseError(f"input is not valid UTF-8: {ex}") from ex
    if fmt == "json":
        try:
            obj = json.loads(data)
        except json.JSONDecodeError as ex:
            raise ParseError(
                f"invalid JSON: {ex.msg}", line=ex.lineno, col=ex.colno
            ) from ex
        return from_json_obj(obj)
    if fmt == "text":
        return _from_text(data)
    raise ValueError(f"unknown format {fmt!r}")


def serialize(h: Hypernetwork, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json_obj(h), indent=2) + "\n"
    if fmt == "text":
        return to_text(h)
    raise ValueError(f"unknown format {fmt!r}")


# -- geometric views -------------------------------------------------------


def _generator_sets(h: Hypernetwork) -> list[frozenset[str]]:
    by_id = {hv.id: hv.nodes for hv in h.hypervertices}
    gens = [hv.nodes for hv in h.hypervertices]
    gens.extend(by_id[e.tail] | by_id[e.head] for e in h.hyperedges)
    return gens


def clique_expansion(h: Hypernetwork) -> SimplicialComplex:
    """Graph view: every hypervertex becomes a clique on its nodes, and
    every hyperedge adds all pairs between the two sides' private nodes."""
    labels = sorted(h.nodes)
    idx = {n: i for i, n in enumerate(labels)}
    by_id = {hv.id: hv.nodes for hv in h.hypervertices}
    edges: set[tuple[int, int]] = set()
    for hv in h.hypervertices:
        edges.update(combinations(sorted(idx[n] for n in hv.nodes), 2))
    for e in h.hyperedges:
        vi, vj = by_id[e.tail], by_id[e.head]
        for u in vi - vj:
            for w in vj - vi:
                a, b = sorted((idx[u], idx[w]))
                edges.add((a, b))
    return SimplicialComplex.from_faces(labels, edges)


def geometric_complex(h: Hypernetwork) -> SimplicialComplex:
    """Simplex view, truncated to dimension 2.

    Each hypervertex spans a full simplex on its nodes and each
    hyperedge a full simplex on the union of its endpoints; the result
    is the 2-skeleton of the union. All nodes appear as vertices.
    """
    labels = sorted(h.nodes)
    idx = {n: i for i, n in enumerate(labels)}
    faces: set[tuple[int, ...]] = set()
    for gen in _generator_sets(h):
        members = sorted(idx[n] for n in gen)
        for size in range(1, min(3, len(members)) + 1):
            faces.update(combinations(members, size))
    return SimplicialComplex.from_faces(labels, faces, closed=False)


def geometric_euler_characteristic(h: Hypernetwork) -> int:
    """Euler characteristic of the full-dimensional simplex view.

    Counts by inclusion-exclusion over the maximal generator simplices:
    a subfamily with nonempty common intersection contributes +-1 by the
    parity of its size, because a nonempty full simplex is contractible.
    Branches with empty intersections are pruned, so nothing like the
    full face set is ever materialized.
    """
    gens = _generator_sets(h)
    gens.extend(frozenset({n}) for n in h.nodes)
    ordered = sorted(set(gens), key=lambda s: (-len(s), tuple(sorted(s))))
    maximal: list[frozenset[str]] = []
    for g in ordered:
        if not any(g <= m for m in maximal):
            maximal.append(g)

    total = 0

    def walk(start: int, inter: frozenset[str], sign: int):
        nonlocal total
        total += sign
        for i in range(start, len(maximal)):
            nxt = inter & maximal[i]
            if nxt:
                walk(i + 1, nxt, -sign)

    for i, g in enumerate(maximal):
        walk(i + 1, g, 1)
    return total
