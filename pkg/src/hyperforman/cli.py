"""Command line front end.

Subcommands: validate, chi, curvature, gauss-bonnet, filtrate, report.
Inputs are hypernetwork files (JSON or text) or poset JSON files (an
object with an ``elements`` key); the pipeline is input -> inclusion
poset -> order complex -> curvature. Exit codes: 0 success, 2 invalid
input or configuration, 3 I/O failure, 4 chain cap exceeded, 5 broken
curvature/Euler balance.

All output is deterministic: identical input and configuration produce
byte-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .complexes import SimplicialComplex, order_complex
from .curvature import (
    TRIANGLE_TERM,
    DirectedComplex,
    DirectedConfig,
    DirectionError,
    curvature_filtration,
    forman_ricci_closed,
    gauss_bonnet,
    two_skeleton,
    vertex_curvature,
)
from .hypernet import (
    Hypernetwork,
    HypernetworkError,
    ParseError,
    from_json_obj,
    parse,
)
from .poset import (
    DEFAULT_CHAIN_CAP,
    ChainCapExceeded,
    NotRanked,
    Poset,
    poset_from_hypernetwork,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_CAP = 4
EXIT_GB = 5

CHAIN_CAP_ENV = "HYPERFORMAN_CHAIN_CAP"


class InputError(ValueError):
    """Bad input content or flag combination; maps to exit code 2."""


@dataclass(frozen=True)
class Loaded:
    kind: str  # "hypernetwork" or "poset"
    fmt: str
    network: Hypernetwork | None = None
    poset: Poset | None = None


# -- input loading -----------------------------------------------------------


def _poset_from_json_obj(obj) -> Poset:
    elements = obj.get("elements")
    if not isinstance(elements, list):
        raise InputError("poset input requires an 'elements' array")
    sets = []
    for i, raw in enumerate(elements):
        if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
            raise InputError(f"elements[{i}] must be an array of strings")
        s = frozenset(raw)
        if s in sets:
            raise InputError(f"elements[{i}] duplicates an earlier element")
        sets.append(s)
    p = Poset.from_sets(sets)
    if "covers" in obj:
        provided = obj["covers"]
        try:
            translated = {
                (p.index_of(sets[q]), p.index_of(sets[r])) for q, r in provided
            }
        except (TypeError, ValueError, IndexError, KeyError) as ex:
            raise InputError(f"malformed 'covers' array: {ex}") from ex
        if translated != set(p.covers):
            raise InputError("'covers' does not match the inclusion order")
    return p


def resolve_format(path: Path, fmt: str) -> str:
    if fmt != "auto":
        return fmt
    if path.suffix == ".json":
        return "json"
    if path.suffix == ".hnet":
        return "text"
    raise InputError(
        f"cannot infer format from '{path.name}'; pass --format json or --format text"
    )


def load_input(path: Path, fmt: str) -> Loaded:
    fmt = resolve_format(path, fmt)
    data = path.read_bytes()
    if fmt == "text":
        return Loaded("hypernetwork", fmt, network=parse(data, "text"))
    try:
        obj = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as ex:
        raise ParseError(f"input is not valid UTF-8: {ex}") from ex
    except json.JSONDecodeError as ex:
        raise ParseError(
            f"invalid JSON: {ex.msg}", line=ex.lineno, col=ex.colno
        ) from ex
    if isinstance(obj, dict) and "elements" in obj and "hypervertices" not in obj:
        return Loaded("poset", fmt, poset=_poset_from_json_obj(obj))
    return Loaded("hypernetwork", fmt, network=from_json_obj(obj))


# -- shared pipeline ---------------------------------------------------------


def resolve_chain_cap(args) -> int:
    if args.chain_cap is not None:
        return args.chain_cap
    env = os.environ.get(CHAIN_CAP_ENV)
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise InputError(f"{CHAIN_CAP_ENV} must be an integer, not {env!r}")
        if cap < 1:
            raise InputError(f"{CHAIN_CAP_ENV} must be positive")
        return cap
    return DEFAULT_CHAIN_CAP


def get_poset(loaded: Loaded, args) -> Poset:
    if loaded.kind == "poset":
        return loaded.poset
    return poset_from_hypernetwork(
        loaded.network, include_singletons=not args.no_singletons
    )


def get_complex(p: Poset, args) -> SimplicialComplex:
    return order_complex(
        p, skeleton_dim=args.skeleton, chain_cap=resolve_chain_cap(args)
    )


def directed_graph_complex(h: Hypernetwork) -> DirectedComplex:
    """Directed-graph reading of a hypernetwork: single-node hypervertices
    joined by directed hyperedges, with every 3-clique a triangle face."""
    for hv in h.hypervertices:
        if len(hv.nodes) > 1:
            raise InputError(
                f"undirected edge encountered: hypervertex '{hv.id}' has "
                f"{len(hv.nodes)} nodes and its internal edges carry no direction"
            )
    for e in h.hyperedges:
        if not e.directed:
            raise InputError(
                f"undirected edge encountered: hyperedge '{e.id}' has no direction"
            )
    labels = sorted(h.nodes)
    idx = {n: i for i, n in enumerate(labels)}
    node_of = {hv.id: next(iter(hv.nodes)) for hv in h.hypervertices}
    arcs = [(idx[node_of[e.tail]], idx[node_of[e.head]]) for e in h.hyperedges]
    return DirectedComplex.from_arcs(labels, arcs, fill_triangles=True)


def emit(args, human_lines, json_obj, csv_header=None, csv_rows=None) -> None:
    out = sys.stdout
    if args.output == "json":
        out.write(json.dumps(json_obj, indent=2, sort_keys=True) + "\n")
    elif args.output == "csv":
        if csv_header is None:
            raise InputError(f"'{args.command}' has no CSV form")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(csv_header)
        for row in csv_rows:
            writer.writerow(row)
    else:
        out.write("\n".join(human_lines) + "\n")


# -- chi helpers -------------------------------------------------------------


def chi_values(loaded: Loaded, args) -> dict:
    """Euler characteristic by each requested method, with provenance."""
    methods = (
        ["delta", "rank", "geometric"]
        if args.chi_method == "all"
        else [args.chi_method]
    )
    p = get_poset(loaded, args)
    out: dict[str, object] = {}
    for m in methods:
        if m == "delta":
            out[m] = get_complex(p, args).euler_characteristic()
        elif m == "rank":
            rf = p.rank_function()
            if isinstance(rf, NotRanked):
                out[m] = {
                    "not_ranked": True,
                    "witness": p.element_label(rf.element_index),
                    "conflicting_ranks": list(rf.ranks),
                }
            else:
                out[m] = sum(
                    (-1) ** j * c for j, c in enumerate(rf.level_counts())
                )
        elif m == "geometric":
            if loaded.kind == "poset":
                out[m] = None
            else:
                from .hypernet import geometric_euler_characteristic

                out[m] = geometric_euler_characteristic(loaded.network)
    return out


def chi_display(method: str, value) -> str:
    if value is None:
        return "n/a (requires hypernetwork input)"
    if isinstance(value, dict):
        lo, hi = value["conflicting_ranks"]
        return (
            f"not ranked (element {value['witness']} would need rank {lo} "
            f"and rank {hi})"
        )
    return str(value)


# -- subcommands -------------------------------------------------------------


def cmd_validate(args) -> int:
    loaded = load_input(args.input, args.format)
    if loaded.kind == "poset":
        p = loaded.poset
        human = [f"{len(p)} elements, {len(p.covers)} cover pairs"]
        obj = {"kind": "poset", "elements": len(p), "covers": len(p.covers)}
        rows = [("elements", len(p)), ("covers", len(p.covers))]
    else:
        h = loaded.network
        human = [h.summary()]
        obj = {
            "kind": "hypernetwork",
            "nodes": len(h.nodes),
            "hypervertices": len(h.hypervertices),
            "hyperedges": len(h.hyperedges),
            "directed": h.directed,
        }
        rows = [
            ("nodes", len(h.nodes)),
            ("hypervertices", len(h.hypervertices)),
            ("hyperedges", len(h.hyperedges)),
            ("directed", h.directed),
        ]
    emit(args, human, obj, ("field", "value"), rows)
    return EXIT_OK


def cmd_chi(args) -> int:
    loaded = load_input(args.input, args.format)
    values = chi_values(loaded, args)
    human = [f"chi[{m}] = {chi_display(m, v)}" for m, v in values.items()]
    rows = []
    for m, v in values.items():
        if v is None:
            rows.append((m, "n/a"))
        elif isinstance(v, dict):
            rows.append((m, "not-ranked"))
        else:
            rows.append((m, v))
    emit(args, human, {"chi": values}, ("method", "value"), rows)
    return EXIT_OK


def _edge_rows(k2: SimplicialComplex):
    rows = []
    for e in k2.edges:
        t = len(k2.triangles_containing(e))
        par = len(k2.parallel_edges(e))
        ric = t - par + 2
        closed = forman_ricci_closed(k2, e)
        rows.append((k2.face_label(e), t, par, ric, closed))
    return rows


def _directed_section(h: Hypernetwork, cfg: DirectedConfig) -> tuple[list, dict, list]:
    dc = directed_graph_complex(h)
    degs = dc.io_degrees(cfg.degree_mode)
    chosen = dc.directed_triangles(cfg.triangle_mode)
    formula = dc.directed_euler_formula(cfg)
    count = dc.directed_euler_count(cfg)
    labels = dc.complex.labels
    human = [
        f"{cfg.degree_mode}-degree {labels[v]} = {degs[v]}"
        for v in range(len(labels))
    ]
    human.append(f"triangles[{cfg.triangle_mode}] = {len(chosen)}")
    human.append(f"chi_directed[formula] = {formula.decimal()}")
    human.append(f"chi_directed[count] = {count}")
    obj = {
        "degree_mode": cfg.degree_mode,
        "triangle_mode": cfg.triangle_mode,
        "degrees": {labels[v]: degs[v] for v in range(len(labels))},
        "chosen_triangles": [dc.complex.face_label(t) for t in chosen],
        "chi_formula": formula.json_value(),
        "chi_count": count,
    }
    rows = [("degree", labels[v], degs[v]) for v in range(len(labels))]
    rows.append(("triangles", cfg.triangle_mode, len(chosen)))
    rows.append(("chi_formula", "", str(formula)))
    rows.append(("chi_count", "", count))
    return human, obj, rows


def _directed_config(args) -> DirectedConfig:
    return DirectedConfig(
        degree_mode=args.degree or "out",
        triangle_mode=args.triangles or "transitive",
    )


def _check_directed_flags(args, loaded: Loaded) -> None:
    if not args.directed:
        if args.degree is not None or args.triangles is not None:
            raise InputError("--degree/--triangles require --directed")
        return
    if loaded.kind == "poset":
        raise InputError("--directed requires a directed hypernetwork input")
    if not all(e.directed for e in loaded.network.hyperedges):
        raise InputError("--directed requires every hyperedge to be directed")


def cmd_curvature(args) -> int:
    loaded = load_input(args.input, args.format)
    _check_directed_flags(args, loaded)
    if args.directed:
        human, obj, rows = _directed_section(loaded.network, _directed_config(args))
        emit(args, human, {"directed": obj}, ("metric", "key", "value"), rows)
        return EXIT_OK

    k2 = two_skeleton(get_complex(get_poset(loaded, args), args))
    rows = _edge_rows(k2)
    human = [
        f"edge {label}: triangles={t} parallel={p} ric={r} closed={c} "
        + ("ok" if r == c else "MISMATCH")
        for label, t, p, r, c in rows
    ]
    for v in range(k2.n_vertices):
        human.append(
            f"vertex {k2.vertex_label(v)}: {vertex_curvature(k2, v).decimal()}"
        )
    for t in k2.triangles:
        human.append(f"triangle {k2.face_label(t)}: {TRIANGLE_TERM}")
    obj = {
        "edges": [
            {
                "edge": label,
                "triangles": t,
                "parallel": p,
                "ric": r,
                "ric_closed": c,
                "match": r == c,
            }
            for label, t, p, r, c in rows
        ],
        "vertices": [
            {
                "vertex": k2.vertex_label(v),
                "term": vertex_curvature(k2, v).json_value(),
            }
            for v in range(k2.n_vertices)
        ],
        "triangles": [
            {"triangle": k2.face_label(t), "term": TRIANGLE_TERM}
            for t in k2.triangles
        ],
    }
    csv_rows = [(label, t, p, r) for label, t, p, r, _ in rows]
    emit(args, human, obj, ("edge", "triangles", "parallel", "ric"), csv_rows)
    return EXIT_OK


def _require_undirected(loaded: Loaded, what: str) -> None:
    if loaded.kind == "hypernetwork" and loaded.network.directed:
        raise InputError(f"{what} operates on undirected input")


def cmd_gauss_bonnet(args) -> int:
    loaded = load_input(args.input, args.format)
    _require_undirected(loaded, "gauss-bonnet")
    k2 = two_skeleton(get_complex(get_poset(loaded, args), args))
    report = gauss_bonnet(k2)
    equation = (
        f"{report.vertex_sum.decimal()} - {report.ricci_sum} + "
        f"{report.triangle_sum} = {report.chi} = chi"
    )
    human = [
        f"sum vertex terms = {report.vertex_sum.decimal()}",
        f"sum ricci = {report.ricci_sum}",
        f"sum triangle terms = {report.triangle_sum}",
        f"chi = {report.chi}",
        f"residual = {report.residual.decimal()}",
        equation,
    ]
    obj = {
        "vertex_sum": report.vertex_sum.json_value(),
        "ricci_sum": report.ricci_sum,
        "triangle_sum": report.triangle_sum,
        "chi": report.chi,
        "residual": report.residual.json_value(),
        "triangle_term": TRIANGLE_TERM,
    }
    rows = [
        ("vertex_sum", str(report.vertex_sum)),
        ("ricci_sum", report.ricci_sum),
        ("triangle_sum", report.triangle_sum),
        ("chi", report.chi),
        ("residual", str(report.residual)),
    ]
    emit(args, human, obj, ("component", "value"), rows)
    if report.residual != 0:
        print("error: curvature does not balance the Euler characteristic",
              file=sys.stderr)
        return EXIT_GB
    return EXIT_OK


def _filtration_rows(k2: SimplicialComplex):
    return [
        (s.threshold, *s.f_vector, s.chi) for s in curvature_filtration(k2)
    ]


def cmd_filtrate(args) -> int:
    loaded = load_input(args.input, args.format)
    _require_undirected(loaded, "filtrate")
    k2 = two_skeleton(get_complex(get_poset(loaded, args), args))
    rows = _filtration_rows(k2)
    human = [
        f"threshold {t}: f=({f0},{f1},{f2}) chi={chi}" for t, f0, f1, f2, chi in rows
    ]
    if not rows:
        human = ["empty complex: no filtration steps"]
    obj = {
        "filtration": [
            {"threshold": t, "f_vector": [f0, f1, f2], "chi": chi}
            for t, f0, f1, f2, chi in rows
        ]
    }
    emit(args, human, obj, ("threshold", "f0", "f1", "f2", "chi"), rows)
    return EXIT_OK


def cmd_report(args) -> int:
    loaded = load_input(args.input, args.format)
    _check_directed_flags(args, loaded)
    p = get_poset(loaded, args)
    cx = get_complex(p, args)
    k2 = two_skeleton(cx)
    report = gauss_bonnet(k2)
    rf = p.rank_function()

    if loaded.kind == "poset":
        input_obj: dict[str, object] = {
            "kind": "poset",
            "format": loaded.fmt,
            "elements": len(p),
        }
    else:
        h = loaded.network
        input_obj = {
            "kind": "hypernetwork",
            "format": loaded.fmt,
            "nodes": len(h.nodes),
            "hypervertices": len(h.hypervertices),
            "hyperedges": len(h.hyperedges),
            "directed": h.directed,
        }

    if isinstance(rf, NotRanked):
        rank_obj: dict[str, object] = {
            "ranked": False,
            "witness": p.element_label(rf.element_index),
            "conflicting_ranks": list(rf.ranks),
        }
    else:
        rank_obj = {
            "ranked": True,
            "ranks": list(rf.ranks),
            "max_rank": rf.max_rank,
            "level_counts": list(rf.level_counts()),
        }

    obj = {
        "input": input_obj,
        "config": {
            "singletons": not args.no_singletons,
            "skeleton": "full" if args.skeleton is None else args.skeleton,
            "chain_cap": resolve_chain_cap(args),
        },
        "poset": p.to_json_obj(),
        "rank": rank_obj,
        "chi": chi_values(loaded, args),
        "complex": {
            "f_vector": list(cx.f_vector()),
            "dim": cx.dim,
            "truncated_for_curvature": cx.dim > 2,
        },
        "curvature": {
            "edges": [
                {
                    "edge": label,
                    "triangles": t,
                    "parallel": par,
                    "ric": r,
                    "ric_closed": c,
                    "match": r == c,
                }
                for label, t, par, r, c in _edge_rows(k2)
            ],
            "vertices": [
                {
                    "vertex": k2.vertex_label(v),
                    "term": report.vertex_terms[v].json_value(),
                }
                for v in range(k2.n_vertices)
            ],
            "triangles": [
                {"triangle": k2.face_label(t), "term": TRIANGLE_TERM}
                for t in k2.triangles
            ],
            "sums": {
                "vertex": report.vertex_sum.json_value(),
                "ricci": report.ricci_sum,
                "triangle": report.triangle_sum,
            },
            "chi": report.chi,
            "residual": report.residual.json_value(),
            "triangle_term": TRIANGLE_TERM,
        },
        "filtration": [
            {"threshold": t, "f_vector": [f0, f1, f2], "chi": chi}
            for t, f0, f1, f2, chi in _filtration_rows(k2)
        ],
    }
    if args.directed:
        _, directed_obj, _ = _directed_section(
            loaded.network, _directed_config(args)
        )
        obj["directed"] = directed_obj
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    if report.residual != 0:
        return EXIT_GB
    return EXIT_OK


# -- argument parsing --------------------------------------------------------


def _skeleton_arg(s: str):
    if s == "full":
        return None
    try:
        d = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a dimension or 'full', got {s!r}")
    if d < 0:
        raise argparse.ArgumentTypeError("skeleton dimension must be >= 0")
    return d


def _cap_arg(s: str) -> int:
    try:
        cap = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}")
    if cap < 1:
        raise argparse.ArgumentTypeError("chain cap must be positive")
    return cap


def _add_common(p: argparse.ArgumentParser, pipeline: bool = True) -> None:
    p.add_argument("input", type=Path, help="hypernetwork or poset file")
    p.add_argument(
        "--format",
        choices=["auto", "json", "text"],
        default="auto",
        help="input format (auto: .json -> json, .hnet -> text)",
    )
    p.add_argument(
        "--output",
        choices=["json", "csv", "human"],
        default="human",
        help="report format",
    )
    if pipeline:
        p.add_argument(
            "--no-singletons",
            action="store_true",
            help="omit node singletons from the poset",
        )
        p.add_argument(
            "--skeleton",
            type=_skeleton_arg,
            default=None,
            metavar="D|full",
            help="truncate the order complex to dimension D (default: full)",
        )
        p.add_argument(
            "--chain-cap",
            type=_cap_arg,
            default=None,
            metavar="N",
            help=f"chain enumeration cap (default {DEFAULT_CHAIN_CAP}, "
            f"or ${CHAIN_CAP_ENV})",
        )


def _add_directed(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--directed",
        action="store_true",
        help="directed analysis (requires a directed input)",
    )
    p.add_argument("--degree", choices=["in", "out"], default=None)
    p.add_argument("--triangles", choices=["transitive", "cyclic"], default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperforman",
        description="hypernetworks as posets and complexes, with exact "
        "combinatorial curvature",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an input file")
    _add_common(p, pipeline=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("chi", help="Euler characteristic by one or all methods")
    _add_common(p)
    p.add_argument(
        "--chi-method",
        choices=["delta", "rank", "geometric", "all"],
        default="all",
    )
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("curvature", help="per-edge, per-vertex, per-triangle terms")
    _add_common(p)
    _add_directed(p)
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser(
        "gauss-bonnet", help="verify the exact curvature/Euler balance"
    )
    _add_common(p)
    p.set_defaults(func=cmd_gauss_bonnet)

    p = sub.add_parser("filtrate", help="curvature sublevel filtration profile")
    _add_common(p)
    p.set_defaults(func=cmd_filtrate)

    p = sub.add_parser("report", help="all-in-one report (always JSON)")
    _add_common(p)
    p.add_argument(
        "--chi-method",
        choices=["delta", "rank", "geometric", "all"],
        default="all",
    )
    _add_directed(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ChainCapExceeded as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, HypernetworkError, InputError, DirectionError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
