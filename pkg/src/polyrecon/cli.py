"""Command-line front end.

Exit codes: 0 certified / accepted / refuted, 1 input error, 2 uncertified
(duality gap, rejected certificate, or no refutation found).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import graph as graphs
from .errors import PolyreconError
from .orientations import Orientation, orient_by_order, orientation_from_arcs
from .solver import (
    Certificate,
    GapReport,
    SolverConfig,
    refute_aof_claim,
    refute_twofaces_claim,
    solve,
    verify_certificate,
)
from .reconstruct import TwoFaceSet, face_lattice, facets_from_twofaces
from .walks import FacoidalSystem

log = logging.getLogger("polyrecon")

EXIT_OK, EXIT_INPUT, EXIT_UNCERTIFIED = 0, 1, 2

_PALETTE = (
    "red", "blue", "green3", "orange", "purple", "brown", "magenta", "cyan4",
    "gold3", "navy", "darkgreen", "deeppink", "gray40", "olivedrab", "tomato", "steelblue",
)


# --------------------------------------------------------------------------
# dot export
# --------------------------------------------------------------------------


def graph_to_dot(g: graphs.PolytopeGraph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def orientation_to_dot(o: Orientation) -> str:
    lines = ["digraph G {"]
    lines += [f"  {v};" for v in range(o.graph.n)]
    lines += [f"  {t} -> {h};" for t, h in o.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def walks_to_dot(g: graphs.PolytopeGraph, walks, o: Orientation | None = None) -> str:
    """Graph (or digraph) with one colored, labelled edge per walk traversal."""
    directed = o is not None
    head, arrow = ("digraph", "->") if directed else ("graph", "--")
    lines = [f"{head} G {{"]
    lines += [f"  {v};" for v in range(g.n)]
    if directed:
        lines += [f"  {t} -> {h} [color=gray80];" for t, h in o.arcs()]
    for k, w in enumerate(walks):
        color = _PALETTE[k % len(_PALETTE)]
        for i in range(len(w)):
            x, y = w[i], w[(i + 1) % len(w)]
            lines.append(f'  {x} {arrow} {y} [color={color}, label="W{k}", dir=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def _config(args) -> SolverConfig:
    return SolverConfig(
        seed=args.seed,
        restarts=args.restarts,
        budget_iters=args.budget_iters,
        budget_secs=args.budget_secs,
        exact=args.exact,
        threads=args.threads,
    )


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise PolyreconError(f"cannot read {path}: {exc}") from None


def _load_orientation(g, data: dict) -> Orientation:
    if "orientation" in data:
        return orientation_from_arcs(g, data["orientation"])
    if "vertex_order" in data:
        return orient_by_order(g, data["vertex_order"])
    raise PolyreconError("expected an 'orientation' or 'vertex_order' field")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _parse_factor(spec: str) -> graphs.PolytopeGraph:
    kind, _, param = spec.partition(":")
    return graphs.generate(kind, *([int(param)] if param else []))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "product":
        if len(args.params) != 2:
            raise PolyreconError("product takes two factor specs such as polygon:3 segment")
        g = graphs.product(*(_parse_factor(p) for p in args.params))
    else:
        try:
            params = [int(p) for p in args.params]
        except ValueError:
            raise PolyreconError(f"{args.kind} parameters must be integers") from None
        g = graphs.generate(args.kind, *params)
    fmt = "json" if args.format == "json" else "text"
    if args.out:
        graphs.write_graph(g, args.out, fmt)
    else:
        sys.stdout.write(json.dumps(graphs.graph_to_json(g)) + "\n" if fmt == "json" else graphs.format_graph_text(g))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    g = graphs.read_graph(args.graph)
    state, result = solve(g, _config(args))
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if isinstance(result, GapReport):
        (out / "gap.json").write_text(result.dumps())
        _emit(
            args,
            result.to_json(),
            f"uncertified: best facoidal system has {state.primal_value} walks, "
            f"best H2-sum is {state.dual_value} (gap {state.gap}); see {out / 'gap.json'}",
        )
        return EXIT_UNCERTIFIED
    verdict = verify_certificate(g, result)
    if not verdict:
        raise PolyreconError(f"internal error: solver certificate rejected ({verdict.reason})")
    twofaces = TwoFaceSet(g, state.primal)
    vfi = facets_from_twofaces(g, twofaces)
    lattice = face_lattice(g, vfi)
    (out / "certificate.json").write_text(result.dumps())
    (out / "twofaces.json").write_text(json.dumps(state.primal.to_json(), sort_keys=True) + "\n")
    (out / "incidence.json").write_text(json.dumps(vfi.to_json(), sort_keys=True) + "\n")
    (out / "lattice.json").write_text(json.dumps(lattice.to_json(), sort_keys=True) + "\n")
    _emit(
        args,
        {
            "status": "certified",
            "cardinality": result.cardinality,
            "h2sum": result.h2sum,
            "facets": len(vfi.facets),
            "fvector": list(lattice.fvector),
            "conditional": True,
        },
        f"certified (conditional on the input being a simple polytope graph): "
        f"{result.cardinality} 2-faces = H2-sum {result.h2sum}, {len(vfi.facets)} facets, "
        f"f-vector {list(lattice.fvector)}; files in {out}",
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    g = graphs.read_graph(args.graph)
    data = _load_json(args.certificate)
    try:
        cert = Certificate.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise PolyreconError(f"malformed certificate: {exc}") from None
    verdict = verify_certificate(g, cert)
    if verdict:
        _emit(args, {"verdict": "accept", "conditional": True},
              "accept (conditional on the input being a simple polytope graph)")
        return EXIT_OK
    _emit(args, {"verdict": "reject", "reason": verdict.reason}, f"reject: {verdict.reason}")
    return EXIT_UNCERTIFIED


def cmd_refute(args) -> int:
    g = graphs.read_graph(args.graph)
    data = _load_json(args.claim)
    state, _ = solve(g, _config(args))
    if "walks" in data and not ("orientation" in data or "vertex_order" in data):
        ref = refute_twofaces_claim(g, FacoidalSystem.from_walks(data["walks"]), state)
        if ref is None:
            _emit(args, {"refuted": False}, "unknown: no larger facoidal system found")
            return EXIT_UNCERTIFIED
        _emit(args, {"refuted": True, "kind": ref.kind, "value": ref.value, **ref.walks.to_json()},
              f"refuted: facoidal system with {ref.value} walks exists")
        return EXIT_OK
    claimed = _load_orientation(g, data)
    ref = refute_aof_claim(g, claimed, state)
    if ref is None:
        _emit(args, {"refuted": False}, "unknown: no acyclic orientation with smaller H2-sum found")
        return EXIT_UNCERTIFIED
    _emit(args, {"refuted": True, "kind": ref.kind, "value": ref.value,
                 "orientation": ref.orientation.to_strings()},
          f"refuted: acyclic orientation with H2-sum {ref.value} exists")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = graphs.read_graph(args.graph)
    if args.certificate:
        cert = Certificate.from_json(_load_json(args.certificate))
        text = walks_to_dot(g, cert.walks)
    elif args.walks:
        text = walks_to_dot(g, _load_json(args.walks)["walks"])
    elif args.orientation:
        text = orientation_to_dot(_load_orientation(g, _load_json(args.orientation)))
    else:
        text = graph_to_dot(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyrecon", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--seed", type=int, default=0)
    solver.add_argument("--restarts", type=int, default=16)
    solver.add_argument("--budget-iters", type=int, default=100000)
    solver.add_argument("--budget-secs", type=float, default=60.0)
    solver.add_argument("--exact", action="store_true", help="exhaustive fallback when the gap stays open")
    solver.add_argument("--threads", type=int, default=1)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("gen", parents=[common], help="write the graph of a known simple polytope")
    p.add_argument("kind", choices=("simplex", "cube", "polygon", "prism", "segment", "dodecahedron", "product"))
    p.add_argument("params", nargs="*", help="integer parameters; product takes two specs like polygon:3")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reconstruct", parents=[solver, common], help="certify 2-faces, facets and face lattice")
    p.add_argument("graph")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", parents=[common], help="check a certificate from scratch")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("refute", parents=[solver, common], help="try to refute a claimed 2-face system or AOF")
    p.add_argument("graph")
    p.add_argument("claim", help='JSON with "walks", or with "orientation"/"vertex_order"')
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("export-dot", help="graphviz output of a graph, orientation or walks")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--certificate")
    group.add_argument("--walks")
    group.add_argument("--orientation")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (PolyreconError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
