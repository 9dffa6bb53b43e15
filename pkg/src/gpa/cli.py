"""Command-line interface.

Commands::

    gpa classify <file> [--json] [--no-oracle]
    gpa expand <file> [--dot <out>]
    gpa graph-type <file> [--json]
    gpa tits <file> [--json]
    gpa roots <file> [--json]

Exit codes for ``classify``: 0 finite, 1 strict tame, 2 wild,
3 out of scope / indeterminate.  Any command exits 64 on unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gp import GPError, OrdinaryQuiver, build_ordinary_quiver
from .graphs import GraphError, classify_graph
from .quiver import QuiverError
from .textfmt import (
    ParseError,
    parse_gp,
    parse_quiver_file,
    render_dot,
    render_expansion,
)
from .tits import NotDynkin, LoopsUnsupported, definiteness, enumerate_positive_roots
from .typecheck import (
    FINITE,
    INDETERMINATE,
    OUT_OF_SCOPE,
    STRICT_TAME,
    WILD,
    Verdict,
    decide_type,
)

EXIT_INPUT_ERROR = 64

_VERDICT_EXIT = {
    FINITE: 0,
    STRICT_TAME: 1,
    WILD: 2,
    OUT_OF_SCOPE: 3,
    INDETERMINATE: 3,
}

_INPUT_ERRORS = (ParseError, GPError, QuiverError, GraphError, NotDynkin, LoopsUnsupported, OSError)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report))
        return
    for key, value in report.items():
        if isinstance(value, dict):
            inner = " ".join(f"{k}={v}" for k, v in value.items())
            print(f"{key}: {inner}")
        elif isinstance(value, list):
            print(f"{key}: {' '.join(str(v) for v in value)}")
        else:
            print(f"{key}: {value}")


def _certificate_json(cert) -> dict:
    return {
        "vertices": list(cert.vertices),
        "arrows": [f"{a.name}: {a.source} -> {a.target}" for a in cert.arrows],
    }


def _oracle_check(oq: OrdinaryQuiver, verdict: Verdict) -> dict:
    qbar = oq.quiver.underlying_graph()
    cls = classify_graph(qbar)
    if cls.is_dynkin:
        oracle_kind = FINITE
    elif cls.is_euclidean:
        oracle_kind = STRICT_TAME
    else:
        oracle_kind = WILD
    return {
        "graph_class": str(cls),
        "definiteness": str(definiteness(qbar)),
        "verdict": oracle_kind,
        "agrees": oracle_kind == verdict.kind,
    }


def cmd_classify(args: argparse.Namespace) -> int:
    gp = parse_gp(_read(args.file))
    verdict = decide_type(gp)
    report: dict = {"verdict": verdict.kind}
    if verdict.reason is not None:
        report["reason"] = verdict.reason
    elif verdict.kind == WILD:
        cls = classify_graph(gp.gamma.underlying_graph()) if len(gp.gamma.vertices) > 1 else None
        report["reason"] = (
            f"gamma underlying graph: {cls}; no finite or tame pattern applies"
            if cls is not None
            else "attached algebra is not of finite or tame shape"
        )
    if verdict.indecomposables is not None:
        report["indecomposables"] = verdict.indecomposables
    oq = build_ordinary_quiver(gp)
    report["q_stats"] = {
        "vertices": len(oq.quiver.vertices),
        "arrows_type1": oq.type1_count,
        "arrows_type2": oq.type2_count,
        "relations": len(oq.lifted_ideal.generators),
    }
    if verdict.certificate is not None:
        report["certificate"] = _certificate_json(verdict.certificate)
    hereditary = all(gp.algebra(v).ideal.is_empty for v in gp.gamma.vertices)
    if hereditary and not args.no_oracle:
        report["oracle_check"] = _oracle_check(oq, verdict)
    _emit(report, args.json)
    return _VERDICT_EXIT[verdict.kind]


def cmd_expand(args: argparse.Namespace) -> int:
    gp = parse_gp(_read(args.file))
    oq = build_ordinary_quiver(gp)
    sys.stdout.write(render_expansion(oq))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(render_dot(oq))
    return 0


def _load_graph(path: str):
    bq = parse_quiver_file(_read(path))
    g = bq.quiver.underlying_graph()
    if g.vertices and not g.is_connected():
        raise GraphError("input quiver is disconnected")
    return g


def cmd_graph_type(args: argparse.Namespace) -> int:
    cls = classify_graph(_load_graph(args.file))
    if args.json:
        print(json.dumps({"graph_class": str(cls)}))
    else:
        print(cls)
    return 0


def cmd_tits(args: argparse.Namespace) -> int:
    result = definiteness(_load_graph(args.file))
    if args.json:
        print(json.dumps({"definiteness": result.kind, "corank": result.corank}))
    else:
        print(result)
    return 0


def cmd_roots(args: argparse.Namespace) -> int:
    roots = enumerate_positive_roots(_load_graph(args.file))
    if args.json:
        print(json.dumps({"count": len(roots), "roots": [list(r) for r in roots]}))
    else:
        print(f"count: {len(roots)}")
        for r in roots:
            print(" ".join(str(v) for v in r))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpa",
        description="Representation type of generalized path algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide the representation type of a gamma file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("expand", help="print the ordinary quiver of a gamma file")
    p.add_argument("file")
    p.add_argument("--dot", metavar="OUT", help="also write a DOT rendering to OUT")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("graph-type", help="Dynkin/Euclidean class of a quiver file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graph_type)

    p = sub.add_parser("tits", help="definiteness of the unit form of a quiver file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tits)

    p = sub.add_parser("roots", help="positive roots of a Dynkin quiver file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_roots)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
