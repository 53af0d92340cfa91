"""Command-line interface.

Exit codes: 0 success (and verified), 1 verification or admissibility
failure (report on stderr), 2 invalid input or unsatisfied congruence.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FilePath

from . import graphs as gr
from .algebra import element_from_json, element_to_json
from .cuntz import (
    CongruenceError,
    VerificationError,
    congruence,
    embed,
    embedding_latex,
    embedding_text,
    kawamura,
)
from .functors import induce_covariant, verify_star_hom
from .graphs import GraphError
from .morphisms import (
    MorphismError,
    check_admissible_graph_hom,
    check_admissible_path_hom,
    graph_hom_from_json,
    path_hom_from_json,
    validate_graph_hom,
    validate_path_hom,
)
from .render import element_latex, element_text, latex_id, path_latex
from .report import Report

FORMATS = ("text", "latex", "json")


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit_report(report: Report, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(_dump(report.to_json()))
    else:
        stream.write("\n".join(report.summary_lines()) + "\n")


def _load_json(path: str):
    try:
        return json.loads(FilePath(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def cmd_embed(args, out, err) -> int:
    try:
        result = embed(args.p, args.q, args.k, s=args.s, verify=args.verify)
    except VerificationError as exc:
        _emit_report(exc.report, args.format, err)
        return 1
    if args.format == "json":
        out.write(_dump(result.to_json()))
    elif args.format == "latex":
        out.write(embedding_latex(result))
    else:
        out.write(embedding_text(result))
    return 0


def _prime(path) -> str:
    return "".join(f"{e[0]}′{e[1:]}" for e in path.edges) if path.edges else f"{path.start}′"


def cmd_kawamura(args, out, err) -> int:
    try:
        h = kawamura(args.m, args.n)
    except CongruenceError as exc:
        raise InputError(str(exc)) from exc
    report = check_admissible_path_hom(h)
    if report.passed and args.verify:
        report = verify_star_hom(induce_covariant(h))
    if not report.passed or (args.verify and not report.unital):
        _emit_report(report, args.format, err)
        return 1
    E = h.source
    if args.format == "json":
        payload = h.to_json()
        if args.verify:
            payload["report"] = report.to_json()
        out.write(_dump(payload))
    elif args.format == "latex":
        lines = [f"h({latex_id(e)}) := {path_latex(h.emap[e], prime=True)}" for e in E.edges]
        lines += [f"S_{{{latex_id(e)}}} \\mapsto S_{{{path_latex(h.emap[e], prime=True)}}}" for e in E.edges]
        out.write("\\begin{align*}\n" + " \\\\\n".join(lines) + "\n\\end{align*}\n")
    else:
        out.write(f"kawamura O_{args.m} -> O_{args.n}\n")
        for e in E.edges:
            out.write(f"{e} ↦ {_prime(h.emap[e])}\n")
        for e in E.edges:
            out.write(f"S_{{{e}}} ↦ S_{{{_prime(h.emap[e])}}}\n")
        if args.verify:
            out.write(f"verified: {'yes' if report.passed and report.unital else 'no'}\n")
    return 0


def _cmd_check(args, out, err, loader, validator, checker) -> int:
    data = _load_json(args.file)
    try:
        hom = loader(data)
    except (GraphError, MorphismError) as exc:
        raise InputError(str(exc)) from exc
    if not validator(hom):
        raise InputError("input is not a homomorphism (maps not total or endpoints not preserved)")
    report = checker(hom)
    _emit_report(report, args.format, out if report.passed else err)
    return 0 if report.passed else 1


def cmd_check_graph_hom(args, out, err) -> int:
    return _cmd_check(args, out, err, graph_hom_from_json, validate_graph_hom, check_admissible_graph_hom)


def cmd_check_path_hom(args, out, err) -> int:
    return _cmd_check(args, out, err, path_hom_from_json, validate_path_hom, check_admissible_path_hom)


def cmd_canon(args, out, err) -> int:
    data = _load_json(args.file)
    try:
        G = gr.graph_from_json(data["graph"])
        x = element_from_json(G, data["element"]).canonical()
    except (KeyError, TypeError) as exc:
        raise InputError(f"expected {{'graph': ..., 'element': [...]}}: missing {exc}") from exc
    except GraphError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "json":
        out.write(_dump(element_to_json(x)))
    elif args.format == "latex":
        out.write(element_latex(x) + "\n")
    else:
        out.write(element_text(x) + "\n")
    return 0


def _family(name: str, params: list[int]) -> gr.Graph:
    builders = {"rose": (gr.rose, 1), "line": (gr.line, 1), "G": (gr.graph_G, 2), "F": (gr.graph_F, 2)}
    if name not in builders:
        raise InputError(f"unknown family {name!r}")
    fn, arity = builders[name]
    if len(params) != arity:
        raise InputError(f"family {name} takes {arity} parameter(s), got {len(params)}")
    try:
        return fn(*params)
    except GraphError as exc:
        raise InputError(str(exc)) from exc


def cmd_graphs(args, out, err) -> int:
    try:
        params = [int(x) for x in args.params.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"--params must be comma-separated integers, got {args.params!r}") from exc
    G = _family(args.family, params)
    if args.format == "dot":
        out.write(gr.graph_to_dot(G))
    else:
        out.write(_dump(gr.graph_to_json(G)))
    return 0


def cmd_grid(args, out, err) -> int:
    failures = 0
    for p in range(2, args.max_p + 1):
        for q in range(2, args.max_q + 1):
            for k in range(1, args.max_k + 1):
                if congruence(p, q, k) is None:
                    continue
                try:
                    r = embed(p, q, k)
                    ok = r.verified
                except VerificationError:
                    ok = False
                failures += not ok
                out.write(f"p={p} q={q} k={k}: {'PASS' if ok else 'FAIL'}\n")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuntzgraph",
        description="Generate and verify polynomial formulas for unital embeddings O_p -> M_k(O_q).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_format(p, choices=FORMATS, default="text"):
        p.add_argument("--format", choices=choices, default=default)

    def add_verify(p):
        p.add_argument("--verify", dest="verify", action="store_true", default=True, help="verify relations (default)")
        p.add_argument("--no-verify", dest="verify", action="store_false", help="skip relation checks")

    p = sub.add_parser("embed", help="generate a verified unital embedding O_p -> M_k(O_q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="congruence parameter; must equal (p-1)k/(q-1)")
    add_format(p)
    add_verify(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("kawamura", help="Kawamura path homomorphism E_m -> E_n and its formulas")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    add_verify(p)
    p.set_defaults(func=cmd_kawamura)

    for name, func, what in (
        ("check-graph-hom", cmd_check_graph_hom, "graph homomorphism"),
        ("check-path-hom", cmd_check_path_hom, "path homomorphism"),
    ):
        p = sub.add_parser(name, help=f"check admissibility of a {what} given as JSON")
        p.add_argument("file")
        add_format(p, choices=("text", "json"))
        p.set_defaults(func=func)

    p = sub.add_parser("canon", help="canonical form of an element given as JSON")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("graphs", help="emit one of the named graph families")
    p.add_argument("--family", required=True, choices=("rose", "line", "G", "F"))
    p.add_argument("--params", required=True, help="comma-separated integers, e.g. 5,3")
    add_format(p, choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_graphs)

    # no help text, so the subcommand stays out of --help
    p = sub.add_parser("grid")
    p.add_argument("--max-p", type=int, default=6)
    p.add_argument("--max-q", type=int, default=6)
    p.add_argument("--max-k", type=int, default=4)
    p.set_defaults(func=cmd_grid)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out, err)
    except (InputError, CongruenceError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
