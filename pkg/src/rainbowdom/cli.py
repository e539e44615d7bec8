"""Command-line entry point: ``rainbowdom <command> ...``.

Exit codes: 0 success, 1 domain error (or an invalid assignment / failed law),
2 capacity error, 3 parse, usage or I/O error. Every command that writes an
output file with ``--out`` also writes ``<out>.manifest.json``; ``replay`` reruns
a manifest and compares the outputs byte for byte.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .certify import construct_m3rdf, construct_tree_matching, formula_gamma_star_r3
from .domatic import construct_family, domatic_bounds, format_family
from .dp import dp_middle
from .errors import DomainError, ParseError, RainbowError
from .graph import Graph, generate, parse_graph, serialize_graph
from .laws import (
    characterize_weight_three,
    check_edge_perturbation,
    check_observation_lower,
    check_pendant_path_lemma,
    check_tree_bounds,
    check_vertex_deletion,
)
from .rainbow import format_assignment, format_colors, parse_assignment, verify_krdf, verify_mkrdf
from .solver import brute_force_krdf, brute_force_middle, solve_krdf, solve_middle, solver_cap

KIND_PARAMS = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "empty": ("n",),
    "random_tree": ("n",),
    "star": ("t",),
    "double_star": ("p", "q"),
    "spider": ("t", "r"),
}
LAWS = (
    "lower-bound",
    "weight-three",
    "vertex-deletion",
    "edge-add",
    "edge-delete",
    "tree-bounds",
    "pendant-path",
)


@dataclass
class RunManifest:
    command: str
    params: dict
    inputs: list = field(default_factory=list)
    outputs: list = field(default_factory=list)
    version: str = __version__
    seed: int | None = None
    argv: list = field(default_factory=list)
    cwd: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> RunManifest:
        return cls(**json.loads(text))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _load_assignment(path: str, g: Graph):
    """Assignment text, optionally preceded by the 'value <w>' line that solve writes."""
    lines = _read(path).splitlines()
    if lines and lines[0].startswith("value "):
        return parse_assignment("\n".join(lines[1:]), g, first_line=2)
    return parse_assignment("\n".join(lines), g)


def _family_params(args) -> tuple[int, ...]:
    names = KIND_PARAMS.get(args.kind)
    if names is None:
        raise DomainError(f"unknown graph kind {args.kind!r}; choose from {sorted(KIND_PARAMS)}")
    values = []
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise DomainError(f"{args.kind} requires --{name}")
        values.append(value)
    return tuple(values)


def _graph_from(args) -> Graph:
    if getattr(args, "graph", None):
        return _load_graph(args.graph)
    if getattr(args, "kind", None):
        return generate(args.kind, *_family_params(args), seed=args.seed)
    raise DomainError("give a graph file or --kind with its parameters")


def _add_family_args(p, kinds=None):
    p.add_argument("--kind", choices=kinds or sorted(KIND_PARAMS))
    for name in ("n", "t", "r", "p", "q"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--seed", type=int)


def _emit(args, text: str):
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")


def _certificate_json(f) -> dict | None:
    if f is None:
        return None
    return {str(x): sorted(c) for x, c in f.items()}


# ---------------------------------------------------------------------------
# commands; each returns an exit code
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    g = generate(args.kind, *_family_params(args), seed=args.seed)
    _emit(args, serialize_graph(g))
    return 0


def cmd_solve(args) -> int:
    k = args.k
    if args.method == "dp":
        if args.kind not in ("path", "cycle") or args.n is None:
            raise DomainError("--method dp needs --kind path|cycle and --n")
        value, cert, stats = dp_middle(args.kind, args.n, k), None, None
        middle = True
    else:
        g = _graph_from(args)
        middle = args.middle
        if args.method == "brute":
            value = brute_force_middle(g, k) if middle else brute_force_krdf(g, k)
            cert, stats = None, None
        else:
            res = solve_middle(g, k, args.cap) if middle else solve_krdf(g, k, args.cap)
            value, cert, stats = res.value, res.certificate, res.stats
    result = {
        "value": value,
        "k": k,
        "middle": middle,
        "method": args.method,
        "certificate": _certificate_json(cert),
        "stats": None if stats is None else {"nodes": stats.nodes, "elapsed": round(stats.elapsed, 6)},
    }
    sys.stdout.write(json.dumps(result, indent=2) + "\n")
    if args.out:
        text = f"value {value}\n"
        if cert is not None:
            text += format_assignment(cert)
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def cmd_construct(args) -> int:
    if args.family == "tree":
        if not args.graph:
            raise DomainError("--family tree needs --graph")
        f = construct_tree_matching(_load_graph(args.graph))
    else:
        if args.n is None:
            raise DomainError(f"--family {args.family} needs --n")
        f = construct_m3rdf(args.family, args.n)
    _emit(args, f"value {f.weight}\n" + format_assignment(f))
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    f = _load_assignment(args.assignment, g)
    if args.k is not None and args.k != f.k:
        raise DomainError(f"--k {args.k} differs from the assignment header k={f.k}")
    report = verify_mkrdf(g, f) if f.domain == "middle" else verify_krdf(g, f)
    lines = [f"valid: {str(report.valid).lower()}", f"weight: {f.weight}"]
    lines += [f"violation: {x} sees {format_colors(sum(1 << (c - 1) for c in seen))}" for x, seen in report.violations]
    _emit(args, "\n".join(lines) + "\n")
    return 0 if report.valid else 1


def cmd_domatic(args) -> int:
    g = _graph_from(args)
    family = None
    if args.k == 3 and args.kind in ("path", "cycle") and not args.graph:
        try:
            family = construct_family(args.kind, args.n)
        except DomainError:
            family = None
    b = domatic_bounds(g, args.k, family)
    lines = [
        f"lower: {b.lower}",
        f"upper: {b.upper} ({b.upper_source})",
        f"gamma: {b.gamma}",
        f"exact: {b.exact if b.exact is not None else '-'}",
    ]
    text = "\n".join(lines) + "\n"
    if family is not None:
        text += format_family(family)
    _emit(args, text)
    return 0


def cmd_check(args) -> int:
    law = args.law
    if law == "weight-three":
        report = characterize_weight_three(args.max_n)
    else:
        g = _graph_from(args)
        if law == "lower-bound":
            report = check_observation_lower(g, args.k)
        elif law == "vertex-deletion":
            if args.vertex is None:
                raise DomainError("vertex-deletion needs --vertex")
            report = check_vertex_deletion(g, args.vertex, args.k)
        elif law in ("edge-add", "edge-delete"):
            if args.edge is None:
                raise DomainError(f"{law} needs --edge U V")
            report = check_edge_perturbation(g, tuple(args.edge), args.k, law.split("-")[1])
        elif law == "tree-bounds":
            report = check_tree_bounds(g)
        else:
            if args.assignment:
                f = _load_assignment(args.assignment, g)
            else:
                f = solve_middle(g, 3).certificate
            report = check_pendant_path_lemma(g, f)
    _emit(args, report.to_text())
    return 0 if report.holds else 1


def cmd_sweep(args) -> int:
    cap = solver_cap(args.cap)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "formula", "dp", "solver", "match"])
    for n in range(args.start, args.stop + 1):
        g = generate(args.kind, n)
        formula = formula_gamma_star_r3(args.kind, n) if args.k == 3 else None
        dp = dp_middle(args.kind, n, args.k) if args.kind in ("path", "cycle") else None
        solver = solve_middle(g, args.k, cap).value if g.order + g.m <= cap else None
        seen = {v for v in (formula, dp, solver) if v is not None}
        writer.writerow([n, formula if formula is not None else "", dp if dp is not None else "",
                         solver if solver is not None else "", str(len(seen) == 1).lower()])
    _emit(args, buf.getvalue())
    return 0


def cmd_replay(args) -> int:
    manifest = RunManifest.from_json(_read(args.manifest))
    argv = list(manifest.argv)
    with tempfile.TemporaryDirectory() as tmp:
        fresh = os.path.join(tmp, "replayed")
        i = argv.index("--out")
        argv[i + 1] = fresh
        here = os.getcwd()
        os.chdir(manifest.cwd or here)
        try:
            saved = sys.stdout
            sys.stdout = io.StringIO()
            try:
                code = main(argv)
            finally:
                sys.stdout = saved
            original = Path(manifest.outputs[0]).read_bytes()
        finally:
            os.chdir(here)
        same = code == 0 and Path(fresh).read_bytes() == original
    print(f"replay {manifest.command}: {'identical' if same else 'DIFFERENT'} {manifest.outputs[0]}")
    return 0 if same else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbowdom", description="Exact k-rainbow domination on middle graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="also write the primary output here (plus a run manifest)")
        return p

    p = command("gen", cmd_gen, "write a named graph as an edge list")
    _add_family_args(p)

    p = command("solve", cmd_solve, "exact rainbow domination number")
    p.add_argument("graph", nargs="?")
    _add_family_args(p)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--middle", action="store_true", help="solve on the middle graph (γ*)")
    p.add_argument("--method", choices=("bnb", "dp", "brute"), default="bnb")
    p.add_argument("--cap", type=int, help="solver cap on host vertices")

    p = command("construct", cmd_construct, "closed-form M3RDF certificate")
    p.add_argument("--family", choices=("path", "cycle", "complete", "tree"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", help="tree edge list for --family tree")

    p = command("verify", cmd_verify, "check an assignment file against a graph")
    p.add_argument("graph")
    p.add_argument("assignment")
    p.add_argument("--k", type=int)

    p = command("domatic", cmd_domatic, "domatic family and bounds on a middle graph")
    p.add_argument("graph", nargs="?")
    _add_family_args(p)
    p.add_argument("--k", type=int, default=3)

    p = command("check", cmd_check, "check one inequality or characterization")
    p.add_argument("--law", choices=LAWS, required=True)
    p.add_argument("graph", nargs="?")
    _add_family_args(p)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--vertex", type=int)
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--assignment", help="certificate for pendant-path (default: solver's)")

    p = command("sweep", cmd_sweep, "CSV of formula, DP and solver values over a range of n")
    p.add_argument("--kind", choices=("path", "cycle", "complete"), required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--cap", type=int)

    p = sub.add_parser("replay", help="rerun a manifest and compare outputs byte for byte")
    p.set_defaults(fn=cmd_replay, out=None)
    p.add_argument("manifest")
    return parser


def _write_manifest(args, argv: list[str]):
    params = {k: v for k, v in vars(args).items() if k not in ("fn", "command", "out")}
    inputs = [v for k, v in params.items() if k in ("graph", "assignment") and v]
    manifest = RunManifest(
        command=args.command,
        params=params,
        inputs=inputs,
        outputs=[args.out],
        seed=params.get("seed"),
        argv=argv,
        cwd=os.getcwd(),
    )
    Path(args.out + ".manifest.json").write_text(manifest.to_json(), encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        code = args.fn(args)
        if args.out:
            _write_manifest(args, argv)
        return code
    except RainbowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
