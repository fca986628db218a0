"""Command-line front end: ``hamspec certify|spectrum|invariants|sweep``.

Exit codes: 0 on success, 1 when a sweep finds counterexamples, 2 on usage
or input errors.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Iterator, Optional, Sequence

from .certifier import best_verdict, evaluate_conditions
from .errors import HamspecError
from .graph import Graph
from .graph6 import iter_graph6_records, parse_graph6
from .oracles import invariants, vertex_connectivity
from .spectral import SpectralParams, rayleigh_sandwich, spectrum
from .sweep import CHECKS, DEFAULT_GRID, DEFAULT_TOLERANCES, SweepSpec, parse_source, sweep

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Raise instead of exiting so run_cli can return the code.
    def error(self, message: str) -> None:
        raise _UsageError(f"{self.prog}: error: {message}")


def _graphs(arg: str) -> Iterator[tuple[str, Graph]]:
    if arg != "-":
        yield arg, parse_graph6(arg)
        return
    for _, text, g in iter_graph6_records(sys.stdin):
        yield text, g


def _params(args: argparse.Namespace) -> SpectralParams:
    return SpectralParams(args.alpha, args.beta)


def _cmd_certify(args: argparse.Namespace) -> int:
    p = _params(args)
    theorems = (1, 2) if args.theorem == "all" else (int(args.theorem),)
    ks = None if args.k is None else [args.k]
    for text, g in _graphs(args.graph):
        kappa = vertex_connectivity(g)
        verdicts = evaluate_conditions(g, p, theorems=theorems, ks=ks, kappa=kappa)
        for v in verdicts:
            print(f"{text} {v.describe()}")
        print(f"{text} best {best_verdict(verdicts).describe()}")
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    p = _params(args)
    for text, g in _graphs(args.graph):
        spec = spectrum(g, p)
        upper, mean, lower = rayleigh_sandwich(g, p, spec)
        print(json.dumps({
            "graph6": text,
            "params": p.label(),
            "eigenvalues": spec.eigenvalues,
            "rayleigh": {"lambda1_sq": upper, "mean": str(mean), "lambdan_sq": lower},
            "residual": spec.residual,
        }))
    return EXIT_OK


def _cmd_invariants(args: argparse.Namespace) -> int:
    for text, g in _graphs(args.graph):
        bundle = dataclasses.asdict(invariants(g))
        bundle["gamma_witness"] = [v for v in range(g.n) if bundle["gamma_witness"] >> v & 1]
        print(json.dumps({"graph6": text, **bundle}))
    return EXIT_OK


def _grid(alphas: Optional[list[str]], betas: Optional[list[str]]) -> tuple[SpectralParams, ...]:
    if alphas is None and betas is None:
        return tuple(SpectralParams(a, b) for a, b in DEFAULT_GRID)
    alphas = alphas or ["1"]
    betas = betas or ["1"]
    if len(alphas) != len(betas):
        if len(alphas) == 1:
            alphas = alphas * len(betas)
        elif len(betas) == 1:
            betas = betas * len(alphas)
        else:
            raise ValueError("--alphas and --betas must have equal length or one of them a single value")
    return tuple(SpectralParams(a, b) for a, b in zip(alphas, betas))


def _tolerances(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in DEFAULT_TOLERANCES:
            raise ValueError(f"--tol expects KEY=VALUE with KEY in {sorted(DEFAULT_TOLERANCES)}")
        out[key] = float(value)
    return out


def _cmd_sweep(args: argparse.Namespace) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    spec = SweepSpec(
        sources=tuple(parse_source(s) for s in args.source),
        grid=_grid(args.alphas, args.betas),
        checks=checks,
        tolerances=_tolerances(args.tol),
        verbosity=args.verbosity,
    )
    report = sweep(spec, args.jobs)
    if args.out == "-":
        for line in report.lines(args.timing):
            print(line)
    else:
        report.write(args.out, args.timing)
    print(
        f"graphs={report.graphs_examined} counterexamples={report.counterexample_count} "
        f"skipped={len(report.skipped)}",
        file=sys.stderr,
    )
    return EXIT_COUNTEREXAMPLE if report.counterexample_count else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamspec", description="Spectral Hamiltonicity certificates and soundness sweeps.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--graph", required=True, help="graph6 string, or '-' to read lines from stdin")

    def param_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--alpha", default="1", help="exact rational, e.g. 3/2 or 0.5")
        p.add_argument("--beta", default="1")

    c = sub.add_parser("certify", help="evaluate the spectral conditions on a graph")
    graph_arg(c)
    param_args(c)
    c.add_argument("--k", type=int, default=None, help="connectivity level (default: every admissible k)")
    c.add_argument("--theorem", choices=("1", "2", "all"), default="all")
    c.set_defaults(func=_cmd_certify)

    s = sub.add_parser("spectrum", help="eigenvalues of alpha*D + beta*A and the Rayleigh triple")
    graph_arg(s)
    param_args(s)
    s.set_defaults(func=_cmd_spectrum)

    i = sub.add_parser("invariants", help="n, e, degrees, independence number, connectivity, Hamiltonicity")
    graph_arg(i)
    i.set_defaults(func=_cmd_invariants)

    w = sub.add_parser("sweep", help="run checks over a graph corpus and write a JSON Lines report")
    w.add_argument("--source", action="append", required=True,
                   help="labeled:N | dedup:N | file:PATH | random:N,P,COUNT,SEED[,connected]; repeatable")
    w.add_argument("--alphas", nargs="+", default=None)
    w.add_argument("--betas", nargs="+", default=None)
    w.add_argument("--checks", default=",".join(CHECKS), help=f"comma list from {','.join(CHECKS)}")
    w.add_argument("--tol", action="append", default=[], metavar="KEY=VALUE")
    w.add_argument("--out", default="-", help="report path ('-' for stdout)")
    w.add_argument("--jobs", type=int, default=None, help="worker processes (default: $HAMSPEC_JOBS or 1)")
    w.add_argument("--verbosity", choices=("summary", "full"), default="summary")
    w.add_argument("--timing", action="store_true", help="include wall time in the summary record")
    w.set_defaults(func=_cmd_sweep)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (HamspecError, ValueError, OSError) as exc:
        print(f"hamspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
