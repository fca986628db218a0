"""Corpus-scale falsification sweeps.

A sweep runs every graph from one or more sources through a set of checks
for each parameter pair in a grid, counts what it saw, and records every
soundness counterexample.  Reports are JSON Lines; the last line is a
summary record.  Results do not depend on the number of worker processes:
records are merged in graph6-lexicographic order.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .certifier import (
    CONDITION_TOL,
    Outcome,
    admissible_ks,
    bound_terms,
    theorem1_condition,
    theorem2_condition,
)
from .graph import (
    MAX_ENUM_VERTICES,
    Graph,
    dedup_isomorphs,
    degree_profile,
    enumerate_labeled,
    vertex_pairs,
)
from .graph6 import encode_graph6, iter_graph6_records, parse_graph6
from .oracles import (
    HAMILTON_BUDGET,
    independence_size,
    is_hamiltonian,
    is_traceable,
    lemma_audit,
    vertex_connectivity,
)
from .rng import sample_random
from .spectral import (
    SpectralParams,
    integer_square_row_sums,
    integer_weights,
    parse_rational,
    spectrum,
)

CHECKS = ("theorem1", "theorem2", "corollary", "rayleigh", "psd", "lemmas", "rowsum")
DEFAULT_GRID = ((1, 1), (2, 1), (3, 2), (5, 1))
DEFAULT_TOLERANCES = {
    "condition": CONDITION_TOL,
    "corollary": 1e-8,
    "rayleigh": 1e-9,
    "psd": 1e-9,
}
JOBS_ENV = "HAMSPEC_JOBS"
CHUNK = 4096
_COUNTER_KEYS = ("graphs", "conditions", "holds", "certified", "exceptional",
                 "counterexamples", "skipped")


@dataclass(frozen=True)
class Source:
    kind: str
    n: int = 0
    path: str = ""
    p: Fraction = Fraction(0)
    count: int = 0
    seed: int = 0
    connected: bool = False

    def __str__(self) -> str:
        if self.kind in ("labeled", "dedup"):
            return f"{self.kind}:{self.n}"
        if self.kind == "file":
            return f"file:{self.path}"
        tail = ",connected" if self.connected else ""
        return f"random:{self.n},{self.p},{self.count},{self.seed}{tail}"


def parse_source(text: str) -> Source:
    """Read ``labeled:N``, ``dedup:N``, ``file:PATH`` or ``random:N,P,COUNT,SEED[,connected]``."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise ValueError(f"source {text!r} must look like KIND:ARGS")
    if kind in ("labeled", "dedup"):
        n = int(arg)
        if not 1 <= n <= MAX_ENUM_VERTICES:
            raise ValueError(f"{kind} sources need 1 <= n <= {MAX_ENUM_VERTICES}")
        return Source(kind, n=n)
    if kind == "file":
        if not arg:
            raise ValueError("file source needs a path")
        return Source("file", path=arg)
    if kind == "random":
        fields = arg.split(",")
        connected = False
        if len(fields) == 5 and fields[4] == "connected":
            connected = True
            fields = fields[:4]
        if len(fields) != 4:
            raise ValueError("random source is random:N,P,COUNT,SEED[,connected]")
        n, p, count, seed = int(fields[0]), parse_rational(fields[1]), int(fields[2]), int(fields[3])
        if not 0 < p < 1:
            raise ValueError("random source needs 0 < P < 1")
        if not 1 <= n <= HAMILTON_BUDGET:
            raise ValueError(f"random source needs 1 <= N <= {HAMILTON_BUDGET}")
        return Source("random", n=n, p=p, count=count, seed=seed, connected=connected)
    raise ValueError(f"unknown source kind {kind!r}")


@dataclass(frozen=True)
class SweepSpec:
    sources: tuple[Source, ...]
    grid: tuple[SpectralParams, ...] = tuple(SpectralParams(a, b) for a, b in DEFAULT_GRID)
    checks: tuple[str, ...] = CHECKS
    tolerances: dict = field(default_factory=dict)
    verbosity: str = "summary"

    def __post_init__(self) -> None:
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.verbosity not in ("summary", "full"):
            raise ValueError("verbosity must be 'summary' or 'full'")
        for p in self.grid:
            if not p.certifiable:
                raise ValueError(f"grid pair ({p.alpha}, {p.beta}) violates alpha >= beta > 0")
        bad = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if bad:
            raise ValueError(f"unknown tolerance keys: {sorted(bad)}")

    def tol(self, key: str) -> float:
        return float(self.tolerances.get(key, DEFAULT_TOLERANCES[key]))

    def config(self) -> dict:
        return {
            "sources": [str(s) for s in self.sources],
            "grid": [p.label() for p in self.grid],
            "checks": list(self.checks),
            "tolerances": {k: self.tol(k) for k in DEFAULT_TOLERANCES},
            "verbosity": self.verbosity,
        }


@dataclass
class SweepReport:
    config: dict
    graphs_examined: int
    counters: dict
    counterexamples: list
    records: list
    skipped: list
    hamiltonian_reading_examples: list
    wall_time: float = 0.0

    @property
    def counterexample_count(self) -> int:
        return len(self.counterexamples)

    def summary(self, include_timing: bool = False) -> dict:
        out = {
            "type": "summary",
            "graphs_examined": self.graphs_examined,
            "counterexample_count": self.counterexample_count,
            "skipped_count": len(self.skipped),
            "checks": self.counters,
            "hamiltonian_reading_examples": self.hamiltonian_reading_examples,
            "config": self.config,
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def lines(self, include_timing: bool = False) -> Iterator[str]:
        for rec in self.counterexamples:
            yield json.dumps(rec, sort_keys=True)
        for rec in self.skipped:
            yield json.dumps(rec, sort_keys=True)
        for rec in self.records:
            yield json.dumps(rec, sort_keys=True)
        yield json.dumps(self.summary(include_timing), sort_keys=True)

    def write(self, path: str, include_timing: bool = False) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for line in self.lines(include_timing):
                fh.write(line + "\n")


# -- per-graph evaluation -------------------------------------------------------

class _Partial:
    """Accumulator for one chunk of graphs."""

    def __init__(self, checks: Sequence[str]) -> None:
        self.graphs = 0
        self.counters = {c: dict.fromkeys(_COUNTER_KEYS, 0) for c in checks}
        if "theorem2" in self.counters:
            self.counters["theorem2"]["hamiltonian_reading_violations"] = 0
        self.counterexamples: list = []
        self.records: list = []
        self.skipped: list = []
        self.ham_examples: set = set()

    def merge(self, other: "_Partial") -> None:
        self.graphs += other.graphs
        for check, counts in other.counters.items():
            mine = self.counters[check]
            for key, value in counts.items():
                mine[key] += value
        self.counterexamples += other.counterexamples
        self.records += other.records
        self.skipped += other.skipped
        self.ham_examples |= other.ham_examples


class _LazyOracles:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self._ham: Optional[bool] = None
        self._trace: Optional[bool] = None

    def hamiltonian(self) -> bool:
        if self._ham is None:
            self._ham = is_hamiltonian(self.g)
        return self._ham

    def traceable(self) -> bool:
        if self._trace is None:
            self._trace = is_traceable(self.g)
        return self._trace


def _evaluate_graph(g6: str, g: Graph, spec: SweepSpec, acc: _Partial) -> None:
    checks = spec.checks
    full = spec.verbosity == "full"
    acc.graphs += 1
    prof = degree_profile(g)
    oracles = _LazyOracles(g)
    needs_kappa = any(c in checks for c in ("theorem1", "theorem2", "lemmas"))
    kappa = vertex_connectivity(g) if needs_kappa else 0
    gamma = None
    if "lemmas" in checks or ("corollary" in checks and prof.e >= 1):
        gamma = independence_size(g)

    spectral_checks = [c for c in ("theorem1", "theorem2", "corollary", "rayleigh", "psd")
                       if c in checks]
    for c in checks:
        if c != "lemmas":
            acc.counters[c]["graphs"] += 1

    for pi, p in enumerate(spec.grid):
        label = p.label()
        spec_p = spectrum(g, p) if spectral_checks else None

        for theorem, check in ((1, "theorem1"), (2, "theorem2")):
            if check not in checks:
                continue
            counts = acc.counters[check]
            condition = theorem1_condition if theorem == 1 else theorem2_condition
            for k in admissible_ks(theorem, g.n, kappa):
                for part in (1, 2):
                    v = condition(g, p, k, part, spec=spec_p, kappa=kappa, prof=prof,
                                  tol=spec.tol("condition"))
                    counts["conditions"] += 1
                    if full:
                        acc.records.append(_event(g6, label, pi, check, {
                            "theorem": v.theorem, "k": k, "holds": v.holds,
                            "outcome": v.outcome.value, "lambda": v.lambda_value,
                            "bound": v.bound_value,
                        }, k, str(part)))
                    if not v.holds:
                        continue
                    counts["holds"] += 1
                    if v.outcome is Outcome.EXCEPTIONAL_COMPLETE_BIPARTITE:
                        counts["exceptional"] += 1
                        continue
                    counts["certified"] += 1
                    if g.n > HAMILTON_BUDGET:
                        counts["skipped"] += 1
                        acc.skipped.append(_skip(g6, label, check, "oracle budget exceeded"))
                        continue
                    if theorem == 1:
                        ok = oracles.hamiltonian()
                        oracle = {"hamiltonian": ok}
                    else:
                        ok = oracles.traceable()
                        oracle = {"traceable": ok, "hamiltonian": v.hamiltonian_reading}
                        if v.hamiltonian_reading is False:
                            counts["hamiltonian_reading_violations"] += 1
                            acc.ham_examples.add(g6)
                    if not ok:
                        counts["counterexamples"] += 1
                        acc.counterexamples.append({
                            "type": "counterexample", "check": check, "graph6": g6,
                            "params": label, "theorem": v.theorem, "k": k, "part": part,
                            "lambda": v.lambda_value, "bound": v.bound_value,
                            "rhs_sq": str(v.rhs_sq), "oracle": oracle,
                            "_order": (pi, CHECKS.index(check), k, str(part)),
                        })

        if "corollary" in checks and prof.e >= 1:
            counts = acc.counters["corollary"]
            terms = bound_terms(prof, p, gamma)
            tol = spec.tol("corollary")
            lam1, lamn = spec_p.lambda1, spec_p.lambda_n
            lower = terms.rhs_sq1_float ** 0.5
            upper = terms.rhs_sq2_float ** 0.5
            results = (
                ("lower", lam1, lower, lam1 >= lower - tol * (1 + lower)),
                ("upper", lamn, upper, lamn <= upper + tol * (1 + upper)),
            )
            for which, lam, bound, ok in results:
                counts["conditions"] += 1
                counts["holds"] += ok
                if full:
                    acc.records.append(_event(g6, label, pi, "corollary",
                                              {"bound": which, "lambda": lam, "value": bound, "ok": ok},
                                              0, which))
                if not ok:
                    counts["counterexamples"] += 1
                    acc.counterexamples.append({
                        "type": "counterexample", "check": "corollary", "graph6": g6,
                        "params": label, "bound_kind": which, "lambda": lam, "bound": bound,
                        "gamma": gamma, "_order": (pi, CHECKS.index("corollary"), 0, which),
                    })

        if "rayleigh" in checks:
            counts = acc.counters["rayleigh"]
            s = p.total
            mean = (s.numerator ** 2 * prof.sumsq) / (s.denominator ** 2 * g.n)
            tol = spec.tol("rayleigh") * (1 + mean)
            l1sq, lnsq = spec_p.lambda1 ** 2, spec_p.lambda_n ** 2
            ok = l1sq >= mean - tol and mean >= lnsq - tol
            _tally(acc, counts, ok, full, g6, label, pi, "rayleigh",
                   {"lambda1sq": l1sq, "mean": mean, "lambdaNsq": lnsq})

        if "psd" in checks:
            counts = acc.counters["psd"]
            floor = -spec.tol("psd") * (1 + spec_p.lambda1)
            ok = spec_p.lambda_n >= floor
            _tally(acc, counts, ok, full, g6, label, pi, "psd",
                   {"lambdaN": spec_p.lambda_n, "floor": floor})

        if "rowsum" in checks:
            counts = acc.counters["rowsum"]
            # Everything below is scaled by L^2, L the common denominator of alpha, beta.
            product, scale = integer_square_row_sums(g, p)
            ia, ib, _ = integer_weights(p)
            degrees = prof.degrees
            formula = [
                (ia + ib) * (ia * d * d + ib * sum(degrees[v] for v in range(g.n) if g.adj[u] >> v & 1))
                for u, d in enumerate(degrees)
            ]
            total = (ia + ib) ** 2 * prof.sumsq
            ok = product == formula and sum(formula) == total
            sq = scale * scale
            _tally(acc, counts, ok, full, g6, label, pi, "rowsum",
                   {"row_sums": [str(Fraction(x, sq)) for x in formula], "total": str(Fraction(total, sq))})

    if "lemmas" in checks:
        counts = acc.counters["lemmas"]
        counts["graphs"] += 1
        if g.n > HAMILTON_BUDGET:
            counts["skipped"] += 1
            acc.skipped.append(_skip(g6, None, "lemmas", "oracle budget exceeded"))
            return
        audit = lemma_audit(g, kappa=kappa, gamma=gamma,
                            hamiltonian=oracles.hamiltonian(), traceable=oracles.traceable())
        if audit.lemma4_skipped:
            counts["skipped"] += 1
            acc.skipped.append(_skip(g6, None, "lemmas", "lemma4 circumference budget exceeded"))
        for name in ("lemma1", "lemma2", "lemma3", "lemma4"):
            check = getattr(audit, name)
            counts["conditions"] += check.applicable
            counts["holds"] += check.applicable and check.premise
        failures = audit.failures
        if full:
            acc.records.append(_event(g6, None, -1, "lemmas", {
                name: {"applicable": c.applicable, "premise": c.premise, "conclusion": c.conclusion}
                for name, c in (("lemma1", audit.lemma1), ("lemma2", audit.lemma2),
                                ("lemma3", audit.lemma3), ("lemma4", audit.lemma4))
            }))
        for name in failures:
            counts["counterexamples"] += 1
            acc.counterexamples.append({
                "type": "counterexample", "check": "lemmas", "graph6": g6, "lemma": name,
                "kappa": kappa, "gamma": gamma, "_order": (-1, CHECKS.index("lemmas"), 0, name),
            })


def _event(g6: str, label: Optional[str], pi: int, check: str, result: dict,
           k: int = 0, tag: str = "") -> dict:
    return {"type": "event", "graph6": g6, "params": label, "check": check, "result": result,
            "_order": (pi, CHECKS.index(check), k, tag)}


def _skip(g6: str, label: Optional[str], check: str, reason: str) -> dict:
    return {"type": "skipped", "graph6": g6, "params": label, "check": check, "reason": reason}


def _tally(acc, counts, ok, full, g6, label, pi, check, detail) -> None:
    counts["conditions"] += 1
    counts["holds"] += ok
    if full:
        acc.records.append(_event(g6, label, pi, check, dict(detail, ok=ok)))
    if not ok:
        counts["counterexamples"] += 1
        acc.counterexamples.append(dict(detail, type="counterexample", check=check, graph6=g6,
                                        params=label, _order=(pi, CHECKS.index(check), 0, "")))


# -- sources and scheduling ------------------------------------------------------

def _tasks(source: Source) -> Iterator[tuple]:
    """Split a source into picklable work units."""
    if source.kind == "labeled":
        total = 1 << len(vertex_pairs(source.n))
        for lo in range(0, total, CHUNK):
            yield ("labeled", source.n, lo, min(total, lo + CHUNK))
        return
    if source.kind == "dedup":
        graphs = dedup_isomorphs(enumerate_labeled(source.n), source.n)
        texts = (encode_graph6(g) for g in graphs)
    elif source.kind == "file":
        with open(source.path, "r", encoding="ascii", errors="replace", newline="") as fh:
            texts = [text for _, text, _ in iter_graph6_records(fh)]
    else:
        graphs = sample_random(source.n, float(source.p), source.count, source.seed,
                               connected=source.connected)
        texts = (encode_graph6(g) for g in graphs)
    batch: list = []
    for text in texts:
        batch.append(text)
        if len(batch) == CHUNK:
            yield ("graph6", tuple(batch))
            batch = []
    if batch:
        yield ("graph6", tuple(batch))


def _run_task(args: tuple) -> _Partial:
    spec, task = args
    acc = _Partial(spec.checks)
    if task[0] == "labeled":
        _, n, lo, hi = task
        for mask in range(lo, hi):
            g = Graph.from_mask(n, mask)
            _evaluate_graph(encode_graph6(g), g, spec, acc)
    else:
        for text in task[1]:
            _evaluate_graph(text, parse_graph6(text), spec, acc)
    return acc


def default_jobs() -> int:
    value = os.environ.get(JOBS_ENV)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            pass
    return 1


def sweep(spec: SweepSpec, jobs: Optional[int] = None) -> SweepReport:
    """Run ``spec`` and return its report.

    ``jobs`` defaults to the ``HAMSPEC_JOBS`` environment variable (or 1).
    The report content does not depend on ``jobs``.
    """
    jobs = default_jobs() if jobs is None else max(1, jobs)
    start = time.perf_counter()
    total = _Partial(spec.checks)
    work = ((spec, task) for source in spec.sources for task in _tasks(source))
    if jobs == 1:
        for item in work:
            total.merge(_run_task(item))
    else:
        ctx = multiprocessing.get_context("spawn" if os.name == "nt" else "fork")
        with ctx.Pool(jobs) as pool:
            for part in pool.imap(_run_task, work, chunksize=1):
                total.merge(part)

    def order(rec: dict) -> tuple:
        return (rec["graph6"],) + rec["_order"]

    def clean(records: list) -> list:
        records.sort(key=order)
        for rec in records:
            rec.pop("_order", None)
        return records

    return SweepReport(
        config=spec.config(),
        graphs_examined=total.graphs,
        counters=total.counters,
        counterexamples=clean(total.counterexamples),
        records=clean(total.records),
        skipped=sorted(total.skipped, key=lambda r: (r["graph6"], r["check"], str(r["params"]))),
        hamiltonian_reading_examples=sorted(total.ham_examples)[:20],
        wall_time=time.perf_counter() - start,
    )
