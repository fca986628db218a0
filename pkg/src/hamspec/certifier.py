"""Spectral sufficient conditions for Hamiltonian and traceable graphs.

For a k-connected graph with alpha >= beta > 0 the conditions compare an
extreme eigenvalue of M = alpha*D + beta*A with a bound built from n, e,
delta, Delta and an independent-set size ``j`` (``k + 1`` for the
Hamiltonian conditions, ``k + 2`` for the traceable ones)::

    part 1:  lambda_1 <= (alpha+beta) * sqrt(j delta^2 / n + e^2 / (n (n - j)))
    part 2:  lambda_n >= (alpha+beta) * sqrt((n - j) Delta^2 / n + e^2 / (n j))

Both sides are compared squared, against exact rational right-hand sides.
The lower/upper eigenvalue bounds with ``j = gamma`` hold for every graph.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .errors import PreconditionError
from .graph import DegreeProfile, Graph, degree_profile, recognize_complete_bipartite
from .oracles import HAMILTON_BUDGET, independence_size, is_hamiltonian, vertex_connectivity
from .spectral import SpectralParams, SpectrumSummary, spectrum

CONDITION_TOL = 1e-9
PSD_TOL = 1e-9


class Outcome(str, enum.Enum):
    CERTIFIED_HAMILTONIAN = "CertifiedHamiltonian"
    CERTIFIED_TRACEABLE = "CertifiedTraceable"
    EXCEPTIONAL_COMPLETE_BIPARTITE = "ExceptionalCompleteBipartite"
    INCONCLUSIVE = "Inconclusive"
    PRECONDITION_FAILED = "PreconditionFailed"

    @property
    def strength(self) -> int:
        return _STRENGTH[self]


_STRENGTH = {
    Outcome.CERTIFIED_HAMILTONIAN: 4,
    Outcome.CERTIFIED_TRACEABLE: 3,
    Outcome.EXCEPTIONAL_COMPLETE_BIPARTITE: 2,
    Outcome.INCONCLUSIVE: 1,
    Outcome.PRECONDITION_FAILED: 0,
}


@dataclass(frozen=True)
class BoundTerms:
    m_bound: Fraction
    n_bound: Fraction
    rhs_sq1: Fraction
    rhs_sq2: Fraction
    # Correctly rounded float images of rhs_sq1 and rhs_sq2.
    rhs_sq1_float: float = field(compare=False, default=0.0)
    rhs_sq2_float: float = field(compare=False, default=0.0)


@lru_cache(maxsize=65536)
def _bound_terms(n: int, e: int, delta: int, Delta: int, j: int, s_num: int, s_den: int) -> BoundTerms:
    m_bound = j * delta * delta + Fraction(e * e, n - j)
    n_bound = Fraction(e * e, j) + (n - j) * Delta * Delta
    s2 = Fraction(s_num * s_num, s_den * s_den)
    rhs1, rhs2 = s2 * m_bound / n, s2 * n_bound / n
    return BoundTerms(m_bound, n_bound, rhs1, rhs2, float(rhs1), float(rhs2))


def bound_terms(prof: DegreeProfile, p: SpectralParams, j: int) -> BoundTerms:
    """Exact bound terms for independent-set size ``j`` (needs ``1 <= j < n``)."""
    n = len(prof.degrees)
    if not 1 <= j < n:
        raise PreconditionError(f"bound terms need 1 <= j < n, got j={j}, n={n}")
    s = p.total
    return _bound_terms(n, prof.e, prof.delta, prof.Delta, j, s.numerator, s.denominator)


@dataclass(frozen=True)
class Verdict:
    theorem: str
    k: int
    holds: bool
    outcome: Outcome
    lambda_value: Optional[float] = None
    bound_value: Optional[float] = None
    margin: Optional[float] = None
    rhs_sq: Optional[Fraction] = None
    reason: str = ""
    # Theorem 2 only: whether the graph is also Hamiltonian (None if not checked).
    hamiltonian_reading: Optional[bool] = field(default=None, compare=False)

    @property
    def part(self) -> int:
        return int(self.theorem[-1])

    def describe(self) -> str:
        bits = [f"{self.theorem}", f"k={self.k}", f"holds={self.holds}", f"outcome={self.outcome.value}"]
        if self.lambda_value is not None:
            bits += [f"lambda={self.lambda_value:.12g}", f"bound={self.bound_value:.12g}",
                     f"margin={self.margin:.6g}"]
        if self.hamiltonian_reading is not None:
            bits.append(f"hamiltonian={self.hamiltonian_reading}")
        if self.reason:
            bits.append(f"reason={self.reason}")
        return " ".join(bits)


def _precondition_failed(theorem: str, k: int, reason: str) -> Verdict:
    return Verdict(theorem, k, False, Outcome.PRECONDITION_FAILED, reason=reason)


def _condition(
    g: Graph,
    p: SpectralParams,
    k: int,
    part: int,
    *,
    theorem: int,
    spec: Optional[SpectrumSummary],
    kappa: Optional[int],
    prof: Optional[DegreeProfile],
    tol: float,
) -> Verdict:
    name = f"T{theorem}.{part}"
    if part not in (1, 2):
        raise ValueError(f"part must be 1 or 2, got {part}")
    n = g.n
    min_n, min_k, offset = (3, 2, 1) if theorem == 1 else (9, 1, 2)
    if not p.certifiable:
        return _precondition_failed(name, k, "requires alpha >= beta > 0")
    if n < min_n:
        return _precondition_failed(name, k, f"requires n >= {min_n}")
    if k < min_k:
        return _precondition_failed(name, k, f"requires k >= {min_k}")
    if n - k - offset < 1:
        return _precondition_failed(name, k, f"n - k - {offset} = {n - k - offset} < 1")
    if kappa is None:
        kappa = vertex_connectivity(g)
    if kappa == 0:
        return _precondition_failed(name, k, "graph is disconnected")
    if k > kappa:
        return _precondition_failed(name, k, f"graph is only {kappa}-connected")

    prof = degree_profile(g) if prof is None else prof
    spec = spectrum(g, p) if spec is None else spec
    terms = bound_terms(prof, p, k + offset)
    if part == 1:
        rhs_sq, rhs = terms.rhs_sq1, terms.rhs_sq1_float
        lam = spec.lambda1
        holds = lam * lam <= rhs + tol * (1 + rhs)
        bound = math.sqrt(rhs)
        margin = bound - lam
    else:
        rhs_sq, rhs = terms.rhs_sq2, terms.rhs_sq2_float
        lam = spec.lambda_n
        nonneg = lam >= -PSD_TOL * (1 + abs(spec.lambda1))
        clipped = max(lam, 0.0)
        holds = nonneg and clipped * clipped >= rhs - tol * (1 + rhs)
        bound = math.sqrt(rhs)
        margin = lam - bound
    if not holds:
        return Verdict(name, k, False, Outcome.INCONCLUSIVE, lam, bound, margin, rhs_sq)

    exception = (k, k + offset)
    if recognize_complete_bipartite(g) == exception:
        outcome = Outcome.EXCEPTIONAL_COMPLETE_BIPARTITE
    elif theorem == 1:
        outcome = Outcome.CERTIFIED_HAMILTONIAN
    else:
        outcome = Outcome.CERTIFIED_TRACEABLE
    ham_reading = None
    if theorem == 2 and n <= HAMILTON_BUDGET:
        ham_reading = is_hamiltonian(g)
    return Verdict(name, k, True, outcome, lam, bound, margin, rhs_sq,
                   hamiltonian_reading=ham_reading)


def theorem1_condition(
    g: Graph,
    p: SpectralParams,
    k: int,
    part: int,
    *,
    spec: Optional[SpectrumSummary] = None,
    kappa: Optional[int] = None,
    prof: Optional[DegreeProfile] = None,
    tol: float = CONDITION_TOL,
) -> Verdict:
    """Hamiltonicity condition with ``j = k + 1`` (needs n >= 3, 2 <= k <= kappa, k <= n - 2).

    When it holds the graph is Hamiltonian or is K_{k,k+1}.  Precomputed
    spectrum, connectivity and degree profile may be supplied.
    """
    return _condition(g, p, k, part, theorem=1, spec=spec, kappa=kappa, prof=prof, tol=tol)


def theorem2_condition(
    g: Graph,
    p: SpectralParams,
    k: int,
    part: int,
    *,
    spec: Optional[SpectrumSummary] = None,
    kappa: Optional[int] = None,
    prof: Optional[DegreeProfile] = None,
    tol: float = CONDITION_TOL,
) -> Verdict:
    """Traceability condition with ``j = k + 2`` (needs n >= 9, 1 <= k <= kappa, k <= n - 3).

    A holding condition yields CertifiedTraceable unless the graph is
    K_{k,k+2}; ``hamiltonian_reading`` records whether the graph is in fact
    Hamiltonian, which is the stronger conclusion sometimes attached to it.
    """
    return _condition(g, p, k, part, theorem=2, spec=spec, kappa=kappa, prof=prof, tol=tol)


def corollary_bounds(
    g: Graph,
    p: SpectralParams,
    *,
    gamma: Optional[int] = None,
) -> tuple[float, float]:
    """``(lower bound on lambda_1, upper bound on lambda_n)`` from gamma, delta, Delta, e."""
    if not p.certifiable:
        raise PreconditionError("requires alpha >= beta > 0")
    prof = degree_profile(g)
    if prof.e == 0:
        raise PreconditionError("requires at least one edge")
    gamma = independence_size(g) if gamma is None else gamma
    terms = bound_terms(prof, p, gamma)
    return math.sqrt(terms.rhs_sq1_float), math.sqrt(terms.rhs_sq2_float)


def admissible_ks(theorem: int, n: int, kappa: int) -> range:
    if theorem == 1:
        return range(2, min(kappa, n - 2) + 1) if n >= 3 else range(0)
    return range(1, min(kappa, n - 3) + 1) if n >= 9 else range(0)


def evaluate_conditions(
    g: Graph,
    p: SpectralParams,
    *,
    theorems: Iterable[int] = (1, 2),
    ks: Optional[Iterable[int]] = None,
    spec: Optional[SpectrumSummary] = None,
    kappa: Optional[int] = None,
    tol: float = CONDITION_TOL,
) -> list[Verdict]:
    """Verdicts for every requested theorem, k and part.

    Without explicit ``ks`` each theorem is scanned over its admissible range;
    if that range is empty a single verdict at the smallest k records why.
    """
    kappa = vertex_connectivity(g) if kappa is None else kappa
    prof = degree_profile(g)
    if spec is None and p.certifiable:
        spec = spectrum(g, p)
    verdicts = []
    for theorem in theorems:
        check = theorem1_condition if theorem == 1 else theorem2_condition
        if ks is not None:
            scan = list(ks)
        else:
            scan = list(admissible_ks(theorem, g.n, kappa)) or [2 if theorem == 1 else 1]
        for k in scan:
            for part in (1, 2):
                verdicts.append(check(g, p, k, part, spec=spec, kappa=kappa, prof=prof, tol=tol))
    return verdicts


def best_verdict(verdicts: Iterable[Verdict]) -> Verdict:
    """Strongest outcome; ties go to smaller k, then theorem 1, then part 1."""
    return max(
        verdicts,
        key=lambda v: (v.outcome.strength, -v.k, -int(v.theorem[1]), -v.part),
    )


def certify(
    g: Graph,
    p: SpectralParams,
    *,
    kappa: Optional[int] = None,
    spec: Optional[SpectrumSummary] = None,
) -> Verdict:
    """Best verdict over every admissible (theorem, k, part)."""
    if not p.certifiable:
        return _precondition_failed("T1.1", 2, "requires alpha >= beta > 0")
    return best_verdict(evaluate_conditions(g, p, kappa=kappa, spec=spec))
