"""The matrix family alpha*D + beta*A, its spectrum, and identities it satisfies.

Degree-derived quantities are exact :class:`~fractions.Fraction` values;
floating point appears only in the eigensolver and what is derived from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from . import _kernels
from .errors import EigensolverError
from .graph import Graph, degree_profile

Rational = Union[int, str, Fraction]

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def parse_rational(value: Union[Rational, float]) -> Fraction:
    """Exact rational from ``"p/q"``, a decimal string, an int or a Fraction.

    Floats are read through their shortest decimal repr, so ``0.1`` means 1/10.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"{value!r} is not a finite rational")
        value = repr(value)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot read {value!r} as an exact rational") from exc


@dataclass(frozen=True)
class SpectralParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        object.__setattr__(self, "beta", parse_rational(self.beta))
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("(alpha, beta) must not both be zero")

    @cached_property
    def certifiable(self) -> bool:
        """True when alpha >= beta > 0, the regime the spectral conditions need."""
        return self.alpha >= self.beta > 0

    @cached_property
    def total(self) -> Fraction:
        """alpha + beta."""
        return self.alpha + self.beta

    @cached_property
    def beta_float(self) -> float:
        return float(self.beta)

    def scaled(self, c: Rational) -> "SpectralParams":
        c = parse_rational(c)
        return SpectralParams(self.alpha * c, self.beta * c)

    def label(self) -> str:
        return f"{self.alpha},{self.beta}"


@dataclass(frozen=True)
class SymMatrix:
    n: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.entries.shape != (self.n, self.n):
            raise ValueError("entries must be n x n")
        if not np.array_equal(self.entries, self.entries.T):
            raise ValueError("matrix is not symmetric")

    @classmethod
    def _trusted(cls, entries: np.ndarray) -> "SymMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "n", entries.shape[0])
        object.__setattr__(m, "entries", entries)
        return m


@dataclass(frozen=True)
class SpectrumSummary:
    eigenvalues: tuple[float, ...]
    lambda1: float
    lambda_n: float
    residual: float
    sweeps: int


@lru_cache(maxsize=4096)
def _diagonal_table(num: int, den: int, n: int) -> np.ndarray:
    # num * d / den is the correctly rounded exact entry, unlike float(alpha) * d.
    return np.array([num * d / den for d in range(n)], dtype=np.float64)


def build_matrix(g: Graph, p: SpectralParams) -> SymMatrix:
    """M(G; alpha, beta): ``alpha * d(i)`` on the diagonal, ``beta`` on edges."""
    m = g.adjacency_array() * p.beta_float
    degrees = [row.bit_count() for row in g.adj]
    table = _diagonal_table(p.alpha.numerator, p.alpha.denominator, g.n)
    np.fill_diagonal(m, table[degrees])
    return SymMatrix._trusted(m)


def exact_matrix(g: Graph, p: SpectralParams) -> list[list[Fraction]]:
    rows = []
    for u in range(g.n):
        row = [p.beta if g.adj[u] >> v & 1 else Fraction(0) for v in range(g.n)]
        row[u] = p.alpha * g.degree(u)
        rows.append(row)
    return rows


def eigenvalues(m: SymMatrix) -> SpectrumSummary:
    """Full spectrum by cyclic Jacobi, sorted in descending order."""
    diag, vecs, sweeps, converged = _kernels.jacobi_eigh(
        np.ascontiguousarray(m.entries, dtype=np.float64), JACOBI_TOL, JACOBI_MAX_SWEEPS
    )
    if not converged:
        raise EigensolverError(f"Jacobi did not converge within {JACOBI_MAX_SWEEPS} sweeps")
    residual = float(np.abs(m.entries @ vecs - vecs * diag).max()) if m.n else 0.0
    values = tuple(sorted(diag.tolist(), reverse=True))
    return SpectrumSummary(values, values[0], values[-1], residual, int(sweeps))


def spectrum(g: Graph, p: SpectralParams) -> SpectrumSummary:
    return eigenvalues(build_matrix(g, p))


def quadratic_form(g: Graph, p: SpectralParams, x: Sequence) -> float:
    """(alpha - beta) * sum_u d(u) x_u^2 + beta * sum_{uv in E} (x_u + x_v)^2.

    Equals x^T M x.  With exact (Fraction/int) entries in ``x`` the result is
    exact; otherwise it is computed in floating point with ``math.fsum``.
    """
    if len(x) != g.n:
        raise ValueError(f"vector has length {len(x)}, expected {g.n}")
    exact = all(isinstance(xi, (int, Fraction)) for xi in x)
    alpha, beta = (p.alpha, p.beta) if exact else (float(p.alpha), float(p.beta))
    diag_terms = [g.degree(u) * x[u] * x[u] for u in range(g.n)]
    edge_terms = [(x[u] + x[v]) ** 2 for u, v in g.edges()]
    if exact:
        return (alpha - beta) * sum(diag_terms) + beta * sum(edge_terms)
    return (alpha - beta) * math.fsum(diag_terms) + beta * math.fsum(edge_terms)


def row_sum_m_squared(g: Graph, p: SpectralParams, u: int) -> Fraction:
    """u-th row sum of M^2 from degrees alone:
    alpha(alpha+beta) d(u)^2 + beta(alpha+beta) * sum of neighbour degrees."""
    s = p.alpha + p.beta
    du = g.degree(u)
    neighbour_sum = sum(g.degree(v) for v in g.neighbors(u))
    return p.alpha * s * du * du + p.beta * s * neighbour_sum


def integer_weights(p: SpectralParams) -> tuple[int, int, int]:
    """``(L*alpha, L*beta, L)`` with ``L`` the least common denominator."""
    scale = math.lcm(p.alpha.denominator, p.beta.denominator)
    return (p.alpha.numerator * (scale // p.alpha.denominator),
            p.beta.numerator * (scale // p.beta.denominator), scale)


def integer_square_row_sums(g: Graph, p: SpectralParams) -> tuple[list[int], int]:
    """Row sums of ``(L M)^2`` from the full integer matrix product, and ``L``."""
    ia, ib, scale = integer_weights(p)
    degrees = [row.bit_count() for row in g.adj]
    peak = max(abs(ia) * max(degrees), abs(ib), 1)
    # int64 is exact while every partial sum stays below 2^62.
    dtype = np.int64 if peak * peak * g.n * g.n < 1 << 62 else object
    m = g.adjacency_array().astype(dtype) * ib
    for u, d in enumerate(degrees):
        m[u, u] = ia * d
    return [int(x) for x in (m @ m).sum(axis=1)], scale


def exact_square_row_sums(g: Graph, p: SpectralParams) -> list[Fraction]:
    """Row sums of M^2 from the full matrix product, as exact rationals."""
    rows, scale = integer_square_row_sums(g, p)
    return [Fraction(r, scale * scale) for r in rows]


def mean_square_degree_term(g: Graph, p: SpectralParams) -> Fraction:
    """(alpha + beta)^2 * sum_u d(u)^2 / n, exactly."""
    prof = degree_profile(g)
    return p.total ** 2 * Fraction(prof.sumsq, g.n)


def rayleigh_sandwich(
    g: Graph, p: SpectralParams, spec: Optional[SpectrumSummary] = None
) -> tuple[float, Fraction, float]:
    """``(lambda1^2, (alpha+beta)^2 * sum d^2 / n, lambda_n^2)``.

    The middle term is the Rayleigh quotient of M^2 at the all-ones vector,
    so for alpha >= beta > 0 it lies between the outer two.
    """
    if spec is None:
        spec = spectrum(g, p)
    return spec.lambda1 ** 2, mean_square_degree_term(g, p), spec.lambda_n ** 2
