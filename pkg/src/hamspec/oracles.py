"""Exact combinatorial oracles and audits of the classical lemmas.

Everything here is exponential-time ground truth intended for small graphs:
independence number, vertex connectivity, Hamiltonicity, traceability and
circumference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import BudgetExceededError
from .graph import Graph, bipartition

HAMILTON_BUDGET = 24
CIRCUMFERENCE_BUDGET = 16


def _rows(g: Graph) -> np.ndarray:
    return np.array(g.adj, dtype=np.int64)


def _check_budget(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise BudgetExceededError(f"{what} oracle is limited to n <= {limit}, got n={g.n}")


# -- independence number ----------------------------------------------------

def _greedy_independent(adj: tuple[int, ...], cand: int) -> int:
    chosen = 0
    while cand:
        best_v, best_d = -1, -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            d = (adj[v] & cand).bit_count()
            if best_v < 0 or d < best_d:
                best_v, best_d = v, d
            rest ^= low
        chosen |= 1 << best_v
        cand &= ~(1 << best_v) & ~adj[best_v]
    return chosen


def _max_independent_size(adj: tuple[int, ...], cand: int, lower: int = 0) -> int:
    """Size of a largest independent set inside the vertex set ``cand``.

    Branch and bound: vertices of degree <= 1 inside ``cand`` are taken
    greedily (always safe), otherwise branch on a vertex of maximum degree.
    """
    best = max(lower, _greedy_independent(adj, cand).bit_count())

    def search(cand: int, size: int) -> None:
        nonlocal best
        while True:
            if size + cand.bit_count() <= best:
                return
            if not cand:
                best = size
                return
            pick = -1
            top_v, top_d = -1, -1
            rest = cand
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                d = (adj[v] & cand).bit_count()
                if d <= 1:
                    pick = v
                    break
                if d > top_d:
                    top_v, top_d = v, d
                rest ^= low
            if pick < 0:
                break
            cand &= ~(1 << pick) & ~adj[pick]
            size += 1
        v = top_v
        search(cand & ~(1 << v) & ~adj[v], size + 1)
        search(cand & ~(1 << v), size)

    search(cand, 0)
    return best


def independence_size(g: Graph) -> int:
    """gamma(G) without a witness."""
    return _max_independent_size(g.adj, (1 << g.n) - 1)


def independence_number(g: Graph) -> tuple[int, int]:
    """``(gamma, witness)`` with ``witness`` the numerically smallest maximum independent set.

    The witness is fixed vertex by vertex from the highest index down: a
    vertex is left out whenever an independent set of size ``gamma``
    survives without it.
    """
    adj = g.adj
    full = (1 << g.n) - 1
    gamma = _max_independent_size(adj, full)

    forced, allowed = 0, full
    for v in range(g.n - 1, -1, -1):
        bit = 1 << v
        if not allowed & bit:
            continue
        without = allowed & ~bit
        need = gamma - forced.bit_count()
        if need <= 0:
            break
        # Vertices below v that are still free; the ones above v are decided.
        if _max_independent_size(adj, without) >= need:
            allowed = without
        else:
            forced |= bit
            allowed = without & ~adj[v]
    witness = forced
    assert witness.bit_count() == gamma
    return gamma, witness


# -- connectivity and spanning structures ------------------------------------

def vertex_connectivity(g: Graph) -> int:
    """kappa(G); ``n - 1`` for complete graphs and 0 for disconnected ones."""
    return int(_kernels.vertex_connectivity(g.adjacency_array()))


def is_hamiltonian(g: Graph) -> bool:
    _check_budget(g, HAMILTON_BUDGET, "Hamiltonicity")
    return bool(_kernels.hamiltonian_cycle_exists(_rows(g), g.n))


def is_traceable(g: Graph) -> bool:
    _check_budget(g, HAMILTON_BUDGET, "traceability")
    return bool(_kernels.hamiltonian_path_exists(_rows(g), g.n))


def circumference(g: Graph) -> int:
    """Length of a longest cycle, 0 for forests."""
    _check_budget(g, CIRCUMFERENCE_BUDGET, "circumference")
    return int(_kernels.longest_cycle(_rows(g), g.n))


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    e: int
    delta: int
    Delta: int
    gamma: int
    gamma_witness: int
    kappa: int
    hamiltonian: bool
    traceable: bool


def invariants(g: Graph) -> InvariantBundle:
    degrees = [row.bit_count() for row in g.adj]
    gamma, witness = independence_number(g)
    return InvariantBundle(
        n=g.n,
        e=sum(degrees) // 2,
        delta=min(degrees),
        Delta=max(degrees),
        gamma=gamma,
        gamma_witness=witness,
        kappa=vertex_connectivity(g),
        hamiltonian=is_hamiltonian(g),
        traceable=is_traceable(g),
    )


# -- lemma audit --------------------------------------------------------------

@dataclass(frozen=True)
class LemmaCheck:
    applicable: bool
    premise: bool
    conclusion: bool

    @property
    def failed(self) -> bool:
        return self.applicable and self.premise and not self.conclusion


@dataclass(frozen=True)
class Lemma4Check(LemmaCheck):
    size_a: int = 0
    size_b: int = 0
    s: int = 0
    t: int = 0
    bound: int = 0
    circumference: int = 0


@dataclass(frozen=True)
class LemmaAudit:
    lemma1: LemmaCheck
    lemma2: LemmaCheck
    lemma3: LemmaCheck
    lemma4: Lemma4Check
    lemma4_skipped: bool = False

    @property
    def failures(self) -> list[str]:
        checks = [("lemma1", self.lemma1), ("lemma2", self.lemma2),
                  ("lemma3", self.lemma3), ("lemma4", self.lemma4)]
        return [name for name, check in checks if check.failed]


_NOT_APPLICABLE = LemmaCheck(False, False, False)
_LEMMA4_NOT_APPLICABLE = Lemma4Check(False, False, False)


def _side_min_degree(g: Graph, side: int) -> int:
    return min(g.adj[v].bit_count() for v in range(g.n) if side >> v & 1)


def lemma_audit(
    g: Graph,
    *,
    kappa: Optional[int] = None,
    gamma: Optional[int] = None,
    hamiltonian: Optional[bool] = None,
    traceable: Optional[bool] = None,
) -> LemmaAudit:
    """Evaluate premise and conclusion of each lemma on ``g``.

    Precomputed oracle values may be passed in to avoid recomputation.
    Lemma 4 is skipped (``lemma4_skipped``) above the circumference budget.
    """
    n = g.n
    kappa = vertex_connectivity(g) if kappa is None else kappa
    gamma = independence_number(g)[0] if gamma is None else gamma
    hamiltonian = is_hamiltonian(g) if hamiltonian is None else hamiltonian
    traceable = is_traceable(g) if traceable is None else traceable

    lemma1 = LemmaCheck(True, gamma <= kappa, hamiltonian) if n >= 3 else _NOT_APPLICABLE
    lemma2 = LemmaCheck(True, gamma <= kappa + 1, traceable)

    parts = bipartition(g)
    lemma3 = _NOT_APPLICABLE
    lemma4 = _LEMMA4_NOT_APPLICABLE
    skipped = False
    if parts is not None:
        size_a, size_b = parts.sizes
        if size_a == size_b >= 2:
            m = size_a
            premise = all(
                g.adj[x].bit_count() + g.adj[y].bit_count() >= m + 1
                for x in range(n) if parts.side_a >> x & 1
                for y in range(n) if parts.side_b >> y & 1 and not g.adj[x] >> y & 1
            )
            lemma3 = LemmaCheck(True, premise, hamiltonian)
        if kappa >= 2:
            # |A| >= |B|; on a tie the side holding vertex 0 becomes B.
            if size_a > size_b:
                big, small = parts.side_a, parts.side_b
            elif size_b > size_a:
                big, small = parts.side_b, parts.side_a
            else:
                zero_side = parts.side_a if parts.side_a & 1 else parts.side_b
                big, small = parts.side_a ^ parts.side_b ^ zero_side, zero_side
            if n > CIRCUMFERENCE_BUDGET:
                skipped = True
            else:
                s = _side_min_degree(g, big)
                t = _side_min_degree(g, small)
                bound = 2 * min(small.bit_count(), s + t - 1, 2 * s - 2)
                circ = circumference(g)
                lemma4 = Lemma4Check(
                    True, True, circ >= bound,
                    size_a=big.bit_count(), size_b=small.bit_count(),
                    s=s, t=t, bound=bound, circumference=circ,
                )
    return LemmaAudit(lemma1, lemma2, lemma3, lemma4, skipped)
