"""Simple undirected graphs stored as adjacency bitsets.

Vertex ``v`` of a :class:`Graph` is bit ``v`` of every adjacency row, so
``adj[u] >> v & 1`` tells whether ``uv`` is an edge.  Edges are also
addressed by a single integer *edge mask* whose bit ``i`` is the ``i``-th
vertex pair in graph6 order ``(0,1), (0,2), (1,2), (0,3), ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import CorpusTooLargeError

MAX_VERTICES = 64
MAX_ENUM_VERTICES = 7


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs ``(i, j)``, ``i < j``, in graph6 (column-major) order."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex >= n")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            rest = row
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                rest ^= low

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee a symmetric loop-free adjacency.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Build the graph whose edge set is encoded by ``mask``."""
        rows = [0] * n
        for bit, (i, j) in enumerate(vertex_pairs(n)):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls._trusted(n, tuple(rows))

    @property
    def edge_mask(self) -> int:
        mask = 0
        for bit, (i, j) in enumerate(vertex_pairs(self.n)):
            if self.adj[i] >> j & 1:
                mask |= 1 << bit
        return mask

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return [v for v in range(self.n) if self.adj[u] >> v & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for (i, j) in vertex_pairs(self.n) if self.adj[i] >> j & 1]

    def adjacency_array(self) -> np.ndarray:
        """Read-only 0/1 ``uint8`` adjacency matrix (cached)."""
        return self._adjacency

    @cached_property
    def _adjacency(self) -> np.ndarray:
        rows = np.array(self.adj, dtype=np.uint64).view(np.uint8).reshape(self.n, 8)
        a = np.unpackbits(rows, axis=1, count=self.n, bitorder="little")
        a.flags.writeable = False
        return a

    def is_connected(self) -> bool:
        return self.component_of(0) == (1 << self.n) - 1

    def component_of(self, v: int) -> int:
        """Bitset of the connected component containing ``v``."""
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= self.adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Graph with vertex ``u`` renamed to ``perm[u]``."""
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            for v in range(self.n):
                if row >> v & 1:
                    rows[perm[u]] |= 1 << perm[v]
        return Graph._trusted(self.n, tuple(rows))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int
    Delta: int
    e: int
    sumsq: int


@dataclass(frozen=True)
class Bipartition:
    side_a: int
    side_b: int
    complete: bool

    @property
    def sizes(self) -> tuple[int, int]:
        return self.side_a.bit_count(), self.side_b.bit_count()


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(row.bit_count() for row in g.adj)
    return DegreeProfile(
        degrees=degrees,
        delta=min(degrees),
        Delta=max(degrees),
        e=sum(degrees) // 2,
        sumsq=sum(d * d for d in degrees),
    )


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Deterministic BFS 2-coloring, or ``None`` when ``g`` has an odd cycle.

    Each component is rooted at its lowest-index vertex, which goes to side A.
    """
    side_a = side_b = 0
    unseen = (1 << g.n) - 1
    while unseen:
        root = unseen & -unseen
        layer, colour = root, 0
        seen = root
        while layer:
            if colour == 0:
                side_a |= layer
            else:
                side_b |= layer
            nxt = 0
            rest = layer
            while rest:
                low = rest & -rest
                nxt |= g.adj[low.bit_length() - 1]
                rest ^= low
            layer = nxt & ~seen
            seen |= layer
            colour ^= 1
        unseen &= ~seen
    for u in range(g.n):
        same = side_a if side_a >> u & 1 else side_b
        if g.adj[u] & same:
            return None
    complete = all(
        g.adj[u] & side_b == side_b for u in range(g.n) if side_a >> u & 1
    )
    return Bipartition(side_a, side_b, complete)


def recognize_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Part sizes ``(a, b)`` with ``a <= b`` if ``g`` is some K_{a,b}, else ``None``."""
    if not g.is_connected():
        return None
    parts = bipartition(g)
    if parts is None or not parts.complete:
        return None
    a, b = sorted(parts.sizes)
    if a == 0:
        return None
    return a, b


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All labeled simple graphs on ``n`` vertices in increasing edge-mask order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUM_VERTICES:
        raise CorpusTooLargeError(
            f"labeled corpus for n={n} is too large; use sampling or a graph6 file"
        )
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            rest ^= low
        yield Graph._trusted(n, tuple(rows))


@lru_cache(maxsize=None)
def _permuted_bit_weights(n: int) -> np.ndarray:
    # Row p, column b: the power of two that edge bit b maps to under permutation p.
    pairs = vertex_pairs(n)
    index = {pair: b for b, pair in enumerate(pairs)}
    perms = list(permutations(range(n)))
    weights = np.zeros((len(perms), len(pairs)), dtype=np.int64)
    for row, perm in enumerate(perms):
        for b, (i, j) in enumerate(pairs):
            u, v = sorted((perm[i], perm[j]))
            weights[row, b] = 1 << index[(u, v)]
    return weights


def isomorphism_orbit(n: int, mask: int) -> np.ndarray:
    """Edge masks of every relabeling of the graph ``mask`` (one per permutation)."""
    if n > MAX_ENUM_VERTICES:
        raise CorpusTooLargeError(f"brute-force canonical form needs n <= {MAX_ENUM_VERTICES}")
    weights = _permuted_bit_weights(n)
    bits = np.array([mask >> b & 1 for b in range(weights.shape[1])], dtype=np.int64)
    return weights @ bits


def canonical_mask(n: int, mask: int) -> int:
    """Minimal edge mask over all ``n!`` vertex permutations."""
    if n == 1:
        return 0
    return int(isomorphism_orbit(n, mask).min())


def dedup_isomorphs(graphs: Iterable[Graph], n: int) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class.

    The representative is the relabeling with the smallest edge mask.  A
    graph is canonicalized only when its mask has not been seen in the orbit
    of an earlier graph, so the cost is ``n!`` per class rather than per graph.
    """
    if n > MAX_ENUM_VERTICES:
        raise CorpusTooLargeError(f"isomorph removal supports n <= {MAX_ENUM_VERTICES}")
    seen = np.zeros(1 << (n * (n - 1) // 2), dtype=bool)
    for g in graphs:
        if g.n != n:
            raise ValueError(f"expected graphs on {n} vertices, got {g.n}")
        mask = g.edge_mask
        if seen[mask]:
            continue
        if n == 1:
            seen[mask] = True
            yield g
            continue
        orbit = isomorphism_orbit(n, mask)
        seen[orbit] = True
        yield Graph.from_mask(n, int(orbit.min()))


# Named families used throughout the tests, CLI and docs.

def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << u) for u in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with the size-``a`` side on vertices ``0..a-1``."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite_graph(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph._trusted(g.n + h.n, tuple(rows))
