"""Compiled inner loops for the exact oracles and the eigensolver.

Bitset kernels take adjacency rows as an ``int64`` array and assume
``n <= 24`` so every subset fits comfortably in a signed word.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def jacobi_eigh(a_in, tol, max_sweeps):
    """Cyclic Jacobi rotations on a symmetric matrix.

    Returns ``(diagonal, eigenvectors, sweeps, converged)``.  Convergence is
    declared at the start of a sweep once the off-diagonal Frobenius norm is
    below ``tol * (1 + ||A||_F)``.
    """
    n = a_in.shape[0]
    a = a_in.copy()
    v = np.eye(n)
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    threshold = tol * (1.0 + math.sqrt(fro))

    sweep = 0
    while True:
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        if math.sqrt(2.0 * off) < threshold:
            return np.diag(a).copy(), v, sweep, True
        if sweep == max_sweeps:
            return np.diag(a).copy(), v, sweep, False
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq


@njit(cache=True)
def hamiltonian_cycle_exists(adj, n):
    # reach[S >> 1] for subsets S containing vertex 0: endpoints v of paths
    # that start at 0 and visit exactly S.
    if n < 3:
        return False
    size = 1 << (n - 1)
    reach = np.zeros(size, dtype=np.int32)
    reach[0] = 1
    for idx in range(1, size):
        subset = (idx << 1) | 1
        r = 0
        for v in range(1, n):
            bit = 1 << v
            if subset & bit and reach[(subset ^ bit) >> 1] & adj[v]:
                r |= bit
        reach[idx] = r
    return (reach[size - 1] & adj[0]) != 0


@njit(cache=True)
def hamiltonian_path_exists(adj, n):
    if n == 1:
        return True
    size = 1 << n
    reach = np.zeros(size, dtype=np.int32)
    for subset in range(1, size):
        if subset & (subset - 1) == 0:
            reach[subset] = subset
            continue
        r = 0
        for v in range(n):
            bit = 1 << v
            if subset & bit and reach[subset ^ bit] & adj[v]:
                r |= bit
        reach[subset] = r
    return reach[size - 1] != 0


@njit(cache=True)
def longest_cycle(adj, n):
    # Every cycle is counted once, from the path DP anchored at its
    # minimum-index vertex.
    size = 1 << n
    reach = np.zeros(size, dtype=np.int32)
    best = 0
    for subset in range(1, size):
        low = subset & -subset
        if subset == low:
            reach[subset] = subset
            continue
        anchor = 0
        while (low >> anchor) != 1:
            anchor += 1
        r = 0
        count = 1
        for v in range(anchor + 1, n):
            bit = 1 << v
            if subset & bit:
                count += 1
                if reach[subset ^ bit] & adj[v]:
                    r |= bit
        reach[subset] = r
        if count >= 3 and count > best and (r & adj[anchor]) != 0:
            best = count
    return best


@njit(cache=True)
def _augmenting_flow(base, source, sink, limit):
    m = base.shape[0]
    cap = base.copy()
    parent = np.empty(m, dtype=np.int64)
    queue = np.empty(m, dtype=np.int64)
    flow = 0
    while flow < limit:
        for i in range(m):
            parent[i] = -1
        parent[source] = source
        head = 0
        tail = 1
        queue[0] = source
        while head < tail and parent[sink] < 0:
            u = queue[head]
            head += 1
            for w in range(m):
                if parent[w] < 0 and cap[u, w] > 0:
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
        if parent[sink] < 0:
            break
        w = sink
        while w != source:
            u = parent[w]
            cap[u, w] -= 1
            cap[w, u] += 1
            w = u
        flow += 1
    return flow


@njit(cache=True)
def vertex_connectivity(adjm):
    """Minimum over non-adjacent pairs of the number of internally disjoint paths.

    Vertex ``v`` is split into ``2v`` (in) and ``2v + 1`` (out) joined by a
    unit arc; every edge becomes two arcs of capacity ``n``.
    """
    n = adjm.shape[0]
    delta = n
    complete = True
    for u in range(n):
        d = 0
        for v in range(n):
            d += adjm[u, v]
        if d < delta:
            delta = d
        if d != n - 1:
            complete = False
    if complete:
        return n - 1

    seen = np.zeros(n, dtype=np.bool_)
    stack = np.empty(n, dtype=np.int64)
    seen[0] = True
    stack[0] = 0
    top = 1
    count = 1
    while top > 0:
        top -= 1
        u = stack[top]
        for v in range(n):
            if adjm[u, v] and not seen[v]:
                seen[v] = True
                stack[top] = v
                top += 1
                count += 1
    if count < n:
        return 0

    base = np.zeros((2 * n, 2 * n), dtype=np.int32)
    for v in range(n):
        base[2 * v, 2 * v + 1] = 1
        for w in range(n):
            if adjm[v, w]:
                base[2 * v + 1, 2 * w] = n
    best = delta
    for s in range(n):
        for t in range(s + 1, n):
            if adjm[s, t]:
                continue
            f = _augmenting_flow(base, 2 * s + 1, 2 * t, best)
            if f < best:
                best = f
    return best
