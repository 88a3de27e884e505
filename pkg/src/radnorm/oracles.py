"""Brute-force computations of the proof-side quantities at tiny scale.

These are the independent second routes: sign-bilinear maxima over index
set pairs, the normalized maximum X over all such pairs, connected-subset
enumeration with its Catalan-style count bound, the greedy neighbor cover,
and the dumb exhaustive twin of the 0/1 subgraph search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import CapExceededError, EdgeSet, GraphView, WeightMatrix, power_graph

SIGN_SIDE_CAP = 20
X_SIZE_CAP = 8
ENUM_CAP = 10 ** 6


@dataclass(frozen=True, eq=False)
class SignBilinearResult:
    value: float
    eta_rows: np.ndarray
    eta_cols: np.ndarray


def _sign_patterns(k: int, chunk: int = 1 << 14):
    """Yield +-1 pattern blocks of width k with the first sign pinned to +1."""
    count = 1 << max(k - 1, 0)
    for lo in range(0, count, chunk):
        idx = np.arange(lo, min(lo + chunk, count), dtype=np.uint64)
        bits = (idx[:, None] >> np.arange(k - 1, dtype=np.uint64)[None, :]) & 1
        yield np.concatenate(
            (np.ones((idx.size, 1)), np.where(bits == 0, 1.0, -1.0)), axis=1
        )


def sign_bilinear_max(B: WeightMatrix) -> SignBilinearResult:
    """max over eta, eta' in {-1, +1} of sum_ij b_ij eta_i eta'_j.

    Signs are enumerated on the smaller side (cap 20); the other side's
    optimum is the componentwise sign of the partial sums.  The global
    flip symmetry halves the enumeration.
    """
    b = B.entries
    transposed = b.shape[1] < b.shape[0]
    if transposed:
        b = b.T
    k = b.shape[0]
    if k > SIGN_SIDE_CAP:
        raise CapExceededError(f"smaller side {k} exceeds the cap {SIGN_SIDE_CAP}")
    if b.size == 0 or k == 0:
        return SignBilinearResult(0.0, np.ones(B.n_rows), np.ones(B.n_cols))
    best = -math.inf
    best_eta = np.ones(k)
    for signs in _sign_patterns(k):
        partial = signs @ b  # (patterns, cols)
        vals = np.abs(partial).sum(axis=1)
        i = int(vals.argmax())
        if vals[i] > best:
            best = float(vals[i])
            best_eta = signs[i].copy()
    col_sums = best_eta @ b
    eta_cols = np.where(col_sums >= 0, 1.0, -1.0)
    if transposed:
        return SignBilinearResult(best, eta_cols, best_eta)
    return SignBilinearResult(best, best_eta, eta_cols)


def x_quantity(A_realized: WeightMatrix) -> float:
    """max over nonempty I, J of (|I||J|)^{-1/2} sign_bilinear_max(B[I, J]).

    The realized matrix (weights times signs) is supplied by the caller so
    one realization can feed several paired quantities.  For each I and
    each row-sign pattern the optimal J of size l collects the l largest
    column magnitudes, so J never needs explicit enumeration.
    """
    b = A_realized.entries
    if not A_realized.is_square:
        raise ValueError("the normalized bilinear maximum is defined for square input")
    n = b.shape[0]
    if n > X_SIZE_CAP:
        raise CapExceededError(f"n={n} exceeds the brute-force cap {X_SIZE_CAP}")
    if not b.any():
        return 0.0
    best = 0.0
    inv_sqrt = 1.0 / np.sqrt(np.arange(1, n + 1))
    for mask in range(1, 1 << n):
        rows = [i for i in range(n) if mask >> i & 1]
        sub = b[rows]
        for signs in _sign_patterns(len(rows)):
            partial = np.abs(signs @ sub)  # (patterns, n)
            partial.sort(axis=1)
            prefixes = np.cumsum(partial[:, ::-1], axis=1)
            cand = float((prefixes * inv_sqrt).max()) / math.sqrt(len(rows))
            if cand > best:
                best = cand
    return best


def enumerate_connected(G: GraphView, v: int, k: int, r: int) -> list:
    """All size-k subsets containing v that are connected in the r-th
    distance power of G, each exactly once (as sorted tuples)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not 0 <= v < G.n:
        raise ValueError("v out of range")
    gr = power_graph(G, r)
    results: list = []

    def rec(cur: list, cand: list, seen: set):
        if len(cur) == k:
            results.append(tuple(sorted(cur)))
            if len(results) > ENUM_CAP:
                raise CapExceededError("connected-subset count exceeds the cap")
            return
        for idx, u in enumerate(cand):
            fresh = [w for w in gr.adjacency[u] if w not in seen]
            rec(cur + [u], cand[idx + 1:] + fresh, seen | set(fresh))

    init = list(gr.adjacency[v])
    rec([v], init, {v} | set(init))
    return results


def connected_count_bound(G: GraphView, k: int, r: int) -> float:
    """(4 d)^{k-1} with d the max degree of the r-th power graph."""
    d = power_graph(G, r).max_degree
    return float((4 * d) ** (k - 1)) if k >= 1 else 0.0


def greedy_cover(G: GraphView, I_pool, J_pool, threshold: int) -> tuple:
    """Greedy picks from I_pool, each claiming the most J_pool vertices not
    adjacent to anything already picked.

    Stops before the first pick whose residual count would drop below
    threshold.  Returns (picked, residuals); residuals are nonincreasing,
    len(picked) * residuals[-1] <= |J_pool|, and every unpicked vertex of
    I_pool ends with residual count < threshold.  Ties go to the lowest
    vertex index; a pick exactly at threshold is kept.
    """
    if threshold < 1:
        raise ValueError("threshold must be a positive integer")
    I_pool = sorted(set(int(x) for x in I_pool))
    J_free = set(int(x) for x in J_pool)
    for v in I_pool + sorted(J_free):
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range")
    picked: list = []
    residuals: list = []
    remaining = list(I_pool)
    while remaining:
        best_v = None
        best_count = -1
        for v in remaining:
            count = sum(1 for w in G.adjacency[v] if w in J_free)
            if count > best_count:
                best_count = count
                best_v = v
        if best_count < threshold:
            break
        picked.append(best_v)
        residuals.append(best_count)
        remaining.remove(best_v)
        for w in G.adjacency[best_v]:
            J_free.discard(w)
    return picked, residuals


def subgraph_norm_enum(E: EdgeSet, p: int) -> float:
    """Exhaustive max of ||1_F|| over F subset of E with |F| <= p.

    The dumb oracle twin of the engineered search: every subset of every
    size up to p, nothing clever.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    pairs = list(E.pairs)
    top = min(p, len(pairs))
    if top == 0:
        return 0.0
    total = sum(math.comb(len(pairs), s) for s in range(1, top + 1))
    if total > 2 * ENUM_CAP or math.comb(len(pairs), top) > ENUM_CAP:
        raise CapExceededError("subset count exceeds the enumeration cap")
    best = 0.0
    for size in range(1, top + 1):
        for combo in itertools.combinations(pairs, size):
            rows = sorted({i for i, _ in combo})
            cols = sorted({j for _, j in combo})
            m = np.zeros((len(rows), len(cols)))
            rmap = {x: i for i, x in enumerate(rows)}
            cmap = {x: i for i, x in enumerate(cols)}
            for i, j in combo:
                m[rmap[i], cmap[j]] = 1.0
            val = float(np.linalg.svd(m, compute_uv=False)[0])
            if val > best:
                best = val
    return best
