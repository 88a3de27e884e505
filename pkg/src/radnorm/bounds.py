"""Named norm bounds and the R_A(p) machinery.

Everything a bound profile needs: the Seginer and Bandeira-van Handel
closed forms, the trivial degree bound, exact combinatorial evaluation of
the subgraph form of R_A(p) for 0/1 matrices (branch and bound over
connected edge subsets), a surrogate-ascent heuristic bracket for general
weights, and the k-sweep term max_k min_{|I| <= k} R(Log k) of the
two-sided profile.

Values that are only correct up to universal constants carry
loose_constants=True; nothing here silently presents a surrogate as
sharp.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import EdgeSet, WeightMatrix, derive_graph, log_clamped
from .moments import hitczenko_surrogate, water_fill
from .spectral import max_row_col_l2
from . import streams


@dataclass(frozen=True)
class EngineConfig:
    """Tuning knobs for the search-based estimators."""

    exact_threshold: int = 2000     # inner-min enumeration budget (subsets)
    budget_cap: int = 200_000       # branch-and-bound node budget
    restarts: int = 3               # random ascent restarts
    seed: int = 0
    c0: float = 1.0                 # crude upper-cap constant, reported verbatim
    greedy_step_cap: int = 256      # greedy removal chain length cap
    shortlist_size: int = 32        # candidate removals scored per greedy step
    exact_full_n: int = 16          # full estimator inside enumeration up to this n


@dataclass(frozen=True, eq=False)
class RBracket:
    """Bracket [lower, upper] for R_A(p) with the witnesses behind lower.

    exact01 mode: lower == upper == the exact subgraph-search value when
    certified; a budget-truncated search keeps lower at the best value
    found and upper at a cheap valid cap, certified=False.
    heuristic mode: lower is a surrogate value (constant-level only) and
    upper is the crude cap c0 (row + col + sqrt(p) max|a|); both carry
    loose_constants=True.
    """

    p: float
    lower: float
    upper: float
    witness_s: np.ndarray
    witness_t: np.ndarray
    mode: str
    certified: bool = True
    loose_constants: bool = False

    def __post_init__(self):
        if not (-1e-12 <= self.lower <= self.upper + 1e-9):
            raise ValueError(f"bracket disorder: [{self.lower}, {self.upper}]")
        for w in (self.witness_s, self.witness_t):
            if np.linalg.norm(w) > 1.0 + 1e-12:
                raise ValueError("witness vectors must be unit or shorter")

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "lower": self.lower,
            "upper": self.upper,
            "mode": self.mode,
            "certified": self.certified,
            "loose_constants": self.loose_constants,
        }


def seginer_bound(A: WeightMatrix) -> float:
    """(Log n)^{1/4} (max row L2 + max col L2)."""
    if not A.is_square:
        raise ValueError("bound defined for square matrices")
    row, col = max_row_col_l2(A)
    return log_clamped(A.n_rows) ** 0.25 * (row + col)


def bvh_bound(A: WeightMatrix) -> float:
    """max row L2 + max col L2 + sqrt(Log n) max |a_ij|."""
    if not A.is_square:
        raise ValueError("bound defined for square matrices")
    row, col = max_row_col_l2(A)
    return row + col + math.sqrt(log_clamped(A.n_rows)) * A.max_abs()


def trivial_degree_bound(A: WeightMatrix) -> float:
    """d_A times the largest off-diagonal |a_ij| (support degree bound)."""
    if not A.is_square:
        raise ValueError("bound defined for square matrices")
    d = derive_graph(A).max_degree
    return d * A.off_diagonal_max_abs()


# ---------------------------------------------------------------------------
# exact 0/1 subgraph search


def _pairs_compact(pairs) -> tuple:
    rows = sorted({i for i, _ in pairs})
    cols = sorted({j for _, j in pairs})
    rmap = {v: k for k, v in enumerate(rows)}
    cmap = {v: k for k, v in enumerate(cols)}
    m = np.zeros((len(rows), len(cols)))
    for i, j in pairs:
        m[rmap[i], cmap[j]] = 1.0
    return m, rows, cols


def _pairs_value(pairs) -> float:
    """Spectral norm of the 0/1 indicator of `pairs`."""
    if not pairs:
        return 0.0
    m, _, _ = _pairs_compact(pairs)
    return float(np.linalg.svd(m, compute_uv=False)[0])


def _pairs_norm(pairs, n: int) -> tuple:
    """Spectral norm of the 0/1 indicator of `pairs`, with witnesses
    embedded into length-n vectors."""
    if not pairs:
        return 0.0, np.zeros(n), np.zeros(n)
    m, rows, cols = _pairs_compact(pairs)
    u, sv, vt = np.linalg.svd(m)
    s = np.zeros(n)
    t = np.zeros(n)
    s[rows] = u[:, 0]
    t[cols] = vt[0]
    return float(sv[0]), s, t


class _BudgetExhausted(Exception):
    pass


class _SubsetSearch:
    """Branch and bound over connected edge subsets of size <= m.

    The optimum is attained on a subset that is connected in the
    edge-adjacency sense (sharing a row or a column index), since the norm
    of a block-diagonal arrangement is the largest block norm.  Subsets
    are enumerated once each, rooted at their smallest edge index, and
    pruned against the best value found so far.
    """

    def __init__(self, pairs: list, m: int, node_cap: int):
        self.pairs = pairs
        self.m = m
        self.node_cap = node_cap
        self.nodes = 0
        self.best = 0.0
        self.best_set: tuple = ()
        by_row: dict = {}
        by_col: dict = {}
        for e, (i, j) in enumerate(pairs):
            by_row.setdefault(i, []).append(e)
            by_col.setdefault(j, []).append(e)
        self.nbr = []
        for e, (i, j) in enumerate(pairs):
            s = set(by_row[i]) | set(by_col[j])
            s.discard(e)
            self.nbr.append(sorted(s))
        self.row_counts = by_row
        self.col_counts = by_col

    def offer(self, subset: list):
        rc: dict = {}
        cc: dict = {}
        for e in subset:
            i, j = self.pairs[e]
            rc[i] = rc.get(i, 0) + 1
            cc[j] = cc.get(j, 0) + 1
        cheap = math.sqrt(min(len(subset), max(rc.values()) * max(cc.values())))
        if cheap <= self.best + 1e-12:
            return
        val = _pairs_value([self.pairs[e] for e in subset])
        if val > self.best + 1e-12:
            self.best = val
            self.best_set = tuple(subset)

    def run(self, global_cap: float) -> bool:
        """Explore; returns True when the search ran to completion."""
        try:
            for root in range(len(self.pairs)):
                if self.best >= global_cap - 1e-12:
                    return True
                cand = [f for f in self.nbr[root] if f > root]
                self._rec([root], cand, set(cand) | {root})
        except _BudgetExhausted:
            return False
        return True

    def _rec(self, cur: list, cand: list, seen: set):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise _BudgetExhausted
        if len(cur) == self.m or not cand:
            self.offer(cur)
            return
        root = cur[0]
        for idx, f in enumerate(cand):
            fresh = [g for g in self.nbr[f] if g > root and g not in seen]
            self._rec(cur + [f], cand[idx + 1:] + fresh, seen | set(fresh))


def r_exact_01(E: EdgeSet, p: float, budget_cap: int = 200_000) -> RBracket:
    """max over F subset of E, |F| <= floor(p), of ||1_F||.

    Exhaustive when the subset count fits the budget, otherwise branch and
    bound over connected subsets.  A truncated search returns the best
    value found with certified=False and a valid cheap cap as upper.
    """
    if math.floor(p) < 1:
        raise ValueError("p must satisfy floor(p) >= 1")
    n = E.n
    pairs = list(E.pairs)
    m = min(int(math.floor(p)), len(pairs))
    if m == 0:
        z = np.zeros(n)
        return RBracket(float(p), 0.0, 0.0, z, z, "exact01")

    if m >= len(pairs):
        full_val, full_s, full_t = _pairs_norm(pairs, n)
        return RBracket(float(p), full_val, full_val, full_s, full_t, "exact01")

    row_counts: dict = {}
    col_counts: dict = {}
    for i, j in pairs:
        row_counts[i] = row_counts.get(i, 0) + 1
        col_counts[j] = col_counts.get(j, 0) + 1
    rmax = max(row_counts.values())
    cmax = max(col_counts.values())
    global_cap = min(math.sqrt(m), math.sqrt(min(rmax, m) * min(cmax, m)))

    # star seed: the densest row or column already achieves sqrt(size)
    if rmax >= cmax:
        i_star = max(row_counts, key=lambda i: (row_counts[i], -i))
        star = [e for e, (i, _) in enumerate(pairs) if i == i_star][:m]
    else:
        j_star = max(col_counts, key=lambda j: (col_counts[j], -j))
        star = [e for e, (_, j) in enumerate(pairs) if j == j_star][:m]
    best_val = math.sqrt(len(star))
    best_set = tuple(star)

    if best_val >= global_cap - 1e-12:
        val, s, t = _pairs_norm([pairs[e] for e in best_set], n)
        return RBracket(float(p), val, val, s, t, "exact01")

    # the whole-set norm tightens the cap when it is cheap to get
    if len(row_counts) <= 512 and len(col_counts) <= 512:
        global_cap = min(global_cap, _pairs_value(pairs))
        if best_val >= global_cap - 1e-12:
            val, s, t = _pairs_norm([pairs[e] for e in best_set], n)
            return RBracket(float(p), val, val, s, t, "exact01")

    if math.comb(len(pairs), m) <= budget_cap:
        for combo in itertools.combinations(range(len(pairs)), m):
            val = _pairs_value([pairs[e] for e in combo])
            if val > best_val + 1e-12:
                best_val, best_set = val, combo
        val, s, t = _pairs_norm([pairs[e] for e in best_set], n)
        return RBracket(float(p), val, val, s, t, "exact01")

    search = _SubsetSearch(pairs, m, budget_cap)
    search.best = best_val
    search.best_set = best_set
    complete = search.run(global_cap)
    val, s, t = _pairs_norm([pairs[e] for e in search.best_set], n)
    if complete:
        return RBracket(float(p), val, val, s, t, "exact01")
    return RBracket(float(p), val, global_cap, s, t, "exact01", certified=False)


# ---------------------------------------------------------------------------
# heuristic bracket for general weights


def _top_pair(a: np.ndarray) -> tuple:
    """Approximate top singular pair; exact SVD for small sides."""
    if max(a.shape) <= 512:
        u, sv, vt = np.linalg.svd(a)
        return u[:, 0].copy(), vt[0].copy()
    v = np.ones(a.shape[1]) + 1e-3 * np.arange(a.shape[1]) / max(a.shape[1] - 1, 1)
    v /= np.linalg.norm(v)
    for _ in range(40):
        w = a.T @ (a @ v)
        nw = np.linalg.norm(w)
        if nw == 0.0:
            break
        v = w / nw
    u = a @ v
    nu = np.linalg.norm(u)
    if nu > 0:
        u = u / nu
    return u, v


def _surrogate_at(a: np.ndarray, s: np.ndarray, t: np.ndarray, p: float) -> float:
    c = a * np.outer(s, t)
    return hitczenko_surrogate(c.ravel(), p).total


def _ascent_seeds(a: np.ndarray, restarts: int, seed: int) -> list:
    nr, nc = a.shape
    seeds = []
    u, v = _top_pair(a)
    seeds.append((u, v))
    flat_i = np.abs(a).argmax() // nc
    flat_j = np.abs(a).argmax() % nc
    ei = np.zeros(nr)
    ei[flat_i] = 1.0
    ej = np.zeros(nc)
    ej[flat_j] = 1.0
    seeds.append((ei, ej))
    # basis row / basis column pairs at the heaviest row and column
    rnorm = np.sqrt((a * a).sum(axis=1))
    cnorm = np.sqrt((a * a).sum(axis=0))
    i0 = int(rnorm.argmax())
    j0 = int(cnorm.argmax())
    if rnorm[i0] > 0:
        e = np.zeros(nr)
        e[i0] = 1.0
        seeds.append((e, np.abs(a[i0]) / rnorm[i0]))
    if cnorm[j0] > 0:
        e = np.zeros(nc)
        e[j0] = 1.0
        seeds.append((np.abs(a[:, j0]) / cnorm[j0], e))
    # flat vectors on the support level sets
    rsup = (a != 0).any(axis=1)
    csup = (a != 0).any(axis=0)
    if rsup.any() and csup.any():
        s = rsup / math.sqrt(rsup.sum())
        t = csup / math.sqrt(csup.sum())
        seeds.append((s.astype(float), t.astype(float)))
    for r in range(restarts):
        seeds.append(
            (streams.unit_vector(seed, nr, 2 * r), streams.unit_vector(seed, nc, 2 * r + 1))
        )
    return seeds


def r_heuristic(A: WeightMatrix, p: float, restarts: int = 3, seed: int = 0,
                max_iters: int = 20, c0: float = 1.0) -> RBracket:
    """Surrogate bracket for R_A(p) on general weights.

    lower: best head-plus-tail surrogate over unit pairs explored by
    alternating ascent (optimal dual weights by water-filling, then the
    top singular pair of the reweighted matrix).  upper: the crude cap
    c0 (row_max + col_max + sqrt(p) max|a|).  Both are constant-level
    values; loose_constants is always set.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    if restarts < 1:
        raise ValueError("restarts must be positive")
    a = A.entries
    nr, nc = a.shape
    row, col = max_row_col_l2(A)
    upper = c0 * (row + col + math.sqrt(p) * A.max_abs())
    if not a.any():
        z_s, z_t = np.zeros(nr), np.zeros(nc)
        return RBracket(float(p), 0.0, 0.0, z_s, z_t, "heuristic",
                        certified=False, loose_constants=True)

    best_val = 0.0
    best_pair = (np.zeros(nr), np.zeros(nc))
    for s, t in _ascent_seeds(a, restarts, seed):
        val = _surrogate_at(a, s, t, p)
        if val > best_val:
            best_val, best_pair = val, (s.copy(), t.copy())
        obj_prev = -1.0
        for _ in range(max_iters):
            c = a * np.outer(s, t)
            star = np.sort(np.abs(c.ravel()))[::-1]
            order = np.argsort(-np.abs(c.ravel()), kind="stable")
            _, b_sorted = water_fill(star, p)
            b = np.empty(c.size)
            b[order] = b_sorted
            b = np.sign(c.ravel()) * b
            weighted = a * b.reshape(a.shape)
            s, t = _top_pair(weighted)
            obj = float(s @ weighted @ t)
            val = _surrogate_at(a, s, t, p)
            if val > best_val:
                best_val, best_pair = val, (s.copy(), t.copy())
            if obj <= obj_prev * (1 + 1e-10) + 1e-12:
                break
            obj_prev = obj
    return RBracket(float(p), best_val, upper, best_pair[0], best_pair[1],
                    "heuristic", certified=False, loose_constants=True)


def r_estimate(A: WeightMatrix, p: float, config: EngineConfig = EngineConfig()) -> RBracket:
    """Dispatch: exact combinatorial bracket for 0/1 square matrices,
    surrogate ascent otherwise."""
    if A.is_square and A.is_zero_one():
        return r_exact_01(EdgeSet.from_matrix(A), p, config.budget_cap)
    return r_heuristic(A, p, restarts=config.restarts, seed=config.seed,
                       c0=config.c0)


# ---------------------------------------------------------------------------
# k-sweep term


def _quick_r_lower(a: np.ndarray, p: float) -> tuple:
    """Cheap surrogate value at an approximate top pair (for search only)."""
    if not a.any():
        return 0.0, None
    v = np.ones(a.shape[1]) + 1e-3 * np.arange(a.shape[1]) / max(a.shape[1] - 1, 1)
    v /= np.linalg.norm(v)
    for _ in range(6):
        w = a.T @ (a @ v)
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0, None
        v = w / nw
    u = a @ v
    nu = np.linalg.norm(u)
    if nu == 0.0:
        return 0.0, None
    u = u / nu
    return _surrogate_at(a, u, v, p), (u, v)


def _proxy_after_removal(a: np.ndarray, pair, z: int, p: float) -> float:
    """Surrogate at the current witness with row/col z zeroed out."""
    if pair is None:
        return 0.0
    u, v = pair
    u2 = u.copy()
    v2 = v.copy()
    u2[z] = 0.0
    v2[z] = 0.0
    nu, nv = np.linalg.norm(u2), np.linalg.norm(v2)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return _surrogate_at(a, u2 / nu, v2 / nv, p)


def _submatrix(A: WeightMatrix, keep: list) -> WeightMatrix:
    sub = A.entries[np.ix_(keep, keep)]
    return WeightMatrix(sub, symmetric=A.symmetric)


def _zero_one_pairs(sub: np.ndarray) -> EdgeSet:
    ii, jj = np.nonzero(sub)
    return EdgeSet(sub.shape[0], tuple(zip(ii.tolist(), jj.tolist())))


def _full_estimate(A: WeightMatrix, keep: list, p: float, config: EngineConfig) -> float:
    if not keep:
        return 0.0
    sub = _submatrix(A, keep)
    if not sub.entries.any():
        return 0.0
    if sub.is_zero_one():
        return r_exact_01(EdgeSet.from_matrix(sub), p, config.budget_cap).lower
    return r_heuristic(sub, p, restarts=max(1, config.restarts - 1),
                       seed=config.seed, max_iters=8, c0=config.c0).lower


def _search_score(sub: np.ndarray, drop: int | None, p: float, pair,
                  zero_one: bool, config: EngineConfig) -> float:
    """Cheap but faithful score of the R estimate after dropping `drop`.

    0/1 submatrices use the real subgraph search with a reduced node
    budget; weighted ones fall back to the surrogate at the frozen
    witness pair (zeroing the dropped coordinate).
    """
    if drop is not None and not zero_one:
        return _proxy_after_removal(sub, pair, drop, p)
    if drop is not None:
        keep = [i for i in range(sub.shape[0]) if i != drop]
        sub = sub[np.ix_(keep, keep)]
    if not sub.any():
        return 0.0
    if zero_one:
        budget = max(2000, config.budget_cap // 100)
        return r_exact_01(_zero_one_pairs(sub), p, budget).lower
    val, _ = _quick_r_lower(sub, p)
    return val


def _greedy_chain(A: WeightMatrix, p: float, steps: int, config: EngineConfig) -> list:
    """Deterministic chain of single-index removals, most-reducing first.

    Candidates are shortlisted by row-plus-column mass and scored by a
    cheap version of the R estimate after the removal (the real subgraph
    search for 0/1 weights, a frozen-witness surrogate otherwise), ties to
    the lowest index.  Returns the removal order (length <= steps).
    """
    n = A.n_rows
    zero_one = A.is_zero_one()
    keep = list(range(n))
    removed = []
    a = A.entries
    for _ in range(steps):
        if not keep:
            break
        sub = a[np.ix_(keep, keep)]
        if not sub.any():
            removed.extend(keep.copy())
            del keep[:]
            break
        pair = None
        if not zero_one:
            _, pair = _quick_r_lower(sub, p)
        mass = (sub * sub).sum(axis=1) + (sub * sub).sum(axis=0)
        if len(keep) > config.shortlist_size:
            shortlist_local = np.argsort(-mass, kind="stable")[: config.shortlist_size]
            shortlist_local = sorted(int(z) for z in shortlist_local)
        else:
            shortlist_local = list(range(len(keep)))
        best_score = math.inf
        best_local = shortlist_local[0]
        for z in shortlist_local:
            score = _search_score(sub, z, p, pair, zero_one, config)
            if score < best_score - 1e-12:
                best_score = score
                best_local = z
        removed.append(keep[best_local])
        del keep[best_local]
    return removed


def ksweep_term(A: WeightMatrix, config: EngineConfig = EngineConfig()) -> tuple:
    """max over the doubling k-grid of min_{|I| <= k} R(submatrix, Log k).

    Returns (value, table); each table row records the grid point, the
    removal set it settled on (1-based), the published min, and how the
    min was obtained (exact, enumerated, greedy, greedy_truncated).  The
    published min for a given moment Log k never increases as k grows.
    """
    if not A.is_square:
        raise ValueError("k-sweep needs a square matrix")
    n = A.n_rows
    ks = []
    k = 1
    while k < n:
        ks.append(k)
        k *= 2
    ks.append(n)
    table = []
    chains: dict = {}
    published: dict = {}  # p -> best (smallest) value so far at that moment
    for k in ks:
        p = log_clamped(k)
        msize = min(k, n)
        if k >= n:
            removed = list(range(n))
            value, mode = 0.0, "exact"
        elif math.comb(n, msize) <= config.exact_threshold and n <= config.exact_full_n:
            value = math.inf
            removed = []
            for combo in itertools.combinations(range(n), msize):
                keep = [i for i in range(n) if i not in set(combo)]
                v = _full_estimate(A, keep, p, config)
                if v < value - 1e-12:
                    value = v
                    removed = list(combo)
            mode = "exact"
        elif math.comb(n, msize) <= config.exact_threshold:
            zero_one = A.is_zero_one()
            best_proxy = math.inf
            removed = []
            for combo in itertools.combinations(range(n), msize):
                keep = [i for i in range(n) if i not in set(combo)]
                sub = A.entries[np.ix_(keep, keep)]
                v = _search_score(sub, None, p, None, zero_one, config)
                if v < best_proxy - 1e-12:
                    best_proxy = v
                    removed = list(combo)
            keep = [i for i in range(n) if i not in set(removed)]
            value = _full_estimate(A, keep, p, config)
            mode = "enumerated"
        else:
            steps = min(msize, config.greedy_step_cap)
            chain = chains.get(p)
            if chain is None or len(chain) < steps:
                chain = _greedy_chain(A, p, steps, config)
                chains[p] = chain
            removed = chain[:steps]
            keep = [i for i in range(n) if i not in set(removed)]
            value = _full_estimate(A, keep, p, config)
            mode = "greedy" if steps >= msize else "greedy_truncated"
        if p in published:
            value = min(value, published[p])
        published[p] = value
        table.append(
            {
                "k": k,
                "moment": p,
                "removed": [i + 1 for i in removed],
                "value": value,
                "mode": mode,
            }
        )
    value = max(row["value"] for row in table)
    return value, table


# ---------------------------------------------------------------------------
# the assembled profile


@dataclass(frozen=True, eq=False)
class BoundProfile:
    """Every bound term for one matrix, plus the two-sided profile value.

    lower_profile and conjectured_upper_profile share the same right-hand
    side (row_max + col_max + k-sweep term); only the direction of the
    comparison with E||A o eps|| differs, and both hold up to universal
    constants only.
    """

    n: int
    row_max: float
    col_max: float
    max_abs: float
    degree: int
    seginer: float
    bvh: float
    trivial_degree: float
    r_logn: RBracket
    ksweep_value: float
    ksweep_table: list
    lower_profile: float
    conjectured_upper_profile: float
    loglog_degree_upper: float
    logloglog_upper: float
    mode: str
    loose_constants: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "row_max": self.row_max,
            "col_max": self.col_max,
            "max_abs": self.max_abs,
            "degree": self.degree,
            "seginer": self.seginer,
            "bvh": self.bvh,
            "trivial_degree": self.trivial_degree,
            "r_logn": self.r_logn.to_json_dict(),
            "ksweep": {"value": self.ksweep_value, "table": self.ksweep_table},
            "lower_profile": self.lower_profile,
            "conjectured_upper_profile": self.conjectured_upper_profile,
            "loglog_degree_upper": self.loglog_degree_upper,
            "logloglog_upper": self.logloglog_upper,
            "flags": {
                "mode": self.mode,
                "loose_constants": self.loose_constants,
                "grid": [row["k"] for row in self.ksweep_table],
            },
        }


def bound_profile(A: WeightMatrix, config: EngineConfig = EngineConfig()) -> BoundProfile:
    """Evaluate every named bound and the two-sided profile for A."""
    if not A.is_square:
        raise ValueError("bound profiles are defined for square matrices")
    n = A.n_rows
    row, col = max_row_col_l2(A)
    degree = derive_graph(A).max_degree
    r_logn = r_estimate(A, log_clamped(n), config)
    ks_value, ks_table = ksweep_term(A, config)
    profile = row + col + ks_value
    loglog_d = log_clamped(log_clamped(degree))
    logloglog_n = log_clamped(log_clamped(log_clamped(n)))
    return BoundProfile(
        n=n,
        row_max=row,
        col_max=col,
        max_abs=A.max_abs(),
        degree=degree,
        seginer=seginer_bound(A),
        bvh=bvh_bound(A),
        trivial_degree=trivial_degree_bound(A),
        r_logn=r_logn,
        ksweep_value=ks_value,
        ksweep_table=ks_table,
        lower_profile=profile,
        conjectured_upper_profile=profile,
        loglog_degree_upper=loglog_d * (row + r_logn.upper),
        logloglog_upper=logloglog_n * (row + col + r_logn.upper),
        mode=r_logn.mode,
        loose_constants=r_logn.loose_constants or not r_logn.certified,
    )
