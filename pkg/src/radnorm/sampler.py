"""Monte Carlo estimation of the mean spectral norm of sign-modulated
matrices, with exact tiny-scale enumeration as the oracle counterpart.

Three modes: independent Rademacher signs per entry, symmetric Rademacher
signs (the lower triangle including the diagonal is drawn and mirrored),
and independent standard Gaussians.  All modes consume the same uniform
stream, so estimates across modes are paired sample by sample.

The per-sample norm exploits block structure: the spectral norm of a
matrix splits over the connected components of its bipartite support, so
block-diagonal families cost only as much as their largest block.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import streams
from .core import WeightMatrix
from .moments import power_mean_estimate

MODES = ("rademacher_iid", "rademacher_symmetric", "gaussian")

#: Element budget for one batch of realization matrices.
_REALIZE_BUDGET = 1 << 24

#: Cap on independent signs in the exact-expectation enumeration.
EXACT_SIGNS_CAP = 24


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int
    mode: str
    p_moments: dict | None = None

    def to_json_dict(self) -> dict:
        d = {
            "mean": self.mean,
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
            "mode": self.mode,
        }
        if self.p_moments is not None:
            d["p_moments"] = {
                str(p): {"estimate": est, "stderr": se}
                for p, (est, se) in sorted(self.p_moments.items())
            }
        return d

    def csv_row(self, matrix_id: str) -> str:
        return (
            f"{matrix_id},{self.mode},{self.samples},{self.seed},"
            f"{self.mean!r},{self.stderr!r}"
        )


def _positions(A: WeightMatrix, mode: str) -> list:
    """Free sign positions in row-major order.

    iid/gaussian: one position per nonzero entry.  symmetric: one position
    per lower-triangle cell (i >= j) whose mirrored pair touches support;
    the diagonal keeps its own independent signs.
    """
    a = A.entries
    if mode in ("rademacher_iid", "gaussian"):
        ii, jj = np.nonzero(a)
        return list(zip(ii.tolist(), jj.tolist()))
    if mode == "rademacher_symmetric":
        if not A.is_square:
            raise ValueError("symmetric mode requires a square matrix")
        mask = (a != 0.0) | (a.T != 0.0)
        ii, jj = np.nonzero(np.tril(mask))
        return list(zip(ii.tolist(), jj.tolist()))
    raise ValueError(f"unknown mode {mode!r}")


def _bipartite_components(A: WeightMatrix, positions: list, mode: str) -> list:
    """Connected components of the bipartite support touched by positions.

    Returns a list of dicts with local row/col index maps and the affected
    position indices, enough to scatter sampled values into compact blocks.
    """
    nr, nc = A.n_rows, A.n_cols
    parent = list(range(nr + nc))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    sym = mode == "rademacher_symmetric"
    for i, j in positions:
        union(i, nr + j)
        if sym:
            union(j, nr + i)
    groups: dict = {}
    for idx, (i, j) in enumerate(positions):
        groups.setdefault(find(i), []).append(idx)
    comps = []
    for pos_idx in groups.values():
        rows, cols = set(), set()
        for idx in pos_idx:
            i, j = positions[idx]
            rows.add(i)
            cols.add(j)
            if sym:
                rows.add(j)
                cols.add(i)
        rows = sorted(rows)
        cols = sorted(cols)
        rmap = {v: li for li, v in enumerate(rows)}
        cmap = {v: lj for lj, v in enumerate(cols)}
        scatter = []  # (position index, local i, local j, weight)
        a = A.entries
        for idx in pos_idx:
            i, j = positions[idx]
            if a[i, j] != 0.0:
                scatter.append((idx, rmap[i], cmap[j], float(a[i, j])))
            if sym and (i, j) != (j, i) and a[j, i] != 0.0:
                scatter.append((idx, rmap[j], cmap[i], float(a[j, i])))
        comps.append(
            {
                "shape": (len(rows), len(cols)),
                "pos": np.array([s[0] for s in scatter], dtype=np.intp),
                "li": np.array([s[1] for s in scatter], dtype=np.intp),
                "lj": np.array([s[2] for s in scatter], dtype=np.intp),
                "w": np.array([s[3] for s in scatter]),
            }
        )
    return comps


def _norm_plan(comps: list) -> list:
    """Group components by shape so same-shaped blocks share one batched
    decomposition; returns per-group concatenated scatter arrays."""
    groups: dict = {}
    for comp in comps:
        groups.setdefault(comp["shape"], []).append(comp)
    plan = []
    for (r, c), group in sorted(groups.items()):
        slot = np.concatenate(
            [np.full(cp["pos"].size, k, dtype=np.intp) for k, cp in enumerate(group)]
        )
        plan.append(
            {
                "shape": (r, c),
                "count": len(group),
                "slot": slot,
                "pos": np.concatenate([cp["pos"] for cp in group]),
                "flat": np.concatenate(
                    [cp["li"] * c + cp["lj"] for cp in group]
                ).astype(np.intp),
                "w": np.concatenate([cp["w"] for cp in group]),
            }
        )
    return plan


def _batch_norms(values: np.ndarray, plan: list) -> np.ndarray:
    """Per-sample spectral norms given sampled values (m, n_positions)."""
    m = values.shape[0]
    out = np.zeros(m)
    for group in plan:
        r, c = group["shape"]
        g = group["count"]
        vals = values[:, group["pos"]] * group["w"]
        if r == 1 and c == 1:
            block = np.zeros((m, g))
            block[:, group["slot"]] = vals
            np.maximum(out, np.abs(block).max(axis=1), out=out)
            continue
        block = np.zeros((m, g, r * c))
        block[:, group["slot"], group["flat"]] = vals
        if r == 1 or c == 1:
            sv = np.sqrt((block * block).sum(axis=2))
        else:
            sv = np.linalg.svd(
                block.reshape(m * g, r, c), compute_uv=False
            )[:, 0].reshape(m, g)
        np.maximum(out, sv.max(axis=1), out=out)
    return out


def _sample_norms(A: WeightMatrix, mode: str, samples: int, seed: int,
                  threads: int = 1) -> np.ndarray:
    positions = _positions(A, mode)
    k = len(positions)
    if k == 0:
        return np.zeros(samples)
    plan = _norm_plan(_bipartite_components(A, positions, mode))
    dense = sum(g["count"] * g["shape"][0] * g["shape"][1] for g in plan)
    sub = max(1, _REALIZE_BUDGET // max(dense, 1))
    norms = np.empty(samples)

    def handle_block(item):
        start, u = item
        vals = (
            streams.gaussians_from_uniform(u)
            if mode == "gaussian"
            else streams.signs_from_uniform(u)
        )
        for lo in range(0, vals.shape[0], sub):
            chunk = vals[lo:lo + sub]
            norms[start + lo:start + lo + chunk.shape[0]] = _batch_norms(chunk, plan)

    blocks = list(streams.uniform_blocks(seed, k, samples))
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(handle_block, blocks))
    else:
        for item in blocks:
            handle_block(item)
    return norms


def mc_norm(A: WeightMatrix, mode: str, samples: int, seed: int,
            threads: int = 1) -> McEstimate:
    """Monte Carlo mean and standard error of ||A o X|| in the given mode."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if samples < 16:
        raise ValueError("need at least 16 samples")
    norms = _sample_norms(A, mode, samples, seed, threads)
    stderr = float(norms.std(ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    return McEstimate(float(norms.mean()), stderr, samples, seed, mode)


def mc_norm_moments(A: WeightMatrix, p_list, samples: int, seed: int,
                    mode: str = "rademacher_iid", threads: int = 1) -> McEstimate:
    """mc_norm plus (E ||A o X||^p)^{1/p} estimates for each requested p.

    All moments are read off the same sampled norms, so the mean and every
    moment share their random numbers.
    """
    p_list = [float(p) for p in p_list]
    for p in p_list:
        if not 1.0 <= p <= 64.0:
            raise ValueError("each p must lie in [1, 64]")
    if samples < 100:
        raise ValueError("need at least 100 samples")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    norms = _sample_norms(A, mode, samples, seed, threads)
    stderr = float(norms.std(ddof=1) / math.sqrt(samples))
    moments = {p: power_mean_estimate(norms, p) for p in p_list}
    return McEstimate(float(norms.mean()), stderr, samples, seed, mode, moments)


def exact_small_norm_expectation(A: WeightMatrix, mode: str) -> float:
    """Exact E ||A o eps|| by exhausting every sign pattern.

    Only Rademacher modes enumerate; the cap is 24 independent signs.  The
    global sign flip preserves the norm, so half the patterns suffice.
    """
    if mode not in ("rademacher_iid", "rademacher_symmetric"):
        raise ValueError("exact enumeration supports the Rademacher modes only")
    positions = _positions(A, mode)
    k = len(positions)
    if k == 0:
        return 0.0
    if k > EXACT_SIGNS_CAP:
        raise ValueError(f"{k} independent signs exceed the cap {EXACT_SIGNS_CAP}")
    plan = _norm_plan(_bipartite_components(A, positions, mode))
    count = 1 << (k - 1)
    total = 0.0
    chunk = 8192
    for lo in range(0, count, chunk):
        idx = np.arange(lo, min(lo + chunk, count), dtype=np.uint64)
        bits = (idx[:, None] >> np.arange(k - 1, dtype=np.uint64)[None, :]) & 1
        signs = np.concatenate(
            (np.ones((idx.size, 1)), np.where(bits == 0, 1.0, -1.0)), axis=1
        )
        total += float(_batch_norms(signs, plan).sum())
    return total / count
