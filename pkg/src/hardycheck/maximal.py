"""Discrete Hardy–Littlewood maximal operators and empirical type constants.

Balls are node sets ``{y : |y - x| <= r}`` clipped to the box, with measure
``count * h**n``.  Radii run over ``r = m h`` for ``m = 0 .. max_radius``;
``m = 0`` is the single-node ball, i.e. every radius below ``h``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import maximum_filter1d

from .grid import GridFunction, GridSpec, lp_norm

CENTERED = "centered"
UNCENTERED = "uncentered"

# Work-array budget (in float64 entries) for the 1-D interval sweep.
_SWEEP_BLOCK = 1 << 22


@dataclass(frozen=True)
class MaximalConfig:
    mode: str = CENTERED
    max_radius: int | None = None  # in cells; None means N

    def __post_init__(self):
        if self.mode not in (CENTERED, UNCENTERED):
            raise ValueError(f"mode must be {CENTERED!r} or {UNCENTERED!r}")
        if self.max_radius is not None and self.max_radius < 1:
            raise ValueError("max_radius must be >= 1")

    def radii(self, spec: GridSpec) -> range:
        return range(0, (self.max_radius or spec.N) + 1)


def _ball_rows(n: int, m: int):
    """Leading-axis offsets of the discrete ball of radius ``m`` with their row half-widths."""
    for d in itertools.product(range(-m, m + 1), repeat=n - 1):
        rest = m * m - sum(x * x for x in d)
        if rest >= 0:
            yield d, math.isqrt(rest)


def _shifted(src: np.ndarray, d: tuple[int, ...], fill: float) -> np.ndarray:
    """``out[x] = src[x + d]`` on the leading axes, ``fill`` where out of range."""
    out = np.full_like(src, fill)
    dst_idx, src_idx = [], []
    for k, N in zip(d, src.shape):
        dst_idx.append(slice(max(-k, 0), N - max(k, 0)))
        src_idx.append(slice(max(k, 0), N - max(-k, 0)))
    out[tuple(dst_idx)] = src[tuple(src_idx)]
    return out


def ball_averages(f: GridFunction, m: int) -> np.ndarray:
    """Average of ``|f|`` over the clipped ball of radius ``m`` cells around every node."""
    a = np.abs(f.values)
    N, n = f.spec.N, f.spec.n
    prefix = np.concatenate([np.zeros(a.shape[:-1] + (1,)), np.cumsum(a, axis=-1)], axis=-1)
    idx = np.arange(N)
    total = np.zeros_like(a)
    count = np.zeros(a.shape)
    lead_ones = np.ones(a.shape[:-1] + (N,))
    for d, w in _ball_rows(n, m):
        lo = np.maximum(idx - w, 0)
        hi = np.minimum(idx + w, N - 1) + 1
        seg = prefix[..., hi] - prefix[..., lo]
        if d:
            total += _shifted(seg, d, 0.0)
            count += _shifted(lead_ones, d, 0.0) * (hi - lo)
        else:
            total += seg
            count += hi - lo
    return total / count


def maximal_centered(f: GridFunction, cfg: MaximalConfig | None = None) -> GridFunction:
    """Sup over the radius set of ball averages of ``|f|`` centered at each node."""
    cfg = cfg or MaximalConfig()
    out = np.abs(f.values).copy()  # m = 0
    for m in cfg.radii(f.spec)[1:]:
        np.maximum(out, ball_averages(f, m), out=out)
    return f.with_values(out)


def _interval_sweep(a: np.ndarray, max_len: int | None) -> np.ndarray:
    """Exact 1-D uncentered maximal function over all node intervals ``[lo, hi]``.

    Intervals longer than ``max_len`` nodes are skipped when a cap is given.
    """
    N = a.size
    prefix = np.concatenate([[0.0], np.cumsum(a)])
    out = np.full(N, -np.inf)
    idx = np.arange(N)
    block = max(1, _SWEEP_BLOCK // N)
    for lo0 in range(0, N, block):
        lo = np.arange(lo0, min(lo0 + block, N))[:, None]
        length = idx[None, :] - lo + 1
        avg = (prefix[None, 1:] - prefix[lo]) / np.where(length > 0, length, 1)
        bad = length <= 0
        if max_len is not None:
            bad |= length > max_len
        avg[bad] = -np.inf
        # best[lo, i] = max over hi >= i of avg[lo, hi]
        best = np.maximum.accumulate(avg[:, ::-1], axis=1)[:, ::-1]
        best[idx[None, :] < lo] = -np.inf
        np.maximum(out, best.max(axis=0), out=out)
    return out


def maximal_uncentered(f: GridFunction, cfg: MaximalConfig | None = None) -> GridFunction:
    """Sup of averages of ``|f|`` over balls containing each node.

    In one dimension every node interval containing x is enumerated.  For
    n >= 2 the candidates are grid-centered balls of the radius set that
    contain x.
    """
    cfg = cfg or MaximalConfig()
    spec = f.spec
    if spec.n == 1:
        cap = None if cfg.max_radius is None else 2 * cfg.max_radius + 1
        return f.with_values(_interval_sweep(np.abs(f.values), cap))

    out = np.abs(f.values).copy()
    for m in cfg.radii(spec)[1:]:
        avg = ball_averages(f, m)
        for d, w in _ball_rows(spec.n, m):
            # max over centers c = x + (d, e) with |e| <= w along the last axis
            shifted = _shifted(avg, d, -np.inf) if d else avg
            np.maximum(out, maximum_filter1d(shifted, 2 * w + 1, axis=-1, mode="constant", cval=-np.inf), out=out)
    return f.with_values(out)


def maximal(f: GridFunction, cfg: MaximalConfig | None = None) -> GridFunction:
    cfg = cfg or MaximalConfig()
    if cfg.mode == CENTERED:
        return maximal_centered(f, cfg)
    return maximal_uncentered(f, cfg)


def weak11_constant(Tf: GridFunction, f: GridFunction, alphas) -> float:
    """Empirical weak-(1,1) constant ``max_α α |{Tf > α}| / ||f||_1``."""
    alphas = np.asarray(alphas, dtype=float)
    if np.any(alphas <= 0):
        raise ValueError("levels must be positive")
    norm = lp_norm(f, 1)
    if norm == 0:
        raise ValueError("weak-type ratio undefined for f = 0")
    vals = np.sort(Tf.values.ravel())
    counts = vals.size - np.searchsorted(vals, alphas, side="right")
    return float(np.max(alphas * counts) * Tf.spec.cell_volume / norm)


def strong_pp_ratio(f: GridFunction, p: float, cfg: MaximalConfig | None = None) -> float:
    """``||Mf||_p / ||f||_p``."""
    if not p > 1:
        raise ValueError("strong type needs p > 1")
    norm = lp_norm(f, p)
    if norm == 0:
        raise ValueError("strong-type ratio undefined for f = 0")
    return lp_norm(maximal(f, cfg), p) / norm


def corollary_op(f: GridFunction, q: float, cfg: MaximalConfig | None = None) -> GridFunction:
    """``(M(|f|**q))**(1/q)``."""
    if q < 1:
        raise ValueError("q must be >= 1")
    Mq = maximal(f.with_values(np.abs(f.values) ** q), cfg)
    return f.with_values(Mq.values ** (1.0 / q))
