"""Near/far splitting of the Hardy kernel and its dual operator.

With ``A f(x) = ∫ f(y) |x - y|**(s-n) |x|**(-s) dy`` the node pairs are
split at ``|x - y| <= κ|x|`` (near, giving A₁) versus the rest (far, A₂).
The far part is dominated by ``B₂``, which integrates over
``|y| >= (κ-1)|x|``; ``T`` is the adjoint of ``B₂``.  All operators are
direct sums over node pairs and share the singular self-cell weight of
:func:`hardycheck.spectral.self_cell_weight`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .grid import GridFunction, GridSpec, conjugate, lp_norm
from .maximal import MaximalConfig, corollary_op, maximal_centered
from .spectral import check_kernel_cost, self_cell_weight, unit_ball_volume

_PAIR_BUDGET = 1 << 22


class MaskMismatchError(ValueError):
    """Two operators meant to be adjoint were built from different pair regions."""


@dataclass(frozen=True)
class SplitConfig:
    kappa: float = 100.0

    def __post_init__(self):
        if not self.kappa >= 2:
            raise ValueError(f"kappa must be >= 2, got {self.kappa}")

    @property
    def inner(self) -> float:
        return self.kappa - 1.0

    def near(self, d: np.ndarray, rx: np.ndarray) -> np.ndarray:
        return d <= self.kappa * rx[:, None]

    def majorant(self, rx: np.ndarray, ry: np.ndarray) -> np.ndarray:
        """Pair mask ``|y| >= (κ-1)|x|`` (rows x, columns y)."""
        return ry[None, :] >= self.inner * rx[:, None]


def _pair_blocks(spec: GridSpec, distances: bool = True):
    """Yield row blocks ``(rows, d, rx, ry)`` of the node-pair geometry."""
    check_kernel_cost(spec)
    pts = spec.points()
    r = spec.radius().ravel()
    M = r.size
    step = max(1, _PAIR_BUDGET // M)
    for start in range(0, M, step):
        rows = slice(start, min(start + step, M))
        d = None
        if distances:
            d = np.sqrt(((pts[rows, None, :] - pts[None, :, :]) ** 2).sum(axis=-1))
        yield rows, d, r[rows], r


def _kernel(d: np.ndarray, s: float, spec: GridSpec) -> np.ndarray:
    n = spec.n
    w = np.empty_like(d)
    off = d > 0
    w[off] = d[off] ** (s - n) * spec.cell_volume
    w[~off] = self_cell_weight(spec, s)
    return w


def _check_order(s: float, n: int):
    if not 0 < s < n:
        raise ValueError(f"need 0 < s < n, got s={s}, n={n}")


def hardy_operator(f: GridFunction, s: float) -> GridFunction:
    """``A f`` over all pairs, applied to ``|f|``."""
    spec = f.spec
    _check_order(s, spec.n)
    af = np.abs(f.values).ravel()
    out = np.empty(spec.size)
    for rows, d, rx, _ in _pair_blocks(spec):
        out[rows] = _kernel(d, s, spec) @ af * rx ** (-s)
    return f.with_values(out)


def split_operator(f: GridFunction, s: float, cfg: SplitConfig | None = None) -> tuple[GridFunction, GridFunction]:
    """``(A₁ f, A₂ f)`` over the near and far pair regions, applied to ``|f|``."""
    cfg = cfg or SplitConfig()
    spec = f.spec
    _check_order(s, spec.n)
    af = np.abs(f.values).ravel()
    a1 = np.empty(spec.size)
    a2 = np.empty(spec.size)
    for rows, d, rx, _ in _pair_blocks(spec):
        w = _kernel(d, s, spec)
        near = cfg.near(d, rx)
        scale = rx ** (-s)
        a1[rows] = np.where(near, w, 0.0) @ af * scale
        a2[rows] = np.where(near, 0.0, w) @ af * scale
    return f.with_values(a1), f.with_values(a2)


def b2_majorant(f: GridFunction, s: float, cfg: SplitConfig | None = None) -> GridFunction:
    """``B₂ f(x) = |x|**(-s) Σ_{|y| >= (κ-1)|x|} f(y) |y|**(s-n) h**n``."""
    cfg = cfg or SplitConfig()
    spec = f.spec
    _check_order(s, spec.n)
    fy = f.values.ravel() * spec.radius().ravel() ** (s - spec.n) * spec.cell_volume
    out = np.empty(spec.size)
    for rows, _, rx, ry in _pair_blocks(spec, distances=False):
        out[rows] = cfg.majorant(rx, ry) @ fy * rx ** (-s)
    return f.with_values(out)


def dual_T(g: GridFunction, s: float, cfg: SplitConfig | None = None) -> GridFunction:
    """``T g(y) = |y|**(s-n) Σ_{|x| <= |y|/(κ-1)} g(x) |x|**(-s) h**n``.

    Uses exactly the pair mask of :func:`b2_majorant`, read column-wise.
    """
    cfg = cfg or SplitConfig()
    spec = g.spec
    _check_order(s, spec.n)
    r = spec.radius().ravel()
    gx = g.values.ravel() * r ** (-s) * spec.cell_volume
    acc = np.zeros(spec.size)
    for rows, _, rx, ry in _pair_blocks(spec, distances=False):
        acc += gx[rows] @ cfg.majorant(rx, ry)
    return g.with_values(acc * r ** (s - spec.n))


def duality_check(
    f: GridFunction,
    g: GridFunction,
    s: float,
    cfg: SplitConfig | None = None,
    dual_cfg: SplitConfig | None = None,
) -> float:
    """Relative gap ``|<B₂f, g> - <Tg, f>| / |<B₂f, g>|``.

    ``dual_cfg`` (default: ``cfg``) builds T; a different pair region is
    refused since the identity only holds for a shared mask.
    """
    cfg = cfg or SplitConfig()
    dual_cfg = dual_cfg or cfg
    if dual_cfg.inner != cfg.inner:
        raise MaskMismatchError(f"B2 uses |y| >= {cfg.inner}|x| but T uses |y| >= {dual_cfg.inner}|x|")
    if f.spec != g.spec:
        raise ValueError("f and g live on different grids")
    dv = f.spec.cell_volume
    lhs = float(np.sum(b2_majorant(f, s, cfg).values * g.values) * dv)
    rhs = float(np.sum(dual_T(g, s, dual_cfg).values * f.values) * dv)
    return abs(lhs - rhs) / max(abs(lhs), np.finfo(float).tiny)


def far_kernel_factor(n: int, s: float, kappa: float) -> float:
    """Sharp factor with ``|x-y|**(s-n) <= factor * |y|**(s-n)`` on the far region.

    From ``|y| <= |x-y| + |x| < (1 + 1/κ)|x-y|``.
    """
    return (1.0 + 1.0 / kappa) ** (n - s)


def dyadic_sum(s: float) -> float:
    """``Σ_{j<=0} 2**(j s) = 1 / (1 - 2**(-s))``."""
    if not s > 0:
        raise ValueError("the dyadic series converges only for s > 0")
    return 1.0 / (1.0 - 2.0 ** (-s))


class A1Bound(NamedTuple):
    ratio: float
    dyadic_factor: float


def a1_maximal_bound(
    f: GridFunction,
    s: float,
    cfg: SplitConfig | None = None,
    M: GridFunction | None = None,
) -> A1Bound:
    """Sup over nodes of ``A₁f / Mf`` with the centered maximal function of ``|f|``."""
    if M is None:
        M = maximal_centered(abs(f))
    a1, _ = split_operator(f, s, cfg)
    pos = M.values > 0
    ratio = float(np.max(a1.values[pos] / M.values[pos])) if np.any(pos) else 0.0
    return A1Bound(ratio, dyadic_sum(s))


def t_maximal_bound(
    g: GridFunction,
    s: float,
    q: float,
    cfg: SplitConfig | None = None,
    mcfg: MaximalConfig | None = None,
) -> float:
    """Sup over y of ``|Tg(y)| / (M(|g|**q))**(1/q)(y)``; 0 if every denominator vanishes."""
    n = g.spec.n
    if not 0 < s < n:
        raise ValueError("need 0 < s < n")
    if not q > n / (n - s):
        raise ValueError(f"need q > n/(n-s) = {n / (n - s)}, got {q}")
    T = dual_T(g, s, cfg)
    C = corollary_op(g, q, mcfg)
    pos = C.values > 0
    if not np.any(pos):
        return 0.0
    return float(np.max(np.abs(T.values[pos]) / C.values[pos]))


def holder_chain(g: GridFunction, s: float, q: float, cfg: SplitConfig | None = None) -> dict:
    """Both sides of the Hölder step bounding ``|Tg(y)|``, node by node.

    Returns arrays ``t`` (``|Tg|``), ``local`` (``(Σ_{|x|<=|y|/(κ-1)} |g|**q h**n)**(1/q)``),
    ``discrete`` (the exact discrete Hölder bound) and ``continuum``
    (``C |y|**(-n/q) local`` with the continuum measure factor C).
    """
    cfg = cfg or SplitConfig()
    spec = g.spec
    n = spec.n
    if not q > n / (n - s):
        raise ValueError("need s q' < n")
    qc = conjugate(q)
    r = spec.radius().ravel()
    dv = spec.cell_volume
    gq = np.abs(g.values.ravel()) ** q * dv
    wx = r ** (-s * qc) * dv
    local_q = np.zeros(spec.size)
    weight = np.zeros(spec.size)
    for rows, _, rx, ry in _pair_blocks(spec, distances=False):
        mask = cfg.majorant(rx, ry)
        local_q += gq[rows] @ mask
        weight += wx[rows] @ mask
    local = local_q ** (1 / q)
    t = np.abs(dual_T(g, s, cfg).values.ravel())
    discrete = r ** (s - n) * local * weight ** (1 / qc)
    sigma = n * unit_ball_volume(n)
    c = (sigma / (n - s * qc)) ** (1 / qc) * cfg.inner ** (-(n - s * qc) / qc)
    continuum = c * r ** (-n / q) * local
    shape = spec.shape
    return {k: v.reshape(shape) for k, v in
            {"t": t, "local": local, "discrete": discrete, "continuum": continuum}.items()}


def majorant_norm_ratio(f: GridFunction, s: float, p: float, cfg: SplitConfig | None = None) -> float:
    """``||B₂ f||_p / ||f||_p``."""
    return lp_norm(b2_majorant(f, s, cfg), p) / lp_norm(f, p)


def dual_norm_ratio(g: GridFunction, s: float, p: float, cfg: SplitConfig | None = None) -> float:
    """``||T g||_{p'} / ||g||_{p'}``."""
    pc = conjugate(p)
    return lp_norm(dual_T(g, s, cfg), pc) / lp_norm(g, pc)
