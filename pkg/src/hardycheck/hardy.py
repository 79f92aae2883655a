"""Hardy-type inequality checks: classical, gradient-weighted and fractional."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .grid import Exponents, GridFunction, HalfLineFunction, HalfLineGrid, lp_norm, weighted_integral
from .spectral import (
    gradient_magnitude,
    riesz_kernel_convolution,
    riesz_potential,
    sobolev_norm,
)
from .testfam import power_cutoff


@dataclass
class HardyResult:
    name: str
    lhs: float
    rhs: float
    ratio: float
    passed: bool
    constant: float | None = None
    exponents: dict = field(default_factory=dict)
    grid: dict = field(default_factory=dict)
    note: str = ""


def _ratio(lhs: float, rhs: float) -> float:
    return lhs / rhs if rhs > 0 else math.inf


# ---------------------------------------------------------------------------
# One-dimensional inequality on the half line
# ---------------------------------------------------------------------------


def classical_hardy_check(f: HalfLineFunction, p: float) -> HardyResult:
    """Compare ``∫ (F/x)**p`` with ``(p/(p-1))**p ∫ f**p`` for ``F(x) = ∫_0^x f``.

    Passes iff the left side is strictly smaller.
    """
    if not p > 1:
        raise ValueError("the classical inequality needs p > 1")
    v = f.values
    if np.any(v < 0):
        raise ValueError("f must be nonnegative")
    if not np.any(v > 0):
        raise ValueError("f must not vanish identically")
    x, w = f.grid.nodes, f.grid.widths
    F = f.primitive()
    lhs = float(np.sum((F / x) ** p * w))
    const = (p / (p - 1.0)) ** p
    rhs = const * float(np.sum(v**p * w))
    return HardyResult(
        "classical",
        lhs,
        rhs,
        _ratio(lhs, rhs),
        lhs < rhs,
        constant=const,
        exponents={"n": 1, "p": p},
        grid=f.grid.metadata(),
    )


def classical_sharpness_sweep(
    p: float,
    T_list,
    per_decade: int = 200,
    tail_factor: float = 1e4,
) -> list[HardyResult]:
    """Ratios of the classical check on ``x**(-1/p) 1_[1,T]`` for growing T.

    Each grid is logarithmic from 1 to ``tail_factor * T``.  A row passes
    when its ratio is below 1 and above the previous row's.
    """
    T_list = [float(T) for T in T_list]
    if not T_list or any(T < 10 for T in T_list):
        raise ValueError("cutoffs must be >= 10")
    if any(b <= a for a, b in zip(T_list, T_list[1:])):
        raise ValueError("cutoffs must increase")
    out = []
    prev = -math.inf
    for T in T_list:
        grid = HalfLineGrid.logarithmic(1.0, tail_factor * T, per_decade)
        res = classical_hardy_check(power_cutoff(p, T).sample(grid), p)
        res.name = f"sharpness[T={T:g}]"
        res.passed = res.ratio < 1 and res.ratio > prev
        prev = res.ratio
        out.append(res)
    return out


# ---------------------------------------------------------------------------
# Gradient-weighted inequality
# ---------------------------------------------------------------------------


def cazenave_check(u: GridFunction, p: float, q: float, rtol: float = 1e-12) -> HardyResult:
    """``∫ |u|**p / |x|**q <= (p/(n-q))**q ||u||_p**(p-q) ||∇u||_p**q``."""
    n = u.spec.n
    if not 1 <= p < math.inf:
        raise ValueError("need 1 <= p < inf")
    if not 0 <= q <= p or not q < n:
        raise ValueError(f"need 0 <= q <= p and q < n, got q={q}, p={p}, n={n}")
    lhs = weighted_integral(u, p, q)
    const = (p / (n - q)) ** q
    rhs = const * lp_norm(u, p) ** (p - q) * lp_norm(gradient_magnitude(u), p) ** q
    return HardyResult(
        "cazenave",
        lhs,
        rhs,
        _ratio(lhs, rhs),
        lhs <= rhs * (1 + rtol),
        constant=const,
        exponents={"n": n, "p": p, "q": q},
        grid=u.spec.metadata(),
    )


# ---------------------------------------------------------------------------
# Fractional inequality
# ---------------------------------------------------------------------------


def fractional_hardy_quotient(u: GridFunction, s: float, p: float) -> HardyResult:
    """``Q = ∫ |u|**p / |x|**(s p)  /  ||u||_{Ẇ^{s,p}}**p``.

    At ``s = 0`` the homogeneous norm only sees u modulo constants, so both
    sides are evaluated on the mean-free representative and Q is 1.
    """
    exps = Exponents(u.spec.n, p, s)
    if not p > 1:
        raise ValueError("need p > 1")
    if s == 0:
        u = u.centered()
    den = sobolev_norm(u, s, p) ** p
    if not den > 0:
        raise ValueError("the Sobolev seminorm of u vanishes")
    lhs = weighted_integral(u, p, s * p)
    q = lhs / den
    return HardyResult(
        "fractional",
        lhs,
        den,
        q,
        math.isfinite(q),
        exponents=exps.as_dict(),
        grid=u.spec.metadata(),
    )


def empirical_constant(family, s: float, p: float) -> float:
    """Largest fractional Hardy quotient over a family of grid functions."""
    family = list(family)
    if not family:
        raise ValueError("empty family")
    return max(fractional_hardy_quotient(u, s, p).ratio for u in family)


@dataclass(frozen=True)
class BlowupRow:
    eps: float
    lhs: float
    rhs: float

    @property
    def ratio(self) -> float:
        return _ratio(self.lhs, self.rhs)


def endpoint_blowup(u: GridFunction, exps: Exponents, eps_list) -> list[BlowupRow]:
    """Truncated weighted integrals ``∫_{|x|>eps} |u|**p / |x|**n`` at ``s p = n``.

    The Sobolev side does not depend on eps and is computed once.
    """
    if not math.isclose(exps.s * exps.p, exps.n, rel_tol=1e-12):
        raise ValueError(f"endpoint case needs s*p == n, got s*p = {exps.s * exps.p}")
    if exps.n != u.spec.n:
        raise ValueError("dimension mismatch between exponents and grid")
    eps_list = [float(e) for e in eps_list]
    if any(e <= 0 for e in eps_list):
        raise ValueError("cutoffs must be positive")
    rhs = sobolev_norm(u, exps.s, exps.p) ** exps.p
    return [BlowupRow(e, weighted_integral(u, exps.p, exps.n, inner_cutoff=e), rhs) for e in eps_list]


def interpolation_check(u: GridFunction, s: float, p: float, tol: float = 1e-8) -> HardyResult:
    """``||u||_{Ẇ^{s,p}}**p`` against ``||u||_p**(p(1-s)) ||∇u||_p**(p s)``.

    Only p = 2 has a known constant (1); other p merely record the ratio.
    """
    if not 0 <= s <= 1:
        raise ValueError("interpolation needs 0 <= s <= 1")
    lhs = sobolev_norm(u, s, p) ** p
    rhs = lp_norm(u, p) ** (p * (1 - s)) * lp_norm(gradient_magnitude(u), p) ** (p * s)
    ratio = _ratio(lhs, rhs)
    passed = ratio <= 1 + tol if p == 2 else math.isfinite(ratio)
    return HardyResult(
        "interpolation",
        lhs,
        rhs,
        ratio,
        passed,
        constant=1.0 if p == 2 else None,
        exponents={"n": u.spec.n, "p": p, "s": s},
        grid=u.spec.metadata(),
        note="" if p == 2 else "constant unknown for p != 2; ratio recorded only",
    )


def reduction_quotients(f: GridFunction, s: float, p: float) -> tuple[float, float]:
    """The fractional quotient of ``u = I_s f`` computed two ways.

    Returns ``(spectral, kernel)``: ``||u/|x|**s||_p / ||u||_{Ẇ^{s,p}}``
    with u from the Fourier multiplier, and ``||I_s f/|x|**s||_p / ||f||_p``
    with ``I_s f`` from the direct kernel sum.  Both use the mean-free part
    of f.
    """
    g = f.centered()
    u = riesz_potential(g, s)
    spectral = weighted_integral(u, p, s * p) ** (1 / p) / sobolev_norm(u, s, p)
    v = riesz_kernel_convolution(g, s)
    kernel = weighted_integral(v, p, s * p) ** (1 / p) / lp_norm(g, p)
    return spectral, kernel
