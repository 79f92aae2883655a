"""Deterministic test-function generators.

A :class:`TestFunction` is a named recipe; calling ``tf.sample(grid)``
evaluates it on a :class:`~hardycheck.grid.GridSpec` (or, for the
half-line family, a :class:`~hardycheck.grid.HalfLineGrid`).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .grid import GridFunction, GridSpec, HalfLineFunction, HalfLineGrid

# Gaussians are treated as supported where they exceed this level.
DECAY_LEVEL = 1e-12


@dataclass(frozen=True)
class TestFunction:
    __test__ = False  # not a pytest class

    name: str
    params: dict = field(default_factory=dict)
    generator: Callable = field(default=None, repr=False, compare=False)

    def sample(self, grid):
        return self.generator(grid)

    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({args})"


def _center(center, n: int) -> np.ndarray:
    c = np.zeros(n) if center is None else np.atleast_1d(np.asarray(center, dtype=float))
    if c.size == 1 and n > 1:
        c = np.full(n, float(c[0]))
    if c.shape != (n,):
        raise ValueError(f"center must have {n} coordinates")
    return c


def _require_grid(grid) -> GridSpec:
    if not isinstance(grid, GridSpec):
        raise TypeError("this generator samples on a GridSpec")
    return grid


def _check_support(spec: GridSpec, c: np.ndarray, extent: float, name: str):
    if np.any(np.abs(c) + extent > spec.L):
        raise ValueError(f"{name} support |x - c| <= {extent:g} exceeds the box [-{spec.L}, {spec.L}]")


def _distance(spec: GridSpec, c: np.ndarray) -> np.ndarray:
    return np.sqrt(sum((x - ci) ** 2 for x, ci in zip(spec.mesh(), c)))


def gaussian(center=None, width: float = 1.0) -> TestFunction:
    """``exp(-|x - c|**2 / (2 width**2))``."""
    if not width > 0:
        raise ValueError("width must be positive")

    def gen(grid):
        spec = _require_grid(grid)
        c = _center(center, spec.n)
        _check_support(spec, c, width * math.sqrt(2 * math.log(1 / DECAY_LEVEL)), "gaussian")
        d = _distance(spec, c)
        return GridFunction(spec, np.exp(-(d**2) / (2 * width**2)))

    return TestFunction("gaussian", {"center": center, "width": width}, gen)


def _bump_profile(t: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t)
    inside = t < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - t[inside] ** 2))
    return out


def bump(center=None, radius: float = 1.0) -> TestFunction:
    """Smooth compactly supported ``exp(-1/(1 - t**2))``, ``t = |x - c| / radius``."""
    if not radius > 0:
        raise ValueError("radius must be positive")

    def gen(grid):
        spec = _require_grid(grid)
        c = _center(center, spec.n)
        _check_support(spec, c, radius, "bump")
        return GridFunction(spec, _bump_profile(_distance(spec, c) / radius))

    return TestFunction("bump", {"center": center, "radius": radius}, gen)


def smooth_step(t: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for ``t <= 0``, 1 for ``t >= 1``, monotone in between."""
    t = np.asarray(t, dtype=float)

    def phi(u):
        out = np.zeros_like(u)
        pos = u > 0
        out[pos] = np.exp(-1.0 / u[pos])
        return out

    a, b = phi(t), phi(1.0 - t)
    return a / (a + b)


def plateau(r_in: float = 1.0, r_out: float = 2.0) -> TestFunction:
    """Equal to 1 on ``|x| <= r_in``, 0 on ``|x| >= r_out``, smooth in between."""
    if not 0 < r_in < r_out:
        raise ValueError("need 0 < r_in < r_out")

    def gen(grid):
        spec = _require_grid(grid)
        _check_support(spec, np.zeros(spec.n), r_out, "plateau")
        t = (spec.radius() - r_in) / (r_out - r_in)
        return GridFunction(spec, 1.0 - smooth_step(t))

    return TestFunction("plateau", {"r_in": r_in, "r_out": r_out}, gen)


def indicator(a: float = 0.0, b: float = 1.0) -> TestFunction:
    """Indicator of the closed cube ``[a, b]**n``."""
    if not a < b:
        raise ValueError("need a < b")

    def gen(grid):
        spec = _require_grid(grid)
        if a < -spec.L or b > spec.L:
            raise ValueError(f"indicator support [{a}, {b}] exceeds the box")
        inside = np.ones(spec.shape, dtype=bool)
        for x in spec.mesh():
            inside &= (x >= a) & (x <= b)
        return GridFunction(spec, inside.astype(float))

    return TestFunction("indicator", {"a": a, "b": b}, gen)


def power_cutoff(p: float, T: float) -> TestFunction:
    """``x**(-1/p)`` on ``[1, T]`` and 0 elsewhere, on a half-line grid.

    Near-extremizers of the one-dimensional Hardy inequality as ``T`` grows.
    """
    if not p > 1 or not T > 1:
        raise ValueError("need p > 1 and T > 1")

    def gen(grid):
        if not isinstance(grid, HalfLineGrid):
            raise TypeError("power_cutoff samples on a HalfLineGrid")
        if T > grid.x_max:
            raise ValueError(f"cutoff T = {T} exceeds the grid end {grid.x_max}")
        x = grid.nodes
        vals = np.where((x >= 1.0) & (x <= T), x ** (-1.0 / p), 0.0)
        return HalfLineFunction(grid, vals)

    return TestFunction("power_cutoff", {"p": p, "T": T}, gen)


def half_line_indicator(a: float = 0.0, b: float = 1.0) -> TestFunction:
    def gen(grid):
        if not isinstance(grid, HalfLineGrid):
            raise TypeError("half_line_indicator samples on a HalfLineGrid")
        x = grid.nodes
        return HalfLineFunction(grid, ((x >= a) & (x <= b)).astype(float))

    return TestFunction("half_line_indicator", {"a": a, "b": b}, gen)


def random_bandlimited(seed: int, max_mode: int = 4) -> TestFunction:
    """Seeded real trigonometric polynomial on the periodic box.

    Modes ``k`` with ``0 < max|k_i| <= max_mode`` only, so the mean is
    exactly zero and every spectral operator acts on it without aliasing
    once ``N > 2 * max_mode``.
    """
    if max_mode < 1:
        raise ValueError("max_mode must be >= 1")

    def gen(grid):
        spec = _require_grid(grid)
        if spec.N <= 2 * max_mode:
            raise ValueError("grid too coarse for the requested band limit")
        rng = np.random.default_rng(seed)
        modes = [
            k
            for k in itertools.product(range(-max_mode, max_mode + 1), repeat=spec.n)
            if k > (0,) * spec.n  # one representative of each ±k pair
        ]
        coef = rng.standard_normal((len(modes), 2))
        mesh = spec.mesh()
        vals = np.zeros(spec.shape)
        for (a, b), k in zip(coef, modes):
            phase = sum(ki * x for ki, x in zip(k, mesh)) * (math.pi / spec.L)
            amp = 1.0 / (1.0 + math.sqrt(sum(ki * ki for ki in k)))
            vals += amp * (a * np.cos(phase) + b * np.sin(phase))
        return GridFunction(spec, vals)

    return TestFunction("random_bandlimited", {"seed": seed, "max_mode": max_mode}, gen)


def standard_family(seeds=(0, 1, 2), max_mode: int = 4) -> list[TestFunction]:
    """Gaussian, bump, plateau and seeded band-limited functions."""
    fam = [gaussian(), bump(), plateau()]
    fam += [random_bandlimited(seed, max_mode) for seed in seeds]
    return fam


def bump_family() -> list[TestFunction]:
    """Bumps of several centers and radii, one-dimensional placement."""
    return [bump(0.0, 1.0), bump(0.75, 0.5), bump(-1.5, 1.0)]
