"""Sampled functions on staggered uniform grids, quadrature and norms.

Every grid is cell-centered: node coordinates are ``(k + 1/2) h - L`` on
each axis, so the origin is never a sample point and singular weights such
as ``|x|**(-a)`` can be summed directly with the midpoint rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

MAX_DIMENSION = 3


@dataclass(frozen=True)
class GridSpec:
    """Uniform staggered grid on the cube ``[-L, L]**n`` with ``N`` points per axis."""

    n: int
    L: float
    N: int

    def __post_init__(self):
        if self.n not in (1, 2, 3):
            raise ValueError(f"dimension must be 1, 2 or 3, got {self.n}")
        if not self.L > 0:
            raise ValueError(f"half-width must be positive, got {self.L}")
        if self.N < 8 or self.N % 2:
            raise ValueError(f"points per axis must be even and >= 8, got {self.N}")

    @property
    def h(self) -> float:
        return 2.0 * self.L / self.N

    @property
    def cell_volume(self) -> float:
        return self.h**self.n

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.N,) * self.n

    @property
    def size(self) -> int:
        return self.N**self.n

    def axis(self) -> np.ndarray:
        """1-D node coordinates shared by every axis."""
        return (np.arange(self.N) + 0.5) * self.h - self.L

    def mesh(self) -> list[np.ndarray]:
        ax = self.axis()
        return list(np.meshgrid(*([ax] * self.n), indexing="ij"))

    def radius(self) -> np.ndarray:
        """Euclidean distance of every node to the origin, shape ``self.shape``."""
        return _radius_cache(self)

    def points(self) -> np.ndarray:
        """Node coordinates flattened in row-major order, shape ``(N**n, n)``."""
        return np.stack([c.ravel() for c in self.mesh()], axis=1)

    def nearest_index(self, point) -> tuple[int, ...]:
        """Index of the node closest to ``point`` (ties go to the lower index)."""
        point = np.atleast_1d(np.asarray(point, dtype=float))
        if point.shape != (self.n,):
            raise ValueError(f"point must have {self.n} coordinates")
        k = np.ceil((point + self.L) / self.h - 1.0).astype(int)
        # ceil(t - 1) picks the lower node on an exact tie at a cell edge.
        k = np.clip(k, 0, self.N - 1)
        return tuple(int(i) for i in k)

    def metadata(self) -> dict:
        return {"n": self.n, "L": self.L, "N": self.N, "h": self.h}


_RADII: dict[GridSpec, np.ndarray] = {}


def _radius_cache(spec: GridSpec) -> np.ndarray:
    r = _RADII.get(spec)
    if r is None:
        r = np.sqrt(sum(c**2 for c in spec.mesh()))
        r.setflags(write=False)
        if len(_RADII) > 32:
            _RADII.clear()
        _RADII[spec] = r
    return r


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Real samples of a function at the nodes of a :class:`GridSpec`.

    ``values`` may be passed flat (length ``N**n``, row-major) or already
    shaped; it is stored with shape ``spec.shape``.
    """

    spec: GridSpec
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.size != self.spec.size:
            raise ValueError(f"expected {self.spec.size} values, got {v.size}")
        v = v.reshape(self.spec.shape)
        if not np.all(np.isfinite(v)):
            raise ValueError("grid function values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def with_values(self, values) -> GridFunction:
        return GridFunction(self.spec, values)

    def __add__(self, other: GridFunction) -> GridFunction:
        _same_grid(self, other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: GridFunction) -> GridFunction:
        _same_grid(self, other)
        return self.with_values(self.values - other.values)

    def __mul__(self, c: float) -> GridFunction:
        return self.with_values(c * self.values)

    __rmul__ = __mul__

    def __neg__(self) -> GridFunction:
        return self.with_values(-self.values)

    def __abs__(self) -> GridFunction:
        return self.with_values(np.abs(self.values))

    def mean(self) -> float:
        return float(np.mean(self.values))

    def centered(self) -> GridFunction:
        """The mean-free representative ``f - mean(f)``."""
        return self.with_values(self.values - self.mean())

    def at(self, point) -> float:
        """Value at the node nearest to ``point``."""
        return float(self.values[self.spec.nearest_index(point)])


def _same_grid(f: GridFunction, g: GridFunction):
    if f.spec != g.spec:
        raise ValueError("grid functions live on different grids")


@dataclass(frozen=True)
class Exponents:
    """Validated exponent set ``(n, s, p)`` with an optional Hölder exponent ``q``.

    ``allow_endpoint`` admits ``s*p == n`` (the divergent endpoint case);
    ``s*p > n`` is always rejected.
    """

    n: int
    p: float
    s: float = 0.0
    q: float | None = None
    allow_endpoint: bool = False

    def __post_init__(self):
        n, p, s = self.n, self.p, self.s
        if n not in (1, 2, 3):
            raise ValueError(f"dimension must be 1, 2 or 3, got {n}")
        if not p >= 1 or not math.isfinite(p):
            raise ValueError(f"p must be a finite real >= 1, got {p}")
        if s < 0:
            raise ValueError(f"s must be nonnegative, got {s}")
        if self.allow_endpoint:
            if not math.isclose(s * p, n, rel_tol=1e-12):
                raise ValueError(f"endpoint exponents need s*p == n, got s*p = {s * p}")
        elif not s * p < n:
            raise ValueError(f"need s*p < n, got s*p = {s * p} with n = {n}")
        if self.q is not None:
            q = self.q
            if not s < n:
                raise ValueError("a Hölder exponent needs s < n")
            lower = n / (n - s)
            if not q > lower:
                raise ValueError(f"need q > n/(n-s) = {lower}, got q = {q}")
            if p > 1 and q > self.p_conj * (1 + 1e-12):
                raise ValueError(f"need q <= p' = {self.p_conj}, got q = {q}")

    @property
    def p_conj(self) -> float:
        return conjugate(self.p)

    @property
    def q_conj(self) -> float | None:
        return None if self.q is None else conjugate(self.q)

    def as_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "s": self.s, "q": self.q}


def conjugate(p: float) -> float:
    """Hölder conjugate ``p / (p - 1)``; ``inf`` for ``p == 1``."""
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------


def integrate(f: GridFunction) -> float:
    """Midpoint rule ``h**n * sum(values)`` (numpy pairwise summation)."""
    return float(f.spec.cell_volume * np.sum(f.values))


def weighted_integral(
    f: GridFunction,
    p: float,
    a: float,
    inner_cutoff: float = 0.0,
    divergent: bool = False,
) -> float:
    """Midpoint rule for ``∫_{|x| > inner_cutoff} |f|**p |x|**(-a) dx``.

    For ``a >= n`` the integral over a neighbourhood of the origin diverges;
    that case is only accepted with a positive ``inner_cutoff`` or with
    ``divergent=True``, which marks the caller as knowingly sampling a
    divergent integral.
    """
    n = f.spec.n
    if inner_cutoff < 0:
        raise ValueError("inner_cutoff must be nonnegative")
    if a >= n and inner_cutoff == 0 and not divergent:
        raise ValueError(
            f"weight |x|^-{a} is not integrable at the origin in dimension {n}; "
            "pass inner_cutoff > 0 or divergent=True"
        )
    r = f.spec.radius()
    mask = r > inner_cutoff
    terms = np.abs(f.values[mask]) ** p * r[mask] ** (-a)
    return float(f.spec.cell_volume * np.sum(terms))


def lp_norm(f: GridFunction, p: float) -> float:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if math.isinf(p):
        return float(np.max(np.abs(f.values)))
    return integrate(f.with_values(np.abs(f.values) ** p)) ** (1.0 / p)


# ---------------------------------------------------------------------------
# Half-line grids for the one-sided classical inequality
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HalfLineGrid:
    """Cell-centered grid on ``(0, x_max]`` given by increasing cell edges.

    The first edge is always 0; nodes are cell midpoints and quadrature
    weights are cell widths.
    """

    edges: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=float)
        if e.ndim != 1 or e.size < 2 or e[0] != 0.0 or np.any(np.diff(e) <= 0):
            raise ValueError("edges must start at 0 and increase strictly")
        e.setflags(write=False)
        object.__setattr__(self, "edges", e)

    @classmethod
    def uniform(cls, x_max: float, N: int) -> HalfLineGrid:
        return cls(np.linspace(0.0, x_max, N + 1))

    @classmethod
    def logarithmic(cls, x_min: float, x_max: float, per_decade: int) -> HalfLineGrid:
        """Edges ``0`` and ``10**(k/per_decade)`` between ``x_min`` and ``x_max``.

        Integer powers of ten are always edges, so indicator-type data with
        breakpoints at powers of ten is sampled without straddling cells.
        """
        lo = math.floor(round(math.log10(x_min) * per_decade, 9))
        hi = math.ceil(round(math.log10(x_max) * per_decade, 9))
        k = np.arange(lo, hi + 1)
        return cls(np.concatenate([[0.0], 10.0 ** (k / per_decade)]))

    @cached_property
    def nodes(self) -> np.ndarray:
        return 0.5 * (self.edges[1:] + self.edges[:-1])

    @cached_property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)

    @property
    def x_max(self) -> float:
        return float(self.edges[-1])

    @property
    def size(self) -> int:
        return self.edges.size - 1

    def metadata(self) -> dict:
        return {"n": 1, "L": self.x_max, "N": self.size}


@dataclass(frozen=True, eq=False)
class HalfLineFunction:
    grid: HalfLineGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.size,):
            raise ValueError(f"expected {self.grid.size} values, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def integral(self) -> float:
        return float(np.sum(self.values * self.grid.widths))

    def primitive(self) -> np.ndarray:
        """``F(x_k) = ∫_0^{x_k} f`` at every node, midpoint rule per cell."""
        w = self.values * self.grid.widths
        return np.cumsum(w) - 0.5 * w
