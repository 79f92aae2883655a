"""Fourier-multiplier operators on the periodic box and a direct-kernel Riesz potential.

The box ``[-L, L]**n`` is treated as a torus with physical frequencies
``xi = pi k / L``.  The zero mode is sent to zero by every homogeneous
multiplier, so all operators here act on the mean-free part of their input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import convolve
from scipy.special import gamma

from .grid import GridFunction, GridSpec, lp_norm

IMAG_TOL = 1e-10

# Direct O(N**(2n)) sums are refused beyond these sizes.
KERNEL_COST_CAP = {1: 4096, 2: 128, 3: 32}


class ImaginaryResidueError(ArithmeticError):
    """A multiplier produced a non-negligible imaginary part from real input."""


@dataclass(frozen=True, eq=False)
class SpectrumFunction:
    """Unnormalized DFT coefficients (numpy ``fftn`` convention) of a grid function."""

    spec: GridSpec
    coeffs: np.ndarray

    @classmethod
    def of(cls, f: GridFunction) -> SpectrumFunction:
        return cls(f.spec, np.fft.fftn(f.values))

    def to_grid(self, tol: float = IMAG_TOL) -> GridFunction:
        return GridFunction(self.spec, _real_part(np.fft.ifftn(self.coeffs), tol))

    def frequencies(self) -> list[np.ndarray]:
        return frequency_mesh(self.spec)


def frequency_mesh(spec: GridSpec) -> list[np.ndarray]:
    """Physical angular frequencies per axis, broadcast to the full grid."""
    xi = 2.0 * math.pi * np.fft.fftfreq(spec.N, d=spec.h)
    return list(np.meshgrid(*([xi] * spec.n), indexing="ij"))


def frequency_modulus(spec: GridSpec) -> np.ndarray:
    return np.sqrt(sum(x**2 for x in frequency_mesh(spec)))


def _real_part(z: np.ndarray, tol: float) -> np.ndarray:
    scale = max(1.0, float(np.max(np.abs(z.real))))
    resid = float(np.max(np.abs(z.imag)))
    if resid > tol * scale:
        raise ImaginaryResidueError(f"imaginary residue {resid:.3e} exceeds {tol:g} * {scale:.3e}")
    return z.real


def _apply(f: GridFunction, multiplier: np.ndarray, tol: float = IMAG_TOL) -> GridFunction:
    out = np.fft.ifftn(np.fft.fftn(f.values) * multiplier)
    return f.with_values(_real_part(out, tol))


def _homogeneous_multiplier(spec: GridSpec, power: float) -> np.ndarray:
    k = frequency_modulus(spec)
    m = np.zeros_like(k)
    nz = k > 0
    m[nz] = k[nz] ** power
    return m


def frac_laplacian(f: GridFunction, s: float) -> GridFunction:
    """``(-Δ)**(s/2) f`` via the multiplier ``|xi|**s`` (zero mode dropped)."""
    if s < 0:
        raise ValueError("frac_laplacian takes s >= 0; use riesz_potential for negative orders")
    return _apply(f, _homogeneous_multiplier(f.spec, s))


def riesz_potential(f: GridFunction, alpha: float) -> GridFunction:
    """``I_alpha f`` via the multiplier ``|xi|**(-alpha)`` on the mean-free part of f.

    On the torus any ``alpha > 0`` is admissible; the whole-space kernel
    representation additionally needs ``alpha < n``.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return _apply(f, _homogeneous_multiplier(f.spec, -alpha))


def gradient(f: GridFunction) -> list[GridFunction]:
    """Spectral partial derivatives, one grid function per axis.

    The Nyquist mode is dropped: ``i xi`` is odd and has no real-preserving
    value there.
    """
    spec = f.spec
    fhat = np.fft.fftn(f.values)
    k = np.fft.fftfreq(spec.N, 1.0 / spec.N)  # integer wavenumbers
    nyquist = [kk == -spec.N // 2 for kk in np.meshgrid(*([k] * spec.n), indexing="ij")]
    out = []
    for xi, nyq in zip(frequency_mesh(spec), nyquist):
        m = 1j * xi
        m[nyq] = 0.0
        out.append(f.with_values(_real_part(np.fft.ifftn(fhat * m), IMAG_TOL)))
    return out


def gradient_magnitude(f: GridFunction) -> GridFunction:
    parts = gradient(f)
    return f.with_values(np.sqrt(sum(g.values**2 for g in parts)))


def sobolev_norm(f: GridFunction, s: float, p: float) -> float:
    """Homogeneous Sobolev norm ``||(-Δ)**(s/2) f||_p``."""
    if p < 1 or s < 0:
        raise ValueError("need p >= 1 and s >= 0")
    return lp_norm(frac_laplacian(f, s), p)


def plancherel_sobolev_sq(f: GridFunction, s: float) -> float:
    """``sum |xi|**(2s) |f^(xi)|**2`` with the normalization matching ``lp_norm(., 2)**2``."""
    spec = f.spec
    fhat = np.fft.fftn(f.values)
    w = _homogeneous_multiplier(spec, 2.0 * s)
    return float(np.sum(w * np.abs(fhat) ** 2) * spec.cell_volume / spec.size)


# ---------------------------------------------------------------------------
# Direct singular-kernel quadrature
# ---------------------------------------------------------------------------


def riesz_constant(n: int, alpha: float) -> float:
    """``Γ((n-α)/2) / (2**α π**(n/2) Γ(α/2))``, making the kernel invert ``(-Δ)**(α/2)``."""
    if not 0 < alpha < n:
        raise ValueError(f"the Riesz kernel needs 0 < alpha < n, got alpha={alpha}, n={n}")
    return gamma((n - alpha) / 2) / (2**alpha * math.pi ** (n / 2) * gamma(alpha / 2))


def unit_ball_volume(n: int) -> float:
    return math.pi ** (n / 2) / gamma(n / 2 + 1)


def self_cell_weight(spec: GridSpec, alpha: float) -> float:
    """Integral of ``|z|**(alpha - n)`` over the cell containing the singularity.

    Exact for n = 1; in higher dimensions the cell is replaced by the ball of
    equal volume.
    """
    n, h = spec.n, spec.h
    omega = unit_ball_volume(n)
    rho = h / omega ** (1.0 / n)
    return n * omega * rho**alpha / alpha


def check_kernel_cost(spec: GridSpec):
    cap = KERNEL_COST_CAP[spec.n]
    if spec.N > cap:
        raise ValueError(f"direct kernel sum refused: N={spec.N} exceeds the cap {cap} for n={spec.n}")


def kernel_table(spec: GridSpec, alpha: float) -> np.ndarray:
    """Quadrature weights ``h**n |x - y|**(alpha - n)`` indexed by node offset.

    Shape ``(2N - 1,)**n``; the zero offset holds :func:`self_cell_weight`.
    """
    n, N, h = spec.n, spec.N, spec.h
    off = np.arange(-(N - 1), N) * h
    d = np.sqrt(sum(o**2 for o in np.meshgrid(*([off] * n), indexing="ij")))
    center = (N - 1,) * n
    d[center] = 1.0
    table = spec.cell_volume * d ** (alpha - n)
    table[center] = self_cell_weight(spec, alpha)
    return table


def riesz_kernel_convolution(f: GridFunction, alpha: float) -> GridFunction:
    """``C_{n,α} ∫ |x - y|**(α - n) f(y) dy`` by direct summation over all node pairs."""
    spec = f.spec
    c = riesz_constant(spec.n, alpha)
    check_kernel_cost(spec)
    out = convolve(kernel_table(spec, alpha), f.values, mode="valid", method="direct")
    return f.with_values(c * out)


def central_mask(spec: GridSpec) -> np.ndarray:
    """Nodes in the central half ``[-L/2, L/2]**n`` of the box."""
    inside = np.ones(spec.shape, dtype=bool)
    for x in spec.mesh():
        inside &= np.abs(x) <= spec.L / 2
    return inside


def riesz_backend_gap(f: GridFunction, alpha: float) -> float:
    """Relative sup gap between spectral and kernel Riesz potentials on the central half.

    Both backends act on the mean-free part of ``f``: the torus multiplier
    discards the zero mode, so the kernel sum is fed the same representative.
    """
    g = f.centered()
    spectral = riesz_potential(g, alpha).values
    direct = riesz_kernel_convolution(g, alpha).values
    mask = central_mask(f.spec)
    return float(np.max(np.abs(spectral - direct)[mask]) / np.max(np.abs(direct[mask])))
