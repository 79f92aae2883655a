import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardycheck.grid import GridFunction, GridSpec, lp_norm
from hardycheck.spectral import (
    ImaginaryResidueError,
    SpectrumFunction,
    frac_laplacian,
    gradient,
    gradient_magnitude,
    kernel_table,
    plancherel_sobolev_sq,
    riesz_backend_gap,
    riesz_constant,
    riesz_kernel_convolution,
    riesz_potential,
    self_cell_weight,
    sobolev_norm,
)
from hardycheck.testfam import bump, gaussian, random_bandlimited


def _mode(spec, k=1, trig=np.cos):
    return GridFunction(spec, trig(k * np.pi * spec.mesh()[0] / spec.L))


class TestMultipliers:
    @pytest.mark.parametrize("s", [0.3, 1.0, 2.0])
    def test_single_mode_eigenfunction(self, s):
        g = GridSpec(1, 3.0, 64)
        f = _mode(g, 2)
        lam = (2 * np.pi / g.L) ** s
        assert np.allclose(frac_laplacian(f, s).values, lam * f.values, atol=1e-12)

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 1.0])
    def test_riesz_eigenfunction(self, alpha):
        g = GridSpec(1, 16.0, 128)
        f = _mode(g)
        out = riesz_potential(f, alpha)
        assert np.allclose(out.values, (np.pi / g.L) ** (-alpha) * f.values, atol=1e-12)

    def test_order_zero_removes_mean(self):
        g = GridSpec(2, 1.0, 16)
        f = GridFunction(g, 3.0 + _mode(g).values)
        assert np.allclose(frac_laplacian(f, 0.0).values, f.centered().values, atol=1e-13)
        assert sobolev_norm(f, 0.0, 3.0) == pytest.approx(lp_norm(f.centered(), 3.0), rel=1e-12)

    def test_rejects_negative_order(self):
        g = GridSpec(1, 1.0, 8)
        with pytest.raises(ValueError):
            frac_laplacian(_mode(g), -0.5)
        with pytest.raises(ValueError):
            riesz_potential(_mode(g), 0.0)

    @pytest.mark.parametrize("n", [1, 2])
    def test_semigroup(self, n):
        u = random_bandlimited(3).sample(GridSpec(n, 2.0, 32))
        a = frac_laplacian(frac_laplacian(u, 0.4), 0.7).values
        b = frac_laplacian(u, 1.1).values
        assert np.max(np.abs(a - b)) <= 1e-10 * np.max(np.abs(b))

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("s", [0.3, 0.5, 1.0])
    def test_inverse_pair(self, n, s):
        u = random_bandlimited(1).sample(GridSpec(n, 2.0, 32))
        u = u.with_values(u.values + 2.5)
        back = riesz_potential(frac_laplacian(u, s), s).values
        target = u.centered().values
        assert np.max(np.abs(back - target)) <= 1e-10 * np.max(np.abs(target))

    def test_plancherel(self):
        u = gaussian(0.3, 0.7).sample(GridSpec(1, 8.0, 256))
        for s in (0.0, 0.3, 1.0):
            direct = plancherel_sobolev_sq(u, s)
            assert sobolev_norm(u, s, 2) ** 2 == pytest.approx(direct, rel=1e-10)

    def test_homogeneity(self):
        u = bump().sample(GridSpec(1, 4.0, 128))
        assert sobolev_norm(u * -3.0, 0.4, 2.5) == pytest.approx(3.0 * sobolev_norm(u, 0.4, 2.5), rel=1e-12)

    def test_half_derivative_matches_gradient(self):
        u = gaussian().sample(GridSpec(1, 12.0, 512))
        assert sobolev_norm(u, 1.0, 2) == pytest.approx(lp_norm(gradient_magnitude(u), 2), rel=1e-10)

    def test_imaginary_residue_guard(self):
        g = GridSpec(1, 1.0, 8)
        bad = SpectrumFunction(g, np.fft.fftn(np.ones(8)) * 1j)
        with pytest.raises(ImaginaryResidueError):
            bad.to_grid()

    def test_round_trip(self):
        u = bump().sample(GridSpec(2, 2.0, 16))
        v = SpectrumFunction.of(u).to_grid()
        assert np.allclose(u.values, v.values, atol=1e-14)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10_000), s=st.floats(0.0, 1.0))
def test_interpolation_inequality_p2(seed, s):
    u = random_bandlimited(seed).sample(GridSpec(1, 2.0, 32))
    lhs = sobolev_norm(u, s, 2)
    rhs = lp_norm(u, 2) ** (1 - s) * sobolev_norm(u, 1.0, 2) ** s
    assert lhs <= rhs * (1 + 1e-10)


class TestGradient:
    def test_constant(self):
        g = GridSpec(2, 1.0, 16)
        for d in gradient(GridFunction(g, np.full(g.shape, 4.0))):
            assert np.max(np.abs(d.values)) < 1e-13

    def test_single_mode(self):
        g = GridSpec(1, 2.0, 32)
        (d,) = gradient(_mode(g, trig=np.sin))
        expected = np.pi / g.L * np.cos(np.pi * g.axis() / g.L)
        assert np.max(np.abs(d.values - expected)) < 1e-10

    def test_axes_in_2d(self):
        g = GridSpec(2, 2.0, 16)
        x, y = g.mesh()
        f = GridFunction(g, np.sin(np.pi * x / 2) * np.cos(np.pi * y))
        dx, dy = gradient(f)
        assert np.allclose(dx.values, np.pi / 2 * np.cos(np.pi * x / 2) * np.cos(np.pi * y), atol=1e-10)
        assert np.allclose(dy.values, -np.pi * np.sin(np.pi * x / 2) * np.sin(np.pi * y), atol=1e-10)

    def test_nyquist_dropped(self):
        g = GridSpec(1, 1.0, 8)
        f = GridFunction(g, np.cos(np.pi * np.arange(8)))  # pure Nyquist
        (d,) = gradient(f)
        assert np.max(np.abs(d.values)) < 1e-14

    def test_against_finite_differences(self):
        # central differences are O(h²): error drops by ~4 per halving
        errs = []
        for N in (64, 128):
            g = GridSpec(1, 8.0, N)
            u = gaussian().sample(g)
            (d,) = gradient(u)
            fd = (np.roll(u.values, -1) - np.roll(u.values, 1)) / (2 * g.h)
            errs.append(np.max(np.abs(d.values - fd)))
        assert errs[1] < errs[0] / 3.5
        assert errs[1] < 0.01


class TestKernel:
    def test_constant(self):
        # Γ(1/4) / (2^{1/2} π^{1/2} Γ(1/4)) for n = 1, α = 1/2
        assert riesz_constant(1, 0.5) == pytest.approx(1 / math.sqrt(2 * math.pi))
        with pytest.raises(ValueError):
            riesz_constant(1, 1.0)

    def test_self_cell_exact_in_1d(self):
        g = GridSpec(1, 1.0, 16)
        assert self_cell_weight(g, 0.5) == pytest.approx(2 * (g.h / 2) ** 0.5 / 0.5)

    def test_table_shape(self):
        g = GridSpec(2, 1.0, 8)
        t = kernel_table(g, 0.5)
        assert t.shape == (15, 15)
        assert t[7, 7] == self_cell_weight(g, 0.5)

    def test_zero_and_linearity(self):
        g = GridSpec(1, 4.0, 128)
        z = GridFunction(g, np.zeros(128))
        assert np.all(riesz_kernel_convolution(z, 0.5).values == 0)
        f, h = bump().sample(g), gaussian(0.0, 0.5).sample(g)
        lhs = riesz_kernel_convolution(f + h, 0.5).values
        rhs = riesz_kernel_convolution(f, 0.5).values + riesz_kernel_convolution(h, 0.5).values
        assert np.allclose(lhs, rhs, rtol=1e-13, atol=1e-15)

    def test_cost_cap(self):
        with pytest.raises(ValueError):
            riesz_kernel_convolution(GridFunction(GridSpec(2, 1.0, 256), np.zeros((256, 256))), 0.5)

    def test_pointwise_against_direct_sum(self):
        g = GridSpec(2, 1.0, 8)
        rng = np.random.default_rng(1)
        f = GridFunction(g, rng.random(g.shape))
        out = riesz_kernel_convolution(f, 0.7).values
        pts = g.points()
        d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
        w = np.where(d > 0, np.where(d > 0, d, 1.0) ** (0.7 - 2) * g.cell_volume, self_cell_weight(g, 0.7))
        ref = riesz_constant(2, 0.7) * (w @ f.values.ravel())
        assert np.allclose(out.ravel(), ref, rtol=1e-12)

    @pytest.mark.parametrize("tf", [bump(), gaussian()], ids=lambda t: t.name)
    def test_backends_agree(self, tf):
        f = tf.sample(GridSpec(1, 16.0, 1024))
        assert riesz_backend_gap(f, 0.5) <= 0.02

    def test_gap_shrinks_with_box(self):
        gaps = [riesz_backend_gap(bump().sample(GridSpec(1, L, int(64 * L))), 0.5) for L in (4.0, 16.0)]
        assert gaps[1] < gaps[0]
