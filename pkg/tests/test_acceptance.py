"""Acceptance criteria, one test each, at their stated tolerances and time limits.

Every test prints ``criterion K: PASS|FAIL ...`` and the lines are repeated
in the terminal summary.  Sub-checks are all evaluated before asserting so
a failing line names every violated part.
"""

import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from hardycheck.cli import main
from hardycheck.grid import Exponents, GridFunction, GridSpec
from hardycheck.hardy import (
    cazenave_check,
    classical_sharpness_sweep,
    endpoint_blowup,
    fractional_hardy_quotient,
    interpolation_check,
)
from hardycheck.maximal import (
    MaximalConfig,
    maximal,
    maximal_centered,
    maximal_uncentered,
    strong_pp_ratio,
    weak11_constant,
)
from hardycheck.spectral import frac_laplacian, riesz_backend_gap, riesz_potential
from hardycheck.splitting import (
    SplitConfig,
    a1_maximal_bound,
    b2_majorant,
    duality_check,
    hardy_operator,
    split_operator,
    t_maximal_bound,
)
from hardycheck.testfam import bump, bump_family, gaussian, indicator, plateau, random_bandlimited, standard_family
from test_maximal import brute_intervals

pytestmark = pytest.mark.acceptance


class Criterion:
    """Collects named sub-checks, enforces the time limit and logs one line."""

    def __init__(self, number: int, title: str, limit: float | None):
        self.number, self.title, self.limit = number, title, limit
        self.failures: list[str] = []
        self.notes: list[str] = []

    def check(self, ok, label: str, detail: str = ""):
        (self.notes if ok else self.failures).append(f"{label}{' ' + detail if detail else ''}")
        return ok

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc_type is not None:
            self.failures.append(f"raised {exc_type.__name__}: {exc}")
        if self.limit is not None and elapsed >= self.limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.limit:g}s")
        status = "FAIL" if self.failures else "PASS"
        info = "; ".join(self.failures) if self.failures else "; ".join(self.notes[-3:])
        line = f"criterion {self.number}: {status} {self.title} ({elapsed:.2f}s) {info}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        if exc_type is None:
            assert not self.failures, line
        return False


def test_01_inverse_pair():
    with Criterion(1, "inverse pair", None) as c:
        for n in (1, 2):
            g = GridSpec(n, 2.0, 64 if n == 1 else 32)
            for s in (0.3, 0.5, 1.0):
                t0 = time.perf_counter()
                u = random_bandlimited(n + 10).sample(g)
                u = u.with_values(u.values + 1.75)
                back = riesz_potential(frac_laplacian(u, s), s).values
                target = u.centered().values
                err = float(np.max(np.abs(back - target)) / np.max(np.abs(target)))
                dt = time.perf_counter() - t0
                c.check(err <= 1e-10, f"n={n},s={s}", f"err={err:.1e}")
                c.check(dt < 1.0, f"n={n},s={s} time", f"{dt:.3f}s")


def test_02_backend_cross_validation():
    with Criterion(2, "spectral vs kernel Riesz potential", 30) as c:
        f = bump().sample(GridSpec(1, 16.0, 1024))
        gap = riesz_backend_gap(f, 0.5)
        c.check(gap <= 0.02, "central-half relative sup gap", f"{gap:.4f}")


def test_03_maximal_point_values():
    with Criterion(3, "maximal point values", 10) as c:
        g = GridSpec(1, 4.0, 256)
        f = indicator(0.0, 1.0).sample(g)
        tol = 2 * g.h
        mc = maximal_centered(f).at(2.0)
        mu = maximal_uncentered(f).at(2.0)
        c.check(abs(mc - 0.25) <= tol, "centered Mf(2) = 1/4", f"got {mc:.5f}")
        c.check(abs(mu - 1 / 3) <= tol, "uncentered Mf(2) = 1/3", f"got {mu:.5f}")
        rng = np.random.default_rng(3)
        for N in (8, 16, 32, 64):
            gs = GridSpec(1, 1.0, N)
            a = rng.integers(0, 10, N).astype(float)
            same = np.array_equal(maximal_uncentered(GridFunction(gs, a)).values, brute_intervals(a))
            c.check(same, f"sweep equals enumeration at N={N}")


def test_04_classical_sharpness():
    with Criterion(4, "classical sharpness sweep", 10) as c:
        rows = classical_sharpness_sweep(2.0, [1e2, 1e4, 1e6])
        r = [row.ratio for row in rows]
        c.check(r[0] < r[1] < r[2], "strictly increasing", str([round(x, 4) for x in r]))
        c.check(r[2] >= 0.82, "T=1e6 ratio >= 0.82", f"{r[2]:.4f} (1-2/ln T = {1 - 2 / math.log(1e6):.4f})")
        c.check(all(x < 1 for x in r), "all ratios < 1")


def test_05_cazenave():
    with Criterion(5, "gradient-weighted inequality", 30) as c:
        res = cazenave_check(gaussian().sample(GridSpec(2, 8.0, 256)), 2, 1)
        c.check(abs(res.lhs / math.pi**1.5 - 1) <= 0.02, "LHS vs pi^1.5", f"{res.lhs:.4f}")
        c.check(abs(res.rhs / (2 * math.pi) - 1) <= 0.02, "RHS vs 2 pi", f"{res.rhs:.4f}")
        c.check(res.lhs < res.rhs, "LHS < RHS")


def test_06_fractional_constant():
    with Criterion(6, "fractional empirical constant", 120) as c:
        consts = []
        for N in (512, 1024, 2048):
            g = GridSpec(1, 8.0, N)
            qs = [fractional_hardy_quotient(t.sample(g), 0.3, 2).ratio for t in standard_family()]
            C = max(qs)
            consts.append(C)
            c.check(all(q <= C for q in qs), f"N={N} every Q <= constant", f"C={C:.4f}")
        spread = (max(consts) - min(consts)) / min(consts)
        c.check(spread <= 0.10, "refinement spread", f"{spread:.4f}")


def test_07_endpoint_blowup():
    with Criterion(7, "endpoint blow-up", 60) as c:
        u = plateau().sample(GridSpec(1, 8.0, 32768))
        rows = endpoint_blowup(u, Exponents(1, 2.0, 0.5, allow_endpoint=True), [0.1, 0.05, 0.025, 0.0125])
        inc = np.diff([r.lhs for r in rows])
        target = 2 * math.log(2)
        c.check(np.all(np.abs(inc / target - 1) <= 0.15), "increments vs 2 ln 2", str(np.round(inc, 4).tolist()))
        rhs = [r.rhs for r in rows]
        var = (max(rhs) - min(rhs)) / min(rhs)
        c.check(var < 0.01, "RHS variation", f"{var:.1e}")


def test_08_partition_and_duality():
    with Criterion(8, "partition and duality identities", 60) as c:
        g = GridSpec(1, 1.0, 64)
        worst_part, worst_dual = 0.0, 0.0
        for kappa in (2.0, 10.0, 100.0):
            cfg = SplitConfig(kappa)
            for seed in range(10):
                rng = np.random.default_rng(seed)
                f = GridFunction(g, rng.random(64))
                h = GridFunction(g, rng.random(64))
                a1, a2 = split_operator(f, 0.3, cfg)
                full = hardy_operator(f, 0.3).values
                worst_part = max(worst_part, float(np.max(np.abs(a1.values + a2.values - full) / full)))
                worst_dual = max(worst_dual, duality_check(f, h, 0.3, cfg))
        c.check(worst_part <= 1e-12, "partition", f"{worst_part:.1e}")
        c.check(worst_dual <= 1e-10, "duality", f"{worst_dual:.1e}")


def test_09_proof_step_bounds():
    with Criterion(9, "proof-step bounds", 120) as c:
        cfg = SplitConfig(100.0)
        fam = bump_family()
        a1s, ts = [], []
        worst_major, worst_ratio = 0.0, 0.0
        for N in (1024, 2048):
            g = GridSpec(1, 4.0, N)
            a_row, t_row = [], []
            for tf in fam:
                u = tf.sample(g)
                a_row.append(a1_maximal_bound(u, 0.3, cfg).ratio)
                t_row.append(t_maximal_bound(u, 0.3, 2.0, cfg))
                _, a2 = split_operator(u, 0.3, cfg)
                b2 = b2_majorant(u, 0.3, cfg)
                excess = a2.values - b2.values
                worst_major = max(worst_major, float(np.max(excess)))
                pos = b2.values > 0
                worst_ratio = max(worst_ratio, float(np.max(a2.values[pos] / b2.values[pos])))
            a1s.append(a_row)
            ts.append(t_row)
        for label, table in (("A1/Mf", a1s), ("|Tg|/(M|g|^q)^(1/q)", ts)):
            vals = np.array(table)
            c.check(np.all(np.isfinite(vals)), f"{label} finite")
            spread = max((max(col) - min(col)) / min(col) if min(col) > 0 else 0.0 for col in vals.T)
            c.check(spread <= 0.15, f"{label} refinement spread", f"{spread:.4f}")
        c.check(worst_major <= 0.0, "A2 <= B2 at every node", f"max(A2 - B2) = {worst_major:.3e}, max A2/B2 = {worst_ratio:.4f}")


def test_10_maximal_property_suite():
    with Criterion(10, "maximal operator properties", 60) as c:
        rng = np.random.default_rng(10)
        cases = 0
        bad = {k: 0 for k in ("sublinear", "homogeneous", "monotone", "equivariant", "centered<=uncentered")}
        for case in range(100):
            n, N = (1, 32) if case % 2 == 0 else (2, 8)
            g = GridSpec(n, 1.0, N)
            f = GridFunction(g, rng.integers(-9, 10, g.shape).astype(float))
            h = GridFunction(g, rng.integers(-9, 10, g.shape).astype(float))
            for cfg in (MaximalConfig(), MaximalConfig("uncentered")):
                Mf, Mh = maximal(f, cfg).values, maximal(h, cfg).values
                bad["sublinear"] += not np.all(maximal(f + h, cfg).values <= (Mf + Mh) * (1 + 1e-14))
                bad["homogeneous"] += not np.array_equal(maximal(f * -4.0, cfg).values, 4.0 * Mf)
                big = f.with_values(np.maximum(np.abs(f.values), np.abs(h.values)))
                bad["monotone"] += not np.all(Mf <= maximal(big, cfg).values)
            bad["centered<=uncentered"] += not np.all(
                maximal_centered(f).values <= maximal_uncentered(f).values
            )
            # equivariance: interior support, capped radius, shift by whole cells
            R, shift = 3, 1 + case % 4
            gl = GridSpec(1, 1.0, 64)
            a = np.zeros(64)
            a[24:40] = rng.integers(0, 9, 16)
            for mode in ("centered", "uncentered"):
                cfg = MaximalConfig(mode, max_radius=R)
                M0 = maximal(GridFunction(gl, a), cfg).values
                M1 = maximal(GridFunction(gl, np.roll(a, shift)), cfg).values
                i = np.arange(2 * R, 64 - 2 * R - shift)
                bad["equivariant"] += not np.array_equal(M1[i + shift], M0[i])
            cases += 1
        for k, v in bad.items():
            c.check(v == 0, k, f"{v} violations in {cases} cases")

        levels = np.logspace(-3, 0, 61)
        weak, strong = [], []
        fam = [gaussian(0.0, 0.4), bump(), plateau()]
        for N in (256, 512):
            g = GridSpec(1, 4.0, N)
            f = indicator(0.0, 1.0).sample(g)
            weak.append(weak11_constant(maximal_centered(f), f, levels))
            strong.append(max(strong_pp_ratio(t.sample(g), 2.0) for t in fam))
        for label, vals in (("weak (1,1)", weak), ("strong (2,2)", strong)):
            spread = (max(vals) - min(vals)) / min(vals)
            c.check(spread <= 0.10, f"{label} refinement spread", f"{spread:.2e}")


def test_11_interpolation():
    with Criterion(11, "p = 2 interpolation", 1.0) as c:
        u = gaussian().sample(GridSpec(1, 8.0, 256))
        for s in (0.0, 0.25, 0.5, 0.75, 1.0):
            r = interpolation_check(u, s, 2).ratio
            c.check(r <= 1 + 1e-8, f"s={s}", f"ratio={r:.10f}")


def test_12_cli_determinism(tmp_path):
    with Criterion(12, "CLI determinism and exit codes", None) as c:
        args = ["maximal-suite", "--N", "128,256"]
        codes = [main(["--out", str(tmp_path / d), *args]) for d in ("a", "b")]
        c.check(codes == [0, 0], "clean runs exit 0", str(codes))

        def body(d):
            lines = (tmp_path / d / "maximal-suite.csv").read_text(encoding="utf-8").splitlines()
            return [line.rsplit(",", 1)[0] for line in lines]

        c.check(body("a") == body("b"), "CSV byte-identical without seconds")
        forced = main(["--out", str(tmp_path / "c"), *args, "--tol-point", "0"])
        c.check(forced == 1, "forced failure exits 1", str(forced))
        bad = main(["--out", str(tmp_path / "d"), "verify-fractional", "--s", "0.5"])
        c.check(bad == 2, "precondition violation exits 2", str(bad))
