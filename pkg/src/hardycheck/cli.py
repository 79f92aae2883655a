"""Command-line runner for the verification experiments.

Usage::

    hardycheck [--config FILE] [--out DIR] SUBCOMMAND [options]

Each run writes ``<out>/<subcommand>.csv`` and ``<out>/<subcommand>.json``
and prints a summary table.  Exit status: 0 if every row passes, 1 if any
check fails, 2 on a configuration or precondition error.

Config files are flat ``key = value`` text; keys are the long option names
(``tol-stability`` or ``tol_stability``), lists are comma separated.
Command-line options override file values.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
import time
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path

import numpy as np

from . import testfam
from .grid import Exponents, GridFunction, GridSpec, HalfLineGrid
from .hardy import (
    cazenave_check,
    classical_hardy_check,
    classical_sharpness_sweep,
    endpoint_blowup,
    fractional_hardy_quotient,
)
from .maximal import maximal_centered, maximal_uncentered, strong_pp_ratio, weak11_constant
from .spectral import unit_ball_volume
from .splitting import (
    SplitConfig,
    a1_maximal_bound,
    b2_majorant,
    duality_check,
    far_kernel_factor,
    hardy_operator,
    split_operator,
    t_maximal_bound,
)

log = logging.getLogger("hardycheck")

CSV_COLUMNS = ["experiment", "n", "p", "s", "q", "kappa", "N", "L", "lhs", "rhs", "ratio", "pass", "seconds"]

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------


@dataclass
class RunConfig:
    experiment: str = ""
    n: int | None = None
    p: float | None = None
    s: float | None = None
    q: float | None = None
    kappa: float | None = None
    N: list[int] | None = None
    L: float | None = None
    eps: list[float] | None = None
    T: list[float] | None = None
    family: str | None = None
    seeds: list[int] | None = None
    identity_N: int | None = None
    tol_stability: float | None = None
    tol_increment: float | None = None
    tol_rhs: float | None = None
    tol_duality: float | None = None
    tol_partition: float | None = None
    tol_point: float | None = None
    majorant_factor: str | None = None
    out: str = "reports"


_INT_LIST = {"N", "seeds"}
_FLOAT_LIST = {"eps", "T"}
_INT = {"n", "identity_N"}
_STR = {"family", "majorant_factor", "experiment", "out"}


def _parse_value(key: str, raw):
    if raw is None:
        return None
    try:
        if key in _INT_LIST:
            items = raw if isinstance(raw, list) else str(raw).split(",")
            return [int(float(x)) for x in items if str(x).strip()]
        if key in _FLOAT_LIST:
            items = raw if isinstance(raw, list) else str(raw).split(",")
            return [float(x) for x in items if str(x).strip()]
        if key in _INT:
            return int(raw)
        if key in _STR:
            return str(raw).strip()
        return float(raw)
    except ValueError:
        raise ConfigError(f"bad value for {key!r}: {raw!r}") from None


_KEYS = {f.name for f in fields(RunConfig)}


def read_config_file(path) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        sep = "=" if "=" in line else ":"
        if sep not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split(sep, 1))
        key = key.replace("-", "_")
        if key not in _KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = _parse_value(key, value)
    return out


DEFAULTS = {
    "verify-classical": dict(p=2.0, N=[4096], L=64.0),
    "sharpness-sweep": dict(p=2.0, T=[1e2, 1e4, 1e6]),
    "verify-cazenave": dict(n=2, p=2.0, q=1.0, N=[256], L=8.0, family="gaussian"),
    "verify-fractional": dict(n=1, s=0.3, p=2.0, N=[512, 1024, 2048], L=8.0, family="standard",
                              seeds=[0, 1, 2], tol_stability=0.10),
    "endpoint-blowup": dict(n=1, p=2.0, s=0.5, N=[32768], L=8.0, eps=[0.1, 0.05, 0.025, 0.0125],
                            tol_increment=0.15, tol_rhs=0.01),
    "maximal-suite": dict(n=1, p=2.0, N=[256, 512], L=4.0, tol_stability=0.10, tol_point=2.0),
    "proof-steps": dict(n=1, s=0.3, q=2.0, p=2.0, kappa=100.0, N=[1024, 2048], L=4.0, seeds=list(range(10)),
                        identity_N=64, tol_stability=0.15, tol_duality=1e-10, tol_partition=1e-12,
                        majorant_factor="sharp"),
}


def resolve(experiment: str, file_values: dict, flag_values: dict) -> RunConfig:
    """Defaults, then config file, then flags."""
    merged = dict(DEFAULTS[experiment])
    merged.update({k: v for k, v in file_values.items() if v is not None})
    merged.update({k: v for k, v in flag_values.items() if v is not None})
    merged["experiment"] = experiment
    return RunConfig(**merged)


# ---------------------------------------------------------------------------
# Report rows
# ---------------------------------------------------------------------------


@dataclass
class ReportRow:
    experiment: str
    n: int | None = None
    p: float | None = None
    s: float | None = None
    q: float | None = None
    kappa: float | None = None
    N: int | None = None
    L: float | None = None
    lhs: float | None = None
    rhs: float | None = None
    ratio: float | None = None
    passed: bool = False
    seconds: float = 0.0
    order: int = field(default=0, repr=False)

    def record(self) -> dict:
        d = asdict(self)
        d.pop("order")
        d["pass"] = d.pop("passed")
        for k, v in d.items():
            if isinstance(v, (np.floating, np.integer, np.bool_)):
                d[k] = v.item()
        return {k: d[k] for k in CSV_COLUMNS}


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_reports(rows: list[ReportRow], cfg: RunConfig, name: str) -> tuple[Path, Path]:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = sorted(rows, key=lambda r: r.order)
    csv_path = out / f"{name}.csv"
    json_path = out / f"{name}.json"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            rec = r.record()
            w.writerow([_csv_cell(rec[c]) for c in CSV_COLUMNS])
    config_echo = {k: v for k, v in asdict(cfg).items() if v is not None}
    payload = {"config": config_echo, "rows": [_json_safe(r.record()) for r in rows]}
    json_path.write_text(json.dumps(payload, indent=2, allow_nan=False) + "\n", encoding="utf-8")
    return csv_path, json_path


def _json_safe(rec: dict) -> dict:
    # JSON has no inf/nan; encode them as strings so the file stays valid
    return {k: (repr(v) if isinstance(v, float) and not math.isfinite(v) else v) for k, v in rec.items()}


def print_summary(rows: list[ReportRow], stream=sys.stdout):
    width = max([len("experiment")] + [len(r.experiment) for r in rows])
    head = f"{'experiment':<{width}} {'lhs':>13} {'rhs':>13} {'ratio':>11}  pass"
    print(head, file=stream)
    print("-" * len(head), file=stream)

    def fmt(v):
        return f"{v:13.6g}" if isinstance(v, (int, float)) and v is not None else f"{'':>13}"

    for r in sorted(rows, key=lambda r: r.order):
        ratio = f"{r.ratio:11.5g}" if r.ratio is not None else f"{'':>11}"
        print(f"{r.experiment:<{width}} {fmt(r.lhs)} {fmt(r.rhs)} {ratio}  {'ok' if r.passed else 'FAIL'}", file=stream)


class _Rows:
    """Row collector stamping a deterministic emission order and wall time."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.rows: list[ReportRow] = []
        self._t = time.perf_counter()

    def add(self, experiment: str, **kw) -> ReportRow:
        now = time.perf_counter()
        base = {k: getattr(self.cfg, k) for k in ("n", "p", "s", "q", "kappa", "L")}
        base.update(kw)
        row = ReportRow(experiment, seconds=round(now - self._t, 6), order=len(self.rows), **base)
        self._t = now
        self.rows.append(row)
        return row


def _spread(values) -> float:
    values = list(values)
    lo, hi = min(values), max(values)
    if lo == hi:
        return 0.0
    return (hi - lo) / abs(lo) if lo != 0 else math.inf


# ---------------------------------------------------------------------------
# Experiments.  Each ``prepare_*`` validates preconditions and returns a
# zero-argument runner, so nothing is computed before the whole config is
# known to be admissible.
# ---------------------------------------------------------------------------


def _require(cfg: RunConfig, *keys):
    for k in keys:
        if getattr(cfg, k) is None:
            raise ConfigError(f"{cfg.experiment}: missing required setting {k!r}")


def _family(cfg: RunConfig) -> list:
    name = cfg.family
    if name == "standard":
        return testfam.standard_family(tuple(cfg.seeds or (0, 1, 2)))
    if name == "bumps":
        return testfam.bump_family()
    single = {"gaussian": testfam.gaussian, "bump": testfam.bump, "plateau": testfam.plateau}
    if name not in single:
        raise ConfigError(f"unknown family {name!r}; choose standard, bumps, gaussian, bump or plateau")
    return [single[name]()]


def _grids(cfg: RunConfig) -> list[GridSpec]:
    try:
        return [GridSpec(cfg.n, cfg.L, N) for N in cfg.N]
    except ValueError as exc:
        raise ConfigError(f"{cfg.experiment}: {exc}") from None


def _sample_all(fam, grids):
    try:
        return [[tf.sample(g) for tf in fam] for g in grids]
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def prepare_classical(cfg: RunConfig):
    _require(cfg, "p", "N", "L")
    if not cfg.p > 1:
        raise ConfigError("verify-classical: need p > 1")
    grid = HalfLineGrid.uniform(cfg.L, cfg.N[0])
    f = testfam.half_line_indicator(0.0, 1.0).sample(grid)

    def run(rows: _Rows):
        r = classical_hardy_check(f, cfg.p)
        rows.add("verify-classical[1_[0,1]]", n=1, s=None, q=None, kappa=None, N=grid.size,
                 lhs=r.lhs, rhs=r.rhs, ratio=r.ratio, passed=r.passed)

    return run


def prepare_sharpness(cfg: RunConfig):
    _require(cfg, "p", "T")
    if not cfg.p > 1:
        raise ConfigError("sharpness-sweep: need p > 1")
    if any(t < 10 for t in cfg.T) or any(b <= a for a, b in zip(cfg.T, cfg.T[1:])):
        raise ConfigError("sharpness-sweep: cutoffs T must increase and be >= 10")

    def run(rows: _Rows):
        for T, r in zip(cfg.T, classical_sharpness_sweep(cfg.p, cfg.T)):
            rows.add(f"sharpness-sweep[T={T:g}]", n=1, s=None, q=None, kappa=None, N=r.grid["N"],
                     L=r.grid["L"], lhs=r.lhs, rhs=r.rhs, ratio=r.ratio, passed=r.passed)

    return run


def prepare_cazenave(cfg: RunConfig):
    _require(cfg, "n", "p", "q", "N", "L")
    if not (1 <= cfg.p and 0 <= cfg.q <= cfg.p and cfg.q < cfg.n):
        raise ConfigError(f"verify-cazenave: need 1 <= p, 0 <= q <= p, q < n (got n={cfg.n}, p={cfg.p}, q={cfg.q})")
    fam = _family(cfg)
    grids = _grids(cfg)
    samples = _sample_all(fam, grids)

    def run(rows: _Rows):
        for g, us in zip(grids, samples):
            for tf, u in zip(fam, us):
                r = cazenave_check(u, cfg.p, cfg.q)
                rows.add(f"verify-cazenave[{tf.name}]", s=None, kappa=None, N=g.N, lhs=r.lhs, rhs=r.rhs,
                         ratio=r.ratio, passed=r.passed)

    return run


def prepare_fractional(cfg: RunConfig):
    _require(cfg, "n", "p", "s", "N", "L", "tol_stability")
    try:
        Exponents(cfg.n, cfg.p, cfg.s)
    except ValueError as exc:
        raise ConfigError(f"verify-fractional: {exc}") from None
    if not cfg.p > 1:
        raise ConfigError("verify-fractional: need p > 1")
    fam = _family(cfg)
    grids = _grids(cfg)
    samples = _sample_all(fam, grids)

    def run(rows: _Rows):
        consts = []
        for g, us in zip(grids, samples):
            qs = []
            for tf, u in zip(fam, us):
                r = fractional_hardy_quotient(u, cfg.s, cfg.p)
                qs.append(r.ratio)
                rows.add(f"verify-fractional[{tf.label()}]", q=None, kappa=None, N=g.N,
                         lhs=r.lhs, rhs=r.rhs, ratio=r.ratio, passed=r.passed)
            c = max(qs)
            consts.append(c)
            rows.add("verify-fractional[empirical-constant]", q=None, kappa=None, N=g.N, ratio=c,
                     passed=math.isfinite(c) and all(q <= c for q in qs))
        spread = _spread(consts)
        rows.add("verify-fractional[refinement-spread]", q=None, kappa=None, lhs=min(consts), rhs=max(consts),
                 ratio=spread, passed=spread <= cfg.tol_stability)

    return run


def prepare_blowup(cfg: RunConfig):
    _require(cfg, "n", "p", "s", "N", "L", "eps", "tol_increment", "tol_rhs")
    try:
        exps = Exponents(cfg.n, cfg.p, cfg.s, allow_endpoint=True)
    except ValueError as exc:
        raise ConfigError(f"endpoint-blowup: {exc}") from None
    if any(e <= 0 for e in cfg.eps) or any(b >= a for a, b in zip(cfg.eps, cfg.eps[1:])):
        raise ConfigError("endpoint-blowup: eps must be positive and decreasing")
    (grid,) = _grids(replace(cfg, N=cfg.N[:1]))
    if cfg.eps[-1] < 4 * grid.h:
        raise ConfigError(f"endpoint-blowup: smallest eps {cfg.eps[-1]} under-resolved by h = {grid.h}")
    u = _sample_all([testfam.plateau()], [grid])[0][0]
    sphere = cfg.n * unit_ball_volume(cfg.n)

    def run(rows: _Rows):
        table = endpoint_blowup(u, exps, cfg.eps)
        rhs0 = table[0].rhs
        prev = None
        for row in table:
            ok = abs(row.rhs - rhs0) <= cfg.tol_rhs * abs(rhs0)
            if prev is not None:
                expected = sphere * math.log(prev.eps / row.eps)  # u = 1 near the origin
                ok = ok and row.lhs > prev.lhs and abs((row.lhs - prev.lhs) / expected - 1) <= cfg.tol_increment
            rows.add(f"endpoint-blowup[eps={row.eps:g}]", q=None, kappa=None, N=grid.N,
                     lhs=row.lhs, rhs=row.rhs, ratio=row.ratio, passed=ok)
            prev = row

    return run


WEAK_LEVELS = np.logspace(-3, 0, 61)


def prepare_maximal(cfg: RunConfig):
    _require(cfg, "n", "p", "N", "L", "tol_stability", "tol_point")
    if cfg.n != 1:
        raise ConfigError("maximal-suite: the point-value oracles are one-dimensional; use n = 1")
    if not cfg.p > 1:
        raise ConfigError("maximal-suite: need p > 1")
    grids = _grids(cfg)
    if any(g.L < 4 for g in grids):
        raise ConfigError("maximal-suite: need L >= 4 so the balls around x = 2 are not clipped")
    strong_fam = [testfam.gaussian(0.0, 0.4), testfam.bump(), testfam.plateau()]
    ind = _sample_all([testfam.indicator(0.0, 1.0)], grids)
    strong = _sample_all(strong_fam, grids)

    def run(rows: _Rows):
        weak, stro = [], []
        for g, (f,), fam in zip(grids, ind, strong):
            tol = cfg.tol_point * g.h
            for label, op, exact in (("centered", maximal_centered, 0.25), ("uncentered", maximal_uncentered, 0.5)):
                val = op(f).at(2.0)
                rows.add(f"maximal-point[{label},x=2]", s=None, q=None, kappa=None, N=g.N, lhs=val, rhs=exact,
                         ratio=val / exact, passed=abs(val - exact) <= tol)
            w = weak11_constant(maximal_centered(f), f, WEAK_LEVELS)
            weak.append(w)
            rows.add("maximal-weak11[1_[0,1]]", s=None, q=None, kappa=None, N=g.N, ratio=w, passed=math.isfinite(w))
            a = max(strong_pp_ratio(u, cfg.p) for u in fam)
            stro.append(a)
            rows.add("maximal-strong-pp[family]", s=None, q=None, kappa=None, N=g.N, ratio=a,
                     passed=math.isfinite(a) and a >= 1)
        for label, vals in (("weak11", weak), ("strong-pp", stro)):
            sp = _spread(vals)
            rows.add(f"maximal-{label}[refinement-spread]", s=None, q=None, kappa=None, lhs=min(vals),
                     rhs=max(vals), ratio=sp, passed=sp <= cfg.tol_stability)

    return run


def prepare_proof_steps(cfg: RunConfig):
    _require(cfg, "n", "s", "q", "kappa", "N", "L", "seeds", "identity_N", "tol_stability", "tol_duality",
             "tol_partition", "majorant_factor")
    if not 0 < cfg.s < cfg.n:
        raise ConfigError("proof-steps: need 0 < s < n")
    if not cfg.q > cfg.n / (cfg.n - cfg.s):
        raise ConfigError(f"proof-steps: need q > n/(n-s) = {cfg.n / (cfg.n - cfg.s):g}")
    if cfg.majorant_factor not in ("sharp", "1"):
        raise ConfigError("proof-steps: majorant_factor must be 'sharp' or '1'")
    try:
        split = SplitConfig(cfg.kappa)
    except ValueError as exc:
        raise ConfigError(f"proof-steps: {exc}") from None
    grids = _grids(cfg)
    ident_grid = _grids(replace(cfg, N=[cfg.identity_N]))[0]
    fam = testfam.bump_family()
    samples = _sample_all(fam, grids)
    factor = far_kernel_factor(cfg.n, cfg.s, cfg.kappa) if cfg.majorant_factor == "sharp" else 1.0

    def run(rows: _Rows):
        common = dict(p=None, q=None)
        part, dual = 0.0, 0.0
        for seed in cfg.seeds:
            rng = np.random.default_rng(seed)
            f = _random_grid_function(ident_grid, rng)
            g = _random_grid_function(ident_grid, rng)
            a1, a2 = split_operator(f, cfg.s, split)
            full = hardy_operator(f, cfg.s).values
            part = max(part, float(np.max(np.abs(a1.values + a2.values - full) / np.maximum(full, 1e-300))))
            dual = max(dual, duality_check(f, g, cfg.s, split))
        rows.add("proof-steps[partition]", N=ident_grid.N, ratio=part, passed=part <= cfg.tol_partition, **common)
        rows.add("proof-steps[duality]", N=ident_grid.N, ratio=dual, passed=dual <= cfg.tol_duality, **common)

        a1s, ts = [], []
        maj_ok, maj_worst = True, 0.0
        for g, us in zip(grids, samples):
            a_row, t_row = [], []
            for tf, u in zip(fam, us):
                a_row.append(a1_maximal_bound(u, cfg.s, split).ratio)
                t_row.append(t_maximal_bound(u, cfg.s, cfg.q, split))
                _, a2 = split_operator(u, cfg.s, split)
                b2 = b2_majorant(u, cfg.s, split)
                maj_ok &= bool(np.all(a2.values <= factor * b2.values))
                pos = b2.values > 0
                if np.any(pos):
                    maj_worst = max(maj_worst, float(np.max(a2.values[pos] / b2.values[pos])))
            a1s.append(a_row)
            ts.append(t_row)
            rows.add("proof-steps[a1-maximal-bound]", q=None, N=g.N, ratio=max(a_row),
                     passed=all(map(math.isfinite, a_row)))
            rows.add("proof-steps[t-maximal-bound]", N=g.N, ratio=max(t_row), passed=all(map(math.isfinite, t_row)))
        for label, table in (("a1-maximal-bound", a1s), ("t-maximal-bound", ts)):
            worst = max(_spread(col) for col in zip(*table))
            rows.add(f"proof-steps[{label}-refinement-spread]", ratio=worst, passed=worst <= cfg.tol_stability, **common)
        rows.add(f"proof-steps[majorization,factor={factor:.6g}]", lhs=maj_worst, rhs=factor, ratio=maj_worst / factor,
                 passed=maj_ok, **common)

    return run


def _random_grid_function(spec: GridSpec, rng) -> GridFunction:
    return GridFunction(spec, rng.random(spec.shape))


PREPARERS = {
    "verify-classical": prepare_classical,
    "sharpness-sweep": prepare_sharpness,
    "verify-cazenave": prepare_cazenave,
    "verify-fractional": prepare_fractional,
    "endpoint-blowup": prepare_blowup,
    "maximal-suite": prepare_maximal,
    "proof-steps": prepare_proof_steps,
}


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hardycheck", description=__doc__.split("\n\n")[0])
    parser.add_argument("--config", help="key = value config file")
    parser.add_argument("--out", help="output directory (default: reports)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    for name in list(PREPARERS) + ["all"]:
        sp = sub.add_parser(name, help=f"run {name}")
        if name == "all":
            continue
        sp.add_argument("--n", type=int)
        sp.add_argument("--p", type=float)
        sp.add_argument("--s", type=float)
        sp.add_argument("--q", type=float)
        sp.add_argument("--kappa", type=float)
        sp.add_argument("--N", help="points per axis, comma separated for refinement studies")
        sp.add_argument("--L", type=float, help="box half-width (half-line end for verify-classical)")
        sp.add_argument("--eps", help="comma-separated inner cutoffs")
        sp.add_argument("--T", help="comma-separated truncation points")
        sp.add_argument("--family")
        sp.add_argument("--seeds")
        sp.add_argument("--identity-N", dest="identity_N", type=int)
        for tol in ("stability", "increment", "rhs", "duality", "partition", "point"):
            sp.add_argument(f"--tol-{tol}", dest=f"tol_{tol}", type=float)
        sp.add_argument("--majorant-factor", dest="majorant_factor", choices=["sharp", "1"])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if not args.command:
        parser.print_usage(sys.stderr)
        print("hardycheck: error: a subcommand is required", file=sys.stderr)
        return EXIT_CONFIG

    try:
        file_values = read_config_file(args.config) if args.config else {}
        flags = {k: v for k, v in vars(args).items() if k in _KEYS and k not in ("experiment",)}
        flags = {k: _parse_value(k, v) for k, v in flags.items()}
        names = list(PREPARERS) if args.command == "all" else [args.command]
        if args.command == "all":
            flags = {"out": flags.get("out")}
        configs = [resolve(name, file_values, flags) for name in names]
        runners = [PREPARERS[c.experiment](c) for c in configs]
    except ConfigError as exc:
        print(f"hardycheck: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    rows = _Rows(configs[0])
    for c, run in zip(configs, runners):
        rows.cfg = c
        log.info("running %s", c.experiment)
        run(rows)

    report_cfg = configs[0] if len(configs) == 1 else replace(configs[0], experiment="all")
    csv_path, json_path = write_reports(rows.rows, report_cfg, args.command)
    print_summary(rows.rows)
    failed = [r for r in rows.rows if not r.passed]
    print(f"\nwrote {csv_path} and {json_path}")
    if failed:
        print(f"hardycheck: {len(failed)} check(s) failed, first: {failed[0].experiment}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
