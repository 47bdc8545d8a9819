"""Command line front end: configuration, experiment runs, CSV output.

Subcommands expose the library's capabilities: ``gfactor`` tabulates the
decoherence exponent and suppression factor, ``evolve`` emits a two-qubit
state trajectory, ``fig1`` runs the bundled concurrence experiment, and
``oracle-check`` drives the brute-force validation of the channel.

Exit codes: 0 success, 2 configuration error, 3 numerical-tolerance
failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import cmath
import math
import os
import sys
from dataclasses import dataclass, replace

import numpy as np

from .bath import OhmicBath, Temperature, default_quadrature, g_ohmic, suppression_factor
from .channel import QubitParams, evolve_pair, max_decoherence_analytic
from .entanglement import concurrence, initial_state
from .errors import ConfigError, DephasingError, IoError, ToleranceNotMet
from .oracle import FockMode, OracleSystem, channel_discrepancy, split_deviation

__all__ = [
    "CSV_HEADER",
    "ExperimentConfig",
    "KS_IN_SECONDS",
    "OracleCheckConfig",
    "OracleRow",
    "TimeSeriesRecord",
    "config_from_mapping",
    "emit_csv",
    "load_config",
    "main",
    "oracle_config_from_mapping",
    "parse_config_text",
    "run_experiment",
    "run_oracle_check",
    "serialize_config",
]

CSV_HEADER = "t_seconds,t_ks,g1,g2,delta1,delta2,concurrence,s_reference,d1,d2"

# Display unit used alongside seconds in the output tables.
KS_IN_SECONDS = 1.51929e-9  # 1 ks = 1519.29 ps

ORACLE_CSV_HEADER = "t_seconds,split_vs_exact,channel_vs_split,ratio_at_half_t"

CHANNEL_GAP_LIMIT = 1e-6
RATIO_WINDOW = (6.0, 10.0)
RATIO_FLOOR = 1e-12  # below this the split error is rounding noise


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one time sweep; frequencies in rad/s, time in seconds."""

    eta: float = 1e-5
    omega_c: float = 1e12
    beta: float | None = None  # None means zero temperature
    e_j1: float = 1e10
    e_j2: float = 1e10
    alpha: complex = 1.0 + 0.0j
    t_start: float = 0.0
    t_end: float = 12.15e-12
    n_points: int = 200
    output_path: str | None = None

    def __post_init__(self):
        if not self.eta > 0.0:
            raise ConfigError("eta must be positive")
        if not self.omega_c > 0.0:
            raise ConfigError("omega_c must be positive")
        if self.beta is not None and not self.beta > 0.0:
            raise ConfigError("beta must be positive when given")
        for name in ("e_j1", "e_j2"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite")
        a = self.alpha
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise ConfigError("alpha must be finite")
        if self.t_start < 0.0:
            raise ConfigError("t_start must be nonnegative")
        if not self.t_end > self.t_start:
            raise ConfigError("t_end must exceed t_start")
        if self.n_points < 2:
            raise ConfigError("n_points must be at least 2")

    def temperature(self) -> Temperature:
        if self.beta is None:
            return Temperature.zero()
        return Temperature.finite(self.beta)


@dataclass(frozen=True)
class TimeSeriesRecord:
    """One row of the experiment output."""

    t_seconds: float
    t_ks: float
    g1: float
    g2: float
    delta1: float
    delta2: float
    concurrence: float
    s_reference: float
    d1: float
    d2: float


@dataclass(frozen=True)
class OracleCheckConfig:
    """Parameters of the brute-force validation run (one bath mode)."""

    e_j: float = 1e10
    omega: float = 1e11
    g: complex = 1e10 * cmath.exp(1j * math.pi / 7)
    n_max: int = 8
    beta: float | None = None
    t_base: float = 4e-13
    samples: int = 6
    seed: int = 7
    output_path: str | None = None

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ConfigError("oracle_omega must be positive")
        if self.n_max < 1:
            raise ConfigError("oracle_n_max must be at least 1")
        if self.beta is not None and not self.beta > 0.0:
            raise ConfigError("oracle_beta must be positive when given")
        if not self.t_base > 0.0:
            raise ConfigError("oracle_t must be positive")
        if self.samples < 1:
            raise ConfigError("oracle_samples must be at least 1")

    def temperature(self) -> Temperature:
        if self.beta is None:
            return Temperature.zero()
        return Temperature.finite(self.beta)


@dataclass(frozen=True)
class OracleRow:
    """One row of the oracle-check output."""

    t_seconds: float
    split_vs_exact: float
    channel_vs_split: float
    ratio_at_half_t: float


def _fmt(value: float) -> str:
    return f"{value:.16e}"


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


# -- configuration files ----------------------------------------------------

_EXPERIMENT_CASTS = {
    "eta": ("eta", float),
    "omega_c": ("omega_c", float),
    "beta": ("beta", float),
    "e_j1": ("e_j1", float),
    "e_j2": ("e_j2", float),
    "alpha": ("alpha", complex),
    "t_start": ("t_start", float),
    "t_end": ("t_end", float),
    "n_points": ("n_points", int),
    "output_path": ("output_path", str),
}

_ORACLE_CASTS = {
    "oracle_e_j": ("e_j", float),
    "oracle_omega": ("omega", float),
    "oracle_g": ("g", complex),
    "oracle_n_max": ("n_max", int),
    "oracle_beta": ("beta", float),
    "oracle_t": ("t_base", float),
    "oracle_samples": ("samples", int),
    "oracle_seed": ("seed", int),
    "oracle_output_path": ("output_path", str),
}

KNOWN_KEYS = frozenset(_EXPERIMENT_CASTS) | frozenset(_ORACLE_CASTS)


def parse_config_text(text: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    mapping: dict[str, str] = {}
    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        if key in mapping:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if key not in KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        mapping[key] = value
    return mapping


def load_config(path: str) -> dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    return parse_config_text(text)


def _build_from_casts(mapping, casts, factory):
    kwargs = {}
    for key, raw in mapping.items():
        if key not in casts:
            continue  # key belongs to another subcommand sharing the file
        attr, cast = casts[key]
        try:
            kwargs[attr] = cast(raw)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key!r}: {raw!r} ({exc})") from exc
    return factory(**kwargs)


def config_from_mapping(mapping: dict[str, str]) -> ExperimentConfig:
    return _build_from_casts(mapping, _EXPERIMENT_CASTS, ExperimentConfig)


def oracle_config_from_mapping(mapping: dict[str, str]) -> OracleCheckConfig:
    return _build_from_casts(mapping, _ORACLE_CASTS, OracleCheckConfig)


def serialize_config(cfg: ExperimentConfig) -> str:
    """Render a config so that parsing it back reproduces ``cfg`` exactly."""
    lines = [
        "# angular frequencies in rad/s, time in seconds",
        f"eta = {cfg.eta!r}",
        f"omega_c = {cfg.omega_c!r}",
    ]
    if cfg.beta is not None:
        lines.append(f"beta = {cfg.beta!r}")
    lines += [
        f"e_j1 = {cfg.e_j1!r}",
        f"e_j2 = {cfg.e_j2!r}",
        f"alpha = {cfg.alpha!r}",
        f"t_start = {cfg.t_start!r}",
        f"t_end = {cfg.t_end!r}",
        f"n_points = {cfg.n_points!r}",
    ]
    if cfg.output_path is not None:
        lines.append(f"output_path = {cfg.output_path}")
    return "\n".join(lines) + "\n"


# -- experiment -------------------------------------------------------------

def run_experiment(cfg: ExperimentConfig) -> list[TimeSeriesRecord]:
    """Sweep the time grid and collect one record per point.

    Both qubits see statistically identical baths, so one exponent
    evaluation per time serves both; the reference column is
    ``C(0) * delta1 * delta2``.
    """
    ohmic = OhmicBath(cfg.eta, cfg.omega_c)
    temp = cfg.temperature()
    quad = default_quadrature()
    params1, params2 = QubitParams(cfg.e_j1), QubitParams(cfg.e_j2)
    rho0 = initial_state(cfg.alpha)
    c0 = 2.0 * abs(cfg.alpha) / (1.0 + abs(cfg.alpha) ** 2)
    records = []
    for t in np.linspace(cfg.t_start, cfg.t_end, cfg.n_points):
        t = float(t)
        try:
            g = g_ohmic(ohmic, temp, t, quad)
            delta = suppression_factor(g)
            d_max = max_decoherence_analytic(g)
            c_t = concurrence(evolve_pair(rho0, params1, params2, g, g, t))
        except DephasingError as exc:
            raise type(exc)(f"at t = {t:.6e} s: {exc}") from exc
        records.append(
            TimeSeriesRecord(
                t_seconds=t,
                t_ks=t / KS_IN_SECONDS,
                g1=g,
                g2=g,
                delta1=delta,
                delta2=delta,
                concurrence=c_t,
                s_reference=c0 * delta * delta,
                d1=d_max,
                d2=d_max,
            )
        )
    return records


def emit_csv(rows: list[TimeSeriesRecord], path: str) -> None:
    """Write records as CSV: pinned header, 17-significant-digit floats, LF."""
    if not rows:
        raise ValueError("rows must be non-empty")
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    r.t_seconds,
                    r.t_ks,
                    r.g1,
                    r.g2,
                    r.delta1,
                    r.delta2,
                    r.concurrence,
                    r.s_reference,
                    r.d1,
                    r.d2,
                )
            )
        )
    _write_text(path, "\n".join(lines) + "\n")


# -- oracle check -----------------------------------------------------------

def run_oracle_check(cfg: OracleCheckConfig) -> tuple[list[OracleRow], list[str]]:
    """Drive the brute-force propagators over a halving time grid.

    Returns the rows plus a list of threshold violations. Thresholds are
    enforced only in the short-time regime ``t <= 0.1 / omega``: the
    channel-vs-split gap must stay below 1e-6 and the split-vs-exact
    deviation must shrink 6x to 10x under each halving.
    """
    system = OracleSystem(cfg.e_j, (FockMode(cfg.omega, cfg.g, cfg.n_max),))
    temp = cfg.temperature()
    times = [cfg.t_base / 2.0**k for k in range(3)]
    deviations = {}
    for t in times + [times[-1] / 2.0]:
        deviations[t] = split_deviation(system, temp, t, cfg.samples, cfg.seed)
    rows, violations = [], []
    short_time = 0.1 / cfg.omega
    for t in times:
        dev = deviations[t]
        half_dev = deviations[t / 2.0]
        ratio = dev / half_dev if half_dev > 0.0 else float("nan")
        gap = channel_discrepancy(system, temp, t, max(cfg.samples, 4), cfg.seed)
        rows.append(OracleRow(t, dev, gap, ratio))
        if t <= short_time:
            if gap > CHANNEL_GAP_LIMIT:
                violations.append(
                    f"channel_vs_split {gap:.3e} exceeds {CHANNEL_GAP_LIMIT:.0e} "
                    f"at t = {t:.3e} s"
                )
            lo, hi = RATIO_WINDOW
            if dev > RATIO_FLOOR and not lo <= ratio <= hi:
                violations.append(
                    f"halving ratio {ratio:.2f} outside [{lo:g}, {hi:g}] "
                    f"at t = {t:.3e} s"
                )
    return rows, violations


# -- subcommands ------------------------------------------------------------

def _experiment_config(args) -> ExperimentConfig:
    mapping = load_config(args.config) if args.config else {}
    cfg = config_from_mapping(mapping)
    updates = {}
    if args.alpha is not None:
        updates["alpha"] = args.alpha
    if args.eta is not None:
        updates["eta"] = args.eta
    if args.omega_c is not None:
        updates["omega_c"] = args.omega_c
    if args.beta is not None:
        updates["beta"] = args.beta
    if args.t_end_ps is not None:
        updates["t_end"] = args.t_end_ps * 1e-12
    if args.points is not None:
        updates["n_points"] = args.points
    if updates:
        cfg = replace(cfg, **updates)
    return cfg


def _time_grid(cfg: ExperimentConfig) -> list[float]:
    return [float(t) for t in np.linspace(cfg.t_start, cfg.t_end, cfg.n_points)]


def _cmd_gfactor(args) -> int:
    cfg = _experiment_config(args)
    ohmic = OhmicBath(cfg.eta, cfg.omega_c)
    temp = cfg.temperature()
    quad = default_quadrature()
    lines = ["t_seconds,t_ks,g,delta"]
    for t in _time_grid(cfg):
        g = g_ohmic(ohmic, temp, t, quad)
        lines.append(
            ",".join(_fmt(v) for v in (t, t / KS_IN_SECONDS, g, suppression_factor(g)))
        )
    path = args.out or cfg.output_path or "gfactor.csv"
    _write_text(path, "\n".join(lines) + "\n")
    print(f"wrote {path} ({cfg.n_points} rows)")
    return 0


_BASIS_LABELS = ("00", "01", "10", "11")


def _cmd_evolve(args) -> int:
    cfg = _experiment_config(args)
    ohmic = OhmicBath(cfg.eta, cfg.omega_c)
    temp = cfg.temperature()
    quad = default_quadrature()
    params1, params2 = QubitParams(cfg.e_j1), QubitParams(cfg.e_j2)
    rho0 = initial_state(cfg.alpha)
    entry_cols = []
    for i in _BASIS_LABELS:
        for j in _BASIS_LABELS:
            entry_cols += [f"re_{i}{j}", f"im_{i}{j}"]
    lines = ["t_seconds,t_ks," + ",".join(entry_cols)]
    for t in _time_grid(cfg):
        g = g_ohmic(ohmic, temp, t, quad)
        rho_t = evolve_pair(rho0, params1, params2, g, g, t)
        cells = [_fmt(t), _fmt(t / KS_IN_SECONDS)]
        for value in rho_t.reshape(-1):
            cells += [_fmt(value.real), _fmt(value.imag)]
        lines.append(",".join(cells))
    path = args.out or cfg.output_path or "evolve.csv"
    _write_text(path, "\n".join(lines) + "\n")
    print(f"wrote {path} ({cfg.n_points} rows)")
    return 0


def _cmd_fig1(args) -> int:
    cfg = _experiment_config(args)
    if args.alpha is not None:
        path = args.out or cfg.output_path or "fig1_custom.csv"
        emit_csv(run_experiment(cfg), path)
        print(f"wrote {path} ({cfg.n_points} rows)")
        return 0
    outdir = args.out or cfg.output_path or "."
    try:
        os.makedirs(outdir, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {outdir}: {exc}") from exc
    for idx in (1, 2, 3):
        path = os.path.join(outdir, f"fig1_alpha{idx}.csv")
        emit_csv(run_experiment(replace(cfg, alpha=complex(idx))), path)
        print(f"wrote {path} ({cfg.n_points} rows)")
    return 0


def _cmd_oracle_check(args) -> int:
    mapping = load_config(args.config) if args.config else {}
    cfg = oracle_config_from_mapping(mapping)
    updates = {}
    if args.beta is not None:
        updates["beta"] = args.beta
    if args.seed is not None:
        updates["seed"] = args.seed
    if updates:
        cfg = replace(cfg, **updates)
    rows, violations = run_oracle_check(cfg)
    path = args.out or cfg.output_path or "oracle_check.csv"
    lines = [ORACLE_CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    row.t_seconds,
                    row.split_vs_exact,
                    row.channel_vs_split,
                    row.ratio_at_half_t,
                )
            )
        )
    _write_text(path, "\n".join(lines) + "\n")
    kind = "zero" if cfg.beta is None else f"beta = {cfg.beta:g} s"
    print(
        f"system: e_j = {cfg.e_j:.3e} rad/s, mode omega = {cfg.omega:.3e} rad/s, "
        f"|g| = {abs(cfg.g):.3e} rad/s, n_max = {cfg.n_max}, temperature {kind}"
    )
    for row in rows:
        print(
            f"t = {row.t_seconds:.3e} s: split_vs_exact = {row.split_vs_exact:.3e}, "
            f"channel_vs_split = {row.channel_vs_split:.3e}, "
            f"ratio_at_half_t = {row.ratio_at_half_t:.2f}"
        )
    print(f"wrote {path} ({len(rows)} rows)")
    if violations:
        for item in violations:
            print(f"violation: {item}")
        raise ToleranceNotMet("; ".join(violations))
    print("all thresholds met for t <= 0.1/omega")
    return 0


def _parse_complex(raw: str) -> complex:
    try:
        return complex(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex number {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", metavar="PATH", help="key = value config file")
    shared.add_argument("--out", metavar="PATH", help="output file (directory for fig1)")
    shared.add_argument("--alpha", type=_parse_complex, help="initial-state weight")
    shared.add_argument("--eta", type=float, help="dimensionless bath strength")
    shared.add_argument("--omega-c", dest="omega_c", type=float, help="bath cutoff, rad/s")
    shared.add_argument(
        "--beta", type=float, help="inverse temperature, seconds; omit for zero"
    )
    shared.add_argument(
        "--t-end-ps", dest="t_end_ps", type=float, help="final time, picoseconds"
    )
    shared.add_argument("--points", type=int, help="number of grid points")
    shared.add_argument("--seed", type=int, help="oracle sampling seed")

    parser = argparse.ArgumentParser(
        prog="qubit-dephasing",
        description="Short-time dephasing and disentanglement of two qubits "
        "in independent bosonic baths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "gfactor", parents=[shared], help="tabulate the exponent G and factor delta"
    ).set_defaults(func=_cmd_gfactor)
    sub.add_parser(
        "evolve", parents=[shared], help="two-qubit state trajectory as CSV"
    ).set_defaults(func=_cmd_evolve)
    sub.add_parser(
        "fig1", parents=[shared], help="bundled concurrence experiment (three sweeps)"
    ).set_defaults(func=_cmd_fig1)
    sub.add_parser(
        "oracle-check", parents=[shared], help="brute-force channel validation"
    ).set_defaults(func=_cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except IoError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4
    except DephasingError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
