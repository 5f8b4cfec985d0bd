"""Command-line surface: spectrum tables, complexity series, sweeps, periods.

Output schemas are fixed so downstream tooling can rely on them:
  complexity CSV: header ``t,C,Cdot``, LF line endings, shortest-roundtrip floats
  sweep CSV:      ``beta,omega0,omegaC,omegaR1,omegaR2,cMax,rateMax,internalEnergy,lloydRhs,lloydSatisfied,error``
Data goes only to --out; stdout carries a human-readable summary.  Run
metadata lives in a ``<out>.meta.json`` sidecar so data files stay
byte-identical across identical invocations.

Exit codes: 0 success, 1 argument/validation error, 2 numeric/runtime error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import estimate_beat_period, estimate_period, lloyd_report, sample_series, sweep
from .complexity import EvaluationContext, complexity_rate_at, default_rate_window
from .covariance import ReferenceFrequencies
from .errors import InsufficientDataError, MagtfdError, ParameterError
from .model import (
    ModeFrequencies,
    OscillatorParams,
    cyclotron_frequency,
    energy_nk,
    normal_mode_frequencies,
)

CONFIG_ENV_VAR = "TFD_CONFIG"

_DEFAULTS = {
    "omega0": 0.1,
    "omegac": 0.0,
    "mass": 1.0,
    "hbar": 1.0,
    "beta": 1.0,
    "omega_ref1": 1.0,
    "omega_ref2": 1.0,
    "t0": 0.0,
    "t1": None,
    "samples": None,
    "format": "csv",
    "n_max": 2,
    "k_max": 2,
}


class _CliParser(argparse.ArgumentParser):
    """argparse that reports bad arguments through the exit-1 path."""

    def error(self, message):
        raise ParameterError(message)


def _fmt(x: float) -> str:
    """Shortest representation that round-trips the exact double."""
    return repr(float(x))


def read_config_file(path: str) -> dict[str, str]:
    """Flat key=value lines; '#' starts a comment; no nesting."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _resolve(args: argparse.Namespace) -> dict:
    """Merge flag > config-file > default for every known key."""
    config: dict[str, str] = {}
    path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if path:
        config = read_config_file(path)
    merged = {}
    for key, default in _DEFAULTS.items():
        flag_val = getattr(args, key, None)
        if flag_val is not None:
            merged[key] = flag_val
        elif key in config:
            if key == "format":
                merged[key] = config[key]
            elif key in ("samples", "n_max", "k_max"):
                merged[key] = int(config[key])
            else:
                merged[key] = float(config[key])
        else:
            merged[key] = default
    if merged["format"] not in ("csv", "json"):
        raise ParameterError(f"unknown output format {merged['format']!r}")
    # charge/bfield override omegac when given together
    charge = getattr(args, "charge", None)
    bfield = getattr(args, "bfield", None)
    if (charge is None) != (bfield is None):
        raise ParameterError("--charge and --bfield must be given together")
    if charge is not None:
        merged["omegac"] = cyclotron_frequency(charge, bfield, merged["mass"])
    return merged


def _context(cfg: dict) -> EvaluationContext:
    return EvaluationContext.build(
        cfg["omega0"], cfg["omegac"], cfg["beta"], cfg["omega_ref1"], cfg["omega_ref2"], cfg["hbar"]
    )


def _freqs(cfg: dict) -> ModeFrequencies:
    return normal_mode_frequencies(
        OscillatorParams(cfg["omega0"], cfg["omegac"], cfg["mass"], cfg["hbar"])
    )


def _write_sidecar(out: str, cfg: dict, command: str) -> None:
    meta = {"command": command, "version": __version__}
    meta.update({k: cfg[k] for k in sorted(cfg) if cfg[k] is not None})
    Path(str(out) + ".meta.json").write_text(json.dumps(meta, indent=2) + "\n")


def cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    freqs = _freqs(cfg)
    n_max, k_max = int(cfg["n_max"]), int(cfg["k_max"])
    if n_max < 0 or k_max < 0:
        raise ParameterError("n_max and k_max must be nonnegative")
    rows = [
        (n, k, energy_nk(n, k, freqs, cfg["hbar"]))
        for n in range(n_max + 1)
        for k in range(k_max + 1)
    ]
    if args.out:
        if cfg["format"] == "json":
            payload = [{"n": n, "k": k, "E": e} for n, k, e in rows]
            Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
        else:
            lines = ["n,k,E"] + [f"{n},{k},{_fmt(e)}" for n, k, e in rows]
            Path(args.out).write_text("\n".join(lines) + "\n")
        _write_sidecar(args.out, cfg, "spectrum")
    print(f"spectrum: {len(rows)} levels, omega1={freqs.omega1:.6g} omega2={freqs.omega2:.6g}")
    print(f"ground state E={rows[0][2]:.6g}")
    return 0


def _default_series_window(ctx: EvaluationContext, cfg: dict) -> tuple[float, float, int]:
    t0 = cfg["t0"]
    t1 = cfg["t1"]
    if t1 is None:
        base = default_rate_window(ctx.freqs) or math.pi / ctx.freqs.omega2
        t1 = t0 + 4.0 * base
    samples = cfg["samples"]
    if samples is None:
        carrier = math.pi / ctx.freqs.omega1
        samples = max(2, int(math.ceil((t1 - t0) / carrier)) * 512)
    return float(t0), float(t1), int(samples)


def cmd_complexity(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    if not args.out:
        raise ParameterError("--out is required for complexity data")
    ctx = _context(cfg)
    t0, t1, samples = _default_series_window(ctx, cfg)
    series = sample_series(ctx, t0, t1, samples)
    rate = np.asarray(complexity_rate_at(ctx, series.t))
    if cfg["format"] == "json":
        payload = {"t": list(series.t), "C": list(series.values), "Cdot": list(rate)}
        Path(args.out).write_text(json.dumps(payload) + "\n")
    else:
        lines = ["t,C,Cdot"]
        lines += [
            f"{_fmt(t)},{_fmt(c)},{_fmt(r)}" for t, c, r in zip(series.t, series.values, rate)
        ]
        Path(args.out).write_text("\n".join(lines) + "\n")
    _write_sidecar(args.out, cfg, "complexity")
    print(
        f"complexity: {samples} samples on [{t0:.6g}, {t1:.6g}], "
        f"C in [{series.values.min():.6g}, {series.values.max():.6g}]"
    )
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    if not args.out:
        raise ParameterError("--out is required for sweep data")
    if args.beta_count < 1:
        raise ParameterError("sweep grid is empty: --beta-count must be >= 1")
    if not (args.beta_min > 0 and args.beta_max >= args.beta_min):
        raise ParameterError("need 0 < --beta-min <= --beta-max")
    betas = np.logspace(math.log10(args.beta_min), math.log10(args.beta_max), args.beta_count)
    grid = [(float(b), cfg["omega0"], cfg["omegac"]) for b in betas]
    refs = ReferenceFrequencies(cfg["omega_ref1"], cfg["omega_ref2"])
    samples = cfg["samples"] if cfg["samples"] is not None else 2048
    rows = sweep(grid, refs, cfg["hbar"], int(samples))
    if all(r.error is not None for r in rows):
        raise MagtfdError("every sweep point failed: " + rows[0].error)

    header = "beta,omega0,omegaC,omegaR1,omegaR2,cMax,rateMax,internalEnergy,lloydRhs,lloydSatisfied,error"
    lines = [header]
    for r in rows:
        lines.append(
            ",".join(
                [
                    _fmt(r.beta),
                    _fmt(r.omega0),
                    _fmt(r.omega_c),
                    _fmt(r.omega_r1),
                    _fmt(r.omega_r2),
                    _fmt(r.c_max),
                    _fmt(r.rate_max),
                    _fmt(r.internal_energy),
                    _fmt(r.lloyd_rhs),
                    "true" if r.lloyd_satisfied else "false",
                    r.error or "",
                ]
            )
        )
    Path(args.out).write_text("\n".join(lines) + "\n")
    _write_sidecar(args.out, cfg, "sweep")
    report = lloyd_report(rows)
    print(
        f"sweep: {len(rows)} rows, {report.satisfied} satisfied / {report.violated} violated, "
        f"tightest margin {report.tightest_margin:.6g}"
    )
    print(
        f"asymptotes: E00={report.ground_state_energy:.6g}, "
        f"high-T rate plateau={report.high_temp_rate_plateau:.6g}"
    )
    return 0


def cmd_period(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    if not args.out:
        raise ParameterError("--out is required for period data")
    ctx = _context(cfg)
    if cfg["t1"] is None:
        # window wide enough for several dominant periods, or several beats
        t_carrier = math.pi / ctx.freqs.omega2
        gap = ctx.freqs.omega1 - ctx.freqs.omega2
        t_beat = math.pi / gap if gap > 0 else math.inf
        cfg = dict(cfg)
        use_beat = math.isfinite(t_beat) and t_beat > 3.0 * t_carrier
        cfg["t1"] = cfg["t0"] + (3.0 * t_beat if use_beat else 8.0 * t_carrier)
    t0, t1, samples = _default_series_window(ctx, cfg)
    series = sample_series(ctx, t0, t1, samples)
    carrier = estimate_period(series)
    result = {
        "carrier_period": carrier.period,
        "carrier_confidence": carrier.confidence,
    }
    try:
        beat = estimate_beat_period(series)
        if beat.confidence >= 0.5:
            result["beat_period"] = beat.period
            result["beat_confidence"] = beat.confidence
    except InsufficientDataError:
        pass
    Path(args.out).write_text(json.dumps(result, indent=2) + "\n")
    _write_sidecar(args.out, cfg, "period")
    summary = f"period: carrier {carrier.period:.6g} (confidence {carrier.confidence:.2f})"
    if "beat_period" in result:
        summary += f", beat {result['beat_period']:.6g}"
    print(summary)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--omega0", type=float, help="trap frequency")
    p.add_argument("--omegac", type=float, help="cyclotron frequency")
    p.add_argument("--charge", type=float, help="particle charge (with --bfield)")
    p.add_argument("--bfield", type=float, help="magnetic field (with --charge)")
    p.add_argument("--mass", type=float, help="particle mass")
    p.add_argument("--beta", type=float, help="inverse temperature")
    p.add_argument("--omega-ref1", dest="omega_ref1", type=float, help="reference frequency, mode 1")
    p.add_argument("--omega-ref2", dest="omega_ref2", type=float, help="reference frequency, mode 2")
    p.add_argument("--hbar", type=float)
    p.add_argument("--t0", type=float, help="window start")
    p.add_argument("--t1", type=float, help="window end")
    p.add_argument("--samples", type=int, help="number of grid points")
    p.add_argument("--out", help="output data file")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--config", help=f"key=value config file (or ${CONFIG_ENV_VAR})")


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="magtfd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="energy levels E_{n,k}")
    _add_common(p)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--k-max", dest="k_max", type=int)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("complexity", help="complexity and rate time series")
    _add_common(p)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("sweep", help="Lloyd-bound sweep over log-spaced beta")
    _add_common(p)
    p.add_argument("--beta-min", type=float, default=0.01)
    p.add_argument("--beta-max", type=float, default=1000.0)
    p.add_argument("--beta-count", type=int, default=60)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("period", help="carrier and beat period estimates")
    _add_common(p)
    p.set_defaults(func=cmd_period)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MagtfdError, OverflowError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
