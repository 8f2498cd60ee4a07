"""Command-line front end: sample -> transform (optionally through a LUT) -> interpolate -> emit.

Subcommands::

    voigtft build-lut  --h 0.02 --c 0.025 --N 25 --out table.vlut
    voigtft transform  --builtin rectApprox+sawtoothApprox --variant combined --out ft.csv
    voigtft report     --preset fig6 --out fig6.csv

Exit codes: 0 success, 2 invalid configuration, 3 I/O failure,
4 look-up table mismatch, 5 unparsable input.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import lut as lutmod
from . import reference, transform
from .errors import IoFailure, LutMismatch, NonFiniteSample, OverflowGuard, VoigtFTError
from .sampling import FitParams, decompose, from_table, read_table

EXIT_OK, EXIT_CONFIG, EXIT_IO, EXIT_LUT, EXIT_INPUT = 0, 2, 3, 4, 5

PRESETS = ("fig3", "fig4", "fig6", "fig7", "fig9", "fig10")
DEFAULT_FIT = (0.02, 0.025, 25)
DEFAULT_GRID = (-2 * math.pi, 2 * math.pi, 0.1)


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    fit: FitParams | None = None
    nu_min: float = DEFAULT_GRID[0]
    nu_max: float = DEFAULT_GRID[1]
    nu_step: float = DEFAULT_GRID[2]
    input_path: str | None = None
    builtin: str | None = None
    variant: str = "half"
    lut_path: str | None = None
    out: str | None = None
    output_format: str = "csv"
    preset: str | None = None
    densify: int = 1
    csv_path: str | None = None

    def grid(self):
        try:
            return transform.make_grid(self.nu_min, self.nu_max, self.nu_step)
        except ValueError as exc:
            raise ConfigError(f"invalid frequency grid: {exc}") from None


def _float(text: str) -> float:
    """Float parser that also accepts multiples of pi such as ``-2pi`` or ``2*pi``."""
    s = text.strip().lower()
    if s.endswith("pi"):
        coeff = s[:-2].rstrip("*")
        k = {"": 1.0, "+": 1.0, "-": -1.0}.get(coeff)
        return (float(coeff) if k is None else k) * math.pi
    return float(s)


def _fmt(v) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    if isinstance(v, str):
        return v
    return f"{float(v):.17g}"


def emit(columns, rows, cfg: RunConfig, summary=()):
    if cfg.output_format == "json":
        def clean(v):
            if isinstance(v, str):
                return v
            return None if v is None or math.isnan(v) else float(v)
        doc = {"columns": list(columns),
               "rows": [[clean(v) for v in r] for r in rows]}
        if summary:
            doc["summary"] = [dict(s) for s in summary]
        text = json.dumps(doc, indent=1) + "\n"
    else:
        lines = [",".join(columns)] + [",".join(_fmt(v) for v in r) for r in rows]
        text = "\n".join(lines) + "\n"
    if cfg.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(cfg.out).write_text(text)
        except OSError as exc:
            raise IoFailure(f"cannot write {cfg.out}: {exc}") from exc


def print_summary(summary, stream):
    for s in summary:
        parts = [f"{k}={_fmt(v) if not isinstance(v, str) else v}" for k, v in s.items()]
        print("summary " + " ".join(parts), file=stream)


def _require_fit(cfg):
    if cfg.fit is None:
        raise ConfigError("fit parameters missing")
    return cfg.fit


def cmd_build_lut(cfg: RunConfig) -> int:
    params = _require_fit(cfg)
    if not cfg.out or cfg.out == "-":
        raise ConfigError("build-lut needs --out PATH")
    table = lutmod.build(params, cfg.grid())
    lutmod.save(table, cfg.out)
    if cfg.csv_path:
        lutmod.export_csv(table, cfg.csv_path)
    N, J = table.shape
    print(f"built look-up table {N}x{J} (h={params.h!r}, c={params.c!r}, N={N}) "
          f"checksum={table.checksum:016x} -> {cfg.out}")
    return EXIT_OK


def _sampled_input(cfg, params):
    if cfg.builtin and cfg.input_path:
        raise ConfigError("give either --builtin or --input, not both")
    if cfg.builtin:
        try:
            f, _ = reference.parse_builtin(cfg.builtin)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        return decompose(f, params)
    if cfg.input_path:
        t, f = read_table(cfg.input_path)
        return from_table(t, f, params)
    raise ConfigError("transform needs --builtin NAME or --input PATH")


def _densify(nu, re, im, k):
    if k <= 1 or len(nu) < 2:
        return nu, re, im
    frac = np.arange(k) / k
    dense = (nu[:-1, None] + frac * np.diff(nu)[:, None]).ravel()
    dense = np.append(dense, nu[-1])
    return dense, np.interp(dense, nu, re), np.interp(dense, nu, im)


def cmd_transform(cfg: RunConfig) -> int:
    params = _require_fit(cfg)
    if cfg.variant not in transform.VARIANTS:
        raise ConfigError(f"unknown variant {cfg.variant!r}")
    if cfg.densify < 1:
        raise ConfigError("--densify must be >= 1")
    nu = cfg.grid()
    sf = _sampled_input(cfg, params)
    table = None
    if cfg.lut_path:
        if cfg.variant != "half":
            raise ConfigError("--lut only applies to --variant half")
        table = lutmod.load(cfg.lut_path)
    elif cfg.variant == "half":
        table = lutmod.build(params, nu)
    spec = transform.spectrum(sf, nu, cfg.variant, table)
    x, re, im = _densify(spec.nu_grid, spec.even_part, spec.odd_part, cfg.densify)
    emit(("nu", "re", "im"), list(zip(x, re, im)), cfg)
    return EXIT_OK


def _curve_rows(name, x, approx, ref, rel=None):
    diff = np.abs(approx - ref)
    rows = []
    for i in range(len(x)):
        r = [name, x[i], approx[i], ref[i], diff[i]]
        if rel is not None:
            r.append(None if math.isnan(rel[i]) else rel[i])
        rows.append(r)
    summ = {"curve": name, "max_abs_diff": float(diff.max())}
    if rel is not None:
        summ["max_abs_relerr"] = float(np.nanmax(np.abs(rel)))
    return rows, summ


def _spectrum_report(curves, nu, params_for, variant, lut_for=None):
    rows, summary = [], []
    for name, fid in curves:
        params = params_for(name)
        table = lut_for(params) if lut_for else None
        spec = reference.approximate_ft(fid, variant, params, nu, table)
        ref = reference.exact_ft(fid, nu)
        if reference.TestFunctionId(fid).parity == "even":
            approx, exact = spec.even_part, ref.real
        else:
            approx, exact = spec.odd_part, ref.imag
        r, s = _curve_rows(name, nu, approx, exact)
        rows += r
        summary.append(s)
    return rows, summary


def _u_grid():
    return np.arange(-1000, 1001) * 0.01


def preset_rows(name: str):
    """Rows, summary and column names for one figure preset."""
    cols = ["curve", "x", "approx", "reference", "absdiff"]
    if name == "fig3":
        params = FitParams(*DEFAULT_FIT)
        nu = transform.make_grid(*DEFAULT_GRID)
        f, _ = reference.parse_builtin("rectApprox+sawtoothApprox")
        z = transform.ft_combined(f, params, nu)
        r1, s1 = _curve_rows("rect", nu, z.real, reference.exact_ft("rect", nu).real)
        r2, s2 = _curve_rows("sawtooth", nu, z.imag, reference.exact_ft("sawtooth", nu).imag)
        return cols, r1 + r2, [s1, s2]
    if name == "fig4":
        params = FitParams(*DEFAULT_FIT)
        nu = transform.make_grid(*DEFAULT_GRID)
        table = lutmod.build(params, nu)
        rows, summ = _spectrum_report([("rect", "rect"), ("sawtooth", "sawtooth")], nu,
                                      lambda _: params, "half", lambda _: table)
        return cols, rows, summ
    if name == "fig6":
        params = FitParams(0.004, 0.0045, 30)
        nu = transform.make_grid(-60, 60, 0.25)
        table = lutmod.build(params, nu)
        rows, summ = _spectrum_report([("gEven", "gEven"), ("gOdd", "gOdd")], nu,
                                      lambda _: params, "half", lambda _: table)
        return cols, rows, summ
    if name == "fig7":
        nu = transform.make_grid(-60, 60, 0.25)
        fits = {"c=0.001": FitParams(0.004, 0.001, 30), "c=0.002": FitParams(0.004, 0.002, 30)}
        rows, summ = _spectrum_report([(k, "gEven") for k in fits], nu,
                                      fits.__getitem__, "combined")
        return cols, rows, summ
    if name == "fig9":
        params = FitParams(0.004, 0.004, 30)
        t = _u_grid()
        approx = transform.inverse_series(lambda v: reference.exact_ft("uFn", v), params, t)
        r, s = _curve_rows("u", t, approx, reference.evaluate("uFn", t))
        return cols, r, [s]
    if name == "fig10":
        params = FitParams(0.0008, 0.0008, 185)
        t = _u_grid()
        even_fn = lambda v: reference.exact_ft("uFn", v).real + 0j  # noqa: E731
        odd_fn = lambda v: 1j * reference.exact_ft("uFn", v).imag  # noqa: E731
        even = transform.inverse_series(even_fn, params, t)
        odd = transform.inverse_series(odd_fn, params, t)
        even_ref = reference.g_even_ft(t)
        odd_ref = -reference.g_odd_ft(t)
        r1, s1 = _curve_rows("even", t, even, even_ref,
                             transform.relative_error_curve(even, even_ref))
        r2, s2 = _curve_rows("odd", t, odd, odd_ref,
                             transform.relative_error_curve(odd, odd_ref))
        return cols + ["relerr"], r1 + r2, [s1, s2]
    raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")


def cmd_report(cfg: RunConfig) -> int:
    if cfg.preset:
        cols, rows, summary = preset_rows(cfg.preset)
    else:
        params = _require_fit(cfg)
        if not cfg.builtin:
            raise ConfigError("report needs --preset NAME or --builtin NAME")
        try:
            fid = reference.TestFunctionId(cfg.builtin)
        except ValueError:
            raise ConfigError(f"unknown built-in function {cfg.builtin!r}") from None
        if fid.parity is None or fid is reference.TestFunctionId.uFn:
            raise ConfigError(f"{fid.value} has no closed-form forward transform to report against")
        try:
            reference.exact_ft(fid, 0.0)
        except VoigtFTError as exc:
            raise ConfigError(str(exc)) from None
        nu = cfg.grid()
        table = lutmod.load(cfg.lut_path) if cfg.lut_path else None
        cols = ["curve", "x", "approx", "reference", "absdiff"]
        rows, summary = _spectrum_report([(fid.value, fid)], nu, lambda _: params,
                                         cfg.variant, (lambda _: table) if table else None)
    emit(cols, rows, cfg, summary)
    print_summary(summary, sys.stderr if cfg.out in (None, "-") else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="voigtft", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, io=True):
        p.add_argument("--h", type=_float, default=DEFAULT_FIT[0], help="grid step")
        p.add_argument("--c", type=_float, default=DEFAULT_FIT[1], help="kernel width")
        p.add_argument("--N", type=int, default=DEFAULT_FIT[2], help="samples per side")
        p.add_argument("--nu-min", type=_float, default=DEFAULT_GRID[0])
        p.add_argument("--nu-max", type=_float, default=DEFAULT_GRID[1])
        p.add_argument("--nu-step", type=_float, default=DEFAULT_GRID[2])
        p.add_argument("--out", default=None, help="output path ('-' or omitted: stdout)")
        if io:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
            src = p.add_mutually_exclusive_group()
            src.add_argument("--input", metavar="PATH", help="two-column table (t, f)")
            src.add_argument("--builtin", metavar="NAME", help="test function, '+' to sum")
            p.add_argument("--variant", choices=transform.VARIANTS, default="half")
            p.add_argument("--lut", metavar="PATH")

    b = sub.add_parser("build-lut", help="precompute and save a V_k/V_l look-up table")
    common(b, io=False)
    b.add_argument("--csv", metavar="PATH", help="also write a CSV dump for inspection")

    t = sub.add_parser("transform", help="transform a sampled function")
    common(t)
    t.add_argument("--densify", type=int, default=1,
                   help="linearly interpolate K-1 extra points between frequency nodes")

    r = sub.add_parser("report", help="error curves against closed-form references")
    common(r)
    r.add_argument("--preset", choices=PRESETS)
    return parser


def _config(ns) -> RunConfig:
    try:
        fit = FitParams(ns.h, ns.c, ns.N)
    except ValueError as exc:
        raise ConfigError(f"invalid fit parameters: {exc}") from None
    return RunConfig(
        command=ns.command, fit=fit,
        nu_min=ns.nu_min, nu_max=ns.nu_max, nu_step=ns.nu_step,
        input_path=getattr(ns, "input", None), builtin=getattr(ns, "builtin", None),
        variant=getattr(ns, "variant", "half"), lut_path=getattr(ns, "lut", None),
        out=ns.out, output_format=getattr(ns, "format", "csv"),
        preset=getattr(ns, "preset", None), densify=getattr(ns, "densify", 1),
        csv_path=getattr(ns, "csv", None),
    )


COMMANDS = {"build-lut": cmd_build_lut, "transform": cmd_transform, "report": cmd_report}


def run(cfg: RunConfig) -> int:
    """Execute one command and map failures onto the exit-code contract."""
    try:
        return COMMANDS[cfg.command](cfg)
    except (ConfigError, OverflowGuard) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except LutMismatch as exc:
        print(f"error: look-up table mismatch: {exc}", file=sys.stderr)
        return EXIT_LUT
    except (NonFiniteSample, ValueError) as exc:
        # ChecksumMismatch / FormatVersionMismatch land here too: the file is unreadable input
        print(f"error: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _config(ns)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
