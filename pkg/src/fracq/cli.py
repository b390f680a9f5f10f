r"""Batch front end.

Five subcommands: ``ml`` evaluates the fractional time factor on a grid,
``box`` sweeps the box model (probability, asymptotic laws, energy),
``veff`` tabulates the effective potential, ``foxh`` evaluates a
serialized H-function at given points, ``verify`` runs the acceptance
suite.

Output is CSV: header always present, comma separated, 17 significant
digits, LF newlines, byte-identical for identical configuration.
Asymptotic-law columns outside their validity window are left as empty
cells rather than NaN text.

A flat key = value config file can supply any long flag (``--config
file``); flags given on the command line win. ``--plot`` additionally
renders the table to a PNG next to the CSV.

Exit codes: 0 success, 1 verify failure, 2 usage or config error,
3 numerical failure (the failing point is reported on stderr).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .acceptance import format_report, run_all
from .errors import FracqError, DomainError
from .foxh import h_classify, h_eval, h_parse
from .mittag_leffler import ml_eval
from .model import (
    BoxModel,
    energy_expectation,
    total_probability,
    total_probability_large_t,
    total_probability_small_t,
    v_eff,
)
from .special import i_pow

__all__ = ["main"]

_COMMANDS = ("ml", "box", "veff", "foxh", "verify")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_t_grid(spec: str) -> np.ndarray:
    parts = spec.split(":")
    if len(parts) not in (3, 4):
        raise ValueError(f"t-grid must be START:STOP:COUNT[:log], got {spec!r}")
    start, stop = float(parts[0]), float(parts[1])
    count = int(parts[2])
    log = False
    if len(parts) == 4:
        if parts[3] != "log":
            raise ValueError(f"t-grid scale must be 'log', got {parts[3]!r}")
        log = True
    if count < 2:
        raise ValueError("t-grid count must be at least 2")
    if not stop > start:
        raise ValueError("t-grid must be strictly increasing")
    if log:
        if start <= 0:
            raise ValueError("log t-grid requires start > 0")
        return np.geomspace(start, stop, count)
    if start < 0:
        raise ValueError("t-grid requires start >= 0")
    return np.linspace(start, stop, count)


def _parse_z(spec: str) -> complex:
    parts = spec.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"z must be RE or RE,IM, got {spec!r}")


def _read_config_flags(path: str) -> list[str]:
    """Turn a flat key = value file into a flag list (inserted before the
    command-line flags, so explicit flags override the file)."""
    flags: list[str] = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("_", "-")
        value = value.strip()
        if not key:
            raise ValueError(f"{path}:{lineno}: empty key")
        if value.lower() in ("true", "yes"):
            flags.append(f"--{key}")
        elif value.lower() in ("false", "no"):
            pass
        else:
            # single-token form so values starting with '-' survive argparse
            flags.append(f"--{key}={value}")
    return flags


def _expand_config(argv: list[str]) -> list[str]:
    """Splice config-file flags in right after the subcommand token."""
    path = None
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
    if path is None:
        return argv
    extra = _read_config_flags(path)
    for i, tok in enumerate(argv):
        if tok in _COMMANDS:
            return argv[: i + 1] + extra + argv[i + 1 :]
    return argv


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join flags whose values may start with '-' (e.g. --z -1,0) into
    --flag=value tokens, which argparse accepts unambiguously."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--z", "--lambda") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracq",
        description="evaluate fractional time factors, box-model sweeps, "
        "H-functions, and the acceptance suite",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value file of flag defaults")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--t-grid", required=True, help="START:STOP:COUNT[:log]")
    grid.add_argument("-o", "--out", required=True, help="output CSV path")
    grid.add_argument(
        "--plot", action="store_true", help="also render the table to a PNG next to the CSV"
    )

    p = sub.add_parser("ml", parents=[common, grid], help="time factor on a grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)

    p = sub.add_parser("box", parents=[common, grid], help="box-model sweep")
    p.add_argument("--a", type=float, required=True, help="box width")
    p.add_argument("--n", type=int, default=1, help="mode number")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--d-alpha", type=float, default=1.0, help="fractional diffusion coefficient")

    p = sub.add_parser("veff", parents=[common, grid], help="effective potential on a grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, help="eigenvalue (box width derived)")
    p.add_argument("--a", type=float, help="box width (alternative to --lambda)")
    p.add_argument("--n", type=int, default=1, help="mode number (with --a)")
    p.add_argument("--d-alpha", type=float, default=1.0)

    p = sub.add_parser("foxh", parents=[common], help="evaluate a serialized H-function")
    p.add_argument("--params", required=True, help='e.g. "H[1,1,1,2] upper=(0,1) lower=(0,1);(0,0.5)"')
    p.add_argument("--z", action="append", required=True, help="RE or RE,IM (repeatable)")
    p.add_argument("-o", "--out", help="output CSV path (default stdout)")

    p = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    p.add_argument("--tol", type=float, help="override every criterion tolerance")

    return parser


def _write_csv(out: str | None, header: list[str], rows: list[list[str]]) -> None:
    lines = [",".join(header)] + [",".join(row) for row in rows]
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _render_plot(out: str, header: list[str], rows: list[list[str]], log_grid: bool) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    t = np.array([float(r[0]) for r in rows])
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for j, name in enumerate(header[1:], start=1):
        mask = np.array([r[j] != "" for r in rows])
        if not mask.any():
            continue
        vals = np.array([float(r[j]) for r, keep in zip(rows, mask) if keep])
        ax.plot(t[mask], vals, label=name)
    if log_grid:
        ax.set_xscale("log")
    ax.set_xlabel(header[0])
    ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    png = Path(out).with_suffix(".png")
    fig.savefig(png, dpi=120)
    plt.close(fig)
    return png


def _time_factor(alpha: float, lam: float, t: float) -> complex:
    if t == 0.0:
        return 1.0 + 0.0j
    return ml_eval(alpha, 1.0, lam * i_pow(alpha) * t**alpha)


def _run_ml(args) -> int:
    ts = _parse_t_grid(args.t_grid)
    rows = []
    for t in ts:
        try:
            val = _time_factor(args.alpha, args.lam, float(t))
        except FracqError as exc:
            print(
                f"numerical failure at alpha={args.alpha:g}, lambda={args.lam:g}, "
                f"t={float(t):g}: {exc}",
                file=sys.stderr,
            )
            return 3
        rows.append([_fmt(float(t)), _fmt(val.real), _fmt(val.imag)])
    header = ["t", "reT", "imT"]
    _write_csv(args.out, header, rows)
    if args.plot:
        _render_plot(args.out, header, rows, ":log" in args.t_grid)
    return 0


def _run_box(args) -> int:
    ts = _parse_t_grid(args.t_grid)
    model = BoxModel(a=args.a, n=args.n, alpha=args.alpha, d_alpha=args.d_alpha)
    rows = []
    for t_ in ts:
        t = float(t_)
        try:
            val = _time_factor(model.alpha, model.lam, t)
            prob = total_probability(model, t)
            energy = energy_expectation(model, t)
            small = ""
            if abs(model.lam) * t**model.alpha < 1.0:
                small = _fmt(total_probability_small_t(model, t))
            large = ""
            if model.alpha < 1.0:
                # the power-law tail only exists for genuinely fractional order
                try:
                    large = _fmt(total_probability_large_t(model, t))
                except DomainError:
                    pass
        except FracqError as exc:
            print(
                f"numerical failure at alpha={model.alpha:g}, lambda={model.lam:g}, "
                f"t={t:g}: {exc}",
                file=sys.stderr,
            )
            return 3
        rows.append(
            [_fmt(t), _fmt(val.real), _fmt(val.imag), _fmt(prob), small, large, _fmt(energy)]
        )
    header = ["t", "reT", "imT", "prob", "prob_small_t", "prob_large_t", "energy"]
    _write_csv(args.out, header, rows)
    if args.plot:
        _render_plot(args.out, header, rows, ":log" in args.t_grid)
    return 0


def _run_veff(args) -> int:
    if (args.lam is None) == (args.a is None):
        print("veff needs exactly one of --lambda or --a", file=sys.stderr)
        return 2
    if args.lam is not None:
        if args.lam >= 0:
            print("--lambda must be negative (bound-state decay)", file=sys.stderr)
            return 2
        width = math.pi * math.sqrt(args.d_alpha / abs(args.lam))
        model = BoxModel(a=width, n=1, alpha=args.alpha, d_alpha=args.d_alpha)
    else:
        model = BoxModel(a=args.a, n=args.n, alpha=args.alpha, d_alpha=args.d_alpha)
    ts = _parse_t_grid(args.t_grid)
    if ts[0] <= 0:
        print("veff requires a t-grid with start > 0", file=sys.stderr)
        return 2
    rows = []
    for t_ in ts:
        t = float(t_)
        try:
            sample = v_eff(model, t)
        except FracqError as exc:
            print(
                f"numerical failure at alpha={model.alpha:g}, lambda={model.lam:g}, "
                f"t={t:g}: {exc}",
                file=sys.stderr,
            )
            return 3
        rows.append([_fmt(t), _fmt(sample.v_r), _fmt(sample.v_i)])
    header = ["t", "vR", "vI"]
    _write_csv(args.out, header, rows)
    if args.plot:
        _render_plot(args.out, header, rows, ":log" in args.t_grid)
    return 0


def _run_foxh(args) -> int:
    try:
        params = h_parse(args.params)
    except FracqError as exc:
        print(f"params parse error in {args.params!r}: {exc}", file=sys.stderr)
        return 2
    try:
        zs = [_parse_z(spec) for spec in args.z]
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    cls = h_classify(params)
    rows = []
    for z in zs:
        try:
            val = h_eval(params, z)
        except FracqError as exc:
            print(f"numerical failure at z={z:g}: {exc}", file=sys.stderr)
            return 3
        rows.append(
            [
                _fmt(z.real),
                _fmt(z.imag),
                _fmt(val.real),
                _fmt(val.imag),
                _fmt(cls.mu),
                cls.verdict.value,
            ]
        )
    _write_csv(args.out, ["z_re", "z_im", "h_re", "h_im", "mu", "verdict"], rows)
    return 0


def _run_verify(args) -> int:
    results = run_all(args.tol)
    print(format_report(results))
    return 0 if all(r.passed for r in results) else 1


def main(argv: list[str] | None = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    try:
        expanded = _merge_negative_values(_expand_config(raw))
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(expanded)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "ml":
            return _run_ml(args)
        if args.command == "box":
            return _run_box(args)
        if args.command == "veff":
            return _run_veff(args)
        if args.command == "foxh":
            return _run_foxh(args)
        return _run_verify(args)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except FracqError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
