"""Command-line front end: ``spincat figure | inspect | verify``.

Exit status: 0 on success, 1 when the engine and the oracle disagree,
2 on usage errors or invalid parameters. A JSON file passed with
``--config`` supplies defaults per subcommand; flags override it.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Optional, Sequence

import numpy as np

from ._parse import parse_angle, parse_list, parse_spin
from .channel import build_channel
from .core import ChannelParams, TargetState, limiting_form
from .engine import primary_attempt
from .errors import SpinCatError
from .figures import FIGURES, default_spec, emit_figure, render
from .oracle import DEFAULT_GRID, DISAGREE, PAPER_DIFFERS, adjudicate, load_grid, write_ledger
from .protocol import build_tree

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2
DEFAULT_LEDGER = "verification_ledger.tsv"


class _Usage(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spincat", description="Teleportation over spin coherent cat channels.")
    ap.add_argument("--config", help="JSON file with per-subcommand defaults")
    sub = ap.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="emit figure data as CSV or JSON")
    fig.add_argument("id", choices=FIGURES)
    fig.add_argument("--out", help="output path (default: standard output)")
    fig.add_argument("--format", choices=("csv", "json"))
    fig.add_argument("--j", help="comma-separated spins, e.g. 1,2,31/2")
    fig.add_argument("--steps", type=int)
    fig.add_argument("--x", choices=("p", "C", "omega"), help="swept variable (custom)")
    fig.add_argument("--start", type=float)
    fig.add_argument("--stop", type=float)
    fig.add_argument("--m", help="comma-separated parities")
    fig.add_argument("--omega", help="comma-separated angles, e.g. 0,pi/2,pi")
    fig.add_argument("--depths", help="comma-separated depths")
    fig.add_argument("--p", help="comma-separated fixed overlaps (omega sweeps)")
    fig.add_argument("--quantity", help="custom quantity")

    ins = sub.add_parser("inspect", help="single-point report")
    ins.add_argument("--p", type=float)
    ins.add_argument("--j")
    ins.add_argument("--m", type=int)
    ins.add_argument("--omega")
    ins.add_argument("--depth", type=int)

    ver = sub.add_parser("verify", help="engine vs oracle vs published forms")
    ver.add_argument("--grid", help="JSON grid file (default: built-in grid)")
    ver.add_argument("--ledger", help=f"ledger path (default: {DEFAULT_LEDGER})")
    return ap


def _load_config(path: Optional[str], command: str) -> dict:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Usage(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict) or not isinstance(raw.get(command, {}), dict):
        raise _Usage(f"config {path} must map subcommand names to objects")
    return dict(raw.get(command, {}))


def _merged(args: argparse.Namespace, config: dict, keys: Sequence[str]) -> dict:
    out = {}
    for k in keys:
        v = getattr(args, k, None)
        out[k] = v if v is not None else config.get(k)
    return out


def _as_list(v, item):
    if v is None:
        return None
    if isinstance(v, (list, tuple)):
        return [item(x) for x in v]
    if isinstance(v, (int, float)):
        return [item(v)]
    return parse_list(v, item)


def _cmd_figure(args, config) -> int:
    kw = _merged(args, config, ("out", "format", "j", "steps", "x", "start", "stop", "m",
                                "omega", "depths", "p", "quantity"))
    kw["j"] = _as_list(kw["j"], parse_spin)
    kw["m"] = _as_list(kw["m"], int)
    kw["omega"] = _as_list(kw["omega"], parse_angle)
    kw["depths"] = _as_list(kw["depths"], int)
    kw["p"] = _as_list(kw["p"], float)
    spec = default_spec(args.id, **kw)
    if spec.out is None:
        sys.stdout.write(render(spec))
    else:
        path = emit_figure(spec)
        print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _vec(v: Optional[np.ndarray]) -> str:
    if v is None:
        return "-"
    parts = []
    for z in v:
        z = complex(z)
        parts.append(_fmt(z.real) if abs(z.imag) < 1e-15 else f"{z.real:.6g}{z.imag:+.6g}j")
    return "(" + ", ".join(parts) + ")"


def _cmd_inspect(args, config) -> int:
    kw = _merged(args, config, ("p", "j", "m", "omega", "depth"))
    if kw["p"] is None or kw["j"] is None:
        raise _Usage("inspect needs --p and --j")
    params = ChannelParams(float(kw["p"]), parse_spin(kw["j"]), int(kw["m"] or 0))
    omega = parse_angle(kw["omega"] if kw["omega"] is not None else 0.0)
    depth = int(kw["depth"] or 0)
    target = TargetState.from_angle(omega)

    ch = build_channel(params)
    print(f"channel  p={_fmt(params.p)}  j={_fmt(params.j)}  m={params.m}  omega={_fmt(omega)}")
    print(f"  overlap p^(2j)  {_fmt(params.overlap)}")
    print(f"  concurrence     {_fmt(ch.concurrence)}")
    print(f"  limiting form   {limiting_form(params).value}")
    print(f"  amplitudes      {_vec(ch.state)}  on |00>,|01>,|10>,|11>")

    rep = primary_attempt(params, target)
    print("\nprimary attempt (GHZ measurement on C,A)")
    print(f"  {'outcome':<8}{'probability':>16}{'fidelity':>16}  {'success':<8}{'correction':<11}{'corrected':>16}  state of B")
    for o in rep.outcomes:
        corr = o.correction or "-"
        fc = _fmt(o.fidelity_corrected) if o.fidelity_corrected is not None else "-"
        print(f"  GHZ_{o.index:<4}{_fmt(o.probability):>16} {_fmt(o.fidelity_raw):>15}  "
              f"{'yes' if o.success else 'no':<8}{corr:<11}{fc:>16}  {_vec(o.conditional)}")
    print(f"  F_av = {_fmt(rep.f_av)}   P_success = {_fmt(rep.p_success)}")

    tree = build_tree(params, target, depth)
    print("\ncumulative statistics")
    print(f"  {'depth':<7}{'pair':<6}{'p_success':>16}{'f_av_all':>16}{'f_av_accrued':>16}{'p_live':>16}")
    for d in range(depth + 1):
        s = tree.stats(d)
        pair = "CA" if d % 2 == 0 else "CB"
        print(f"  {d:<7}{pair:<6}{_fmt(s.p_success):>16} {_fmt(s.f_av_all):>15}"
              f" {_fmt(s.f_av_accrued):>15} {_fmt(s.p_failure_live):>15}")
    return EXIT_OK


def _cmd_verify(args, config) -> int:
    kw = _merged(args, config, ("grid", "ledger"))
    grid = load_grid(kw["grid"]) if kw["grid"] else DEFAULT_GRID
    reports = adjudicate(grid)
    path = write_ledger(reports, kw["ledger"] or DEFAULT_LEDGER)
    counts = Counter(r.verdict for r in reports)
    worst = max((abs(r.engine - r.oracle) for r in reports), default=0.0)
    print(f"grid points      {len(grid)}")
    print(f"comparisons      {len(reports)}")
    for verdict in ("AGREE", PAPER_DIFFERS, DISAGREE):
        print(f"{verdict:<36}{counts.get(verdict, 0)}")
    print(f"max |engine - oracle|  {worst:.3g}")
    print(f"ledger           {path}")
    if counts.get(DISAGREE, 0):
        bad = sorted({r.quantity for r in reports if r.verdict == DISAGREE})
        print(f"engine and oracle disagree on: {', '.join(bad)}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


_COMMANDS = {"figure": _cmd_figure, "inspect": _cmd_inspect, "verify": _cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        config = _load_config(args.config, args.command)
        return _COMMANDS[args.command](args, config)
    except (_Usage, SpinCatError) as exc:
        print(f"error: {type(exc).__name__}: {exc}" if isinstance(exc, SpinCatError) else f"error: {exc}",
              file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
