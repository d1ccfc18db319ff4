"""Three-way comparison of engine, oracle and published values over a grid."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .._parse import parse_angle, parse_spin
from ..channel import build_channel
from ..core import ChannelParams, TargetState
from ..errors import InvalidSpec
from ..protocol import build_tree, f_av_closed
from . import printed
from .coherent import to_coherent
from .tree import oracle_concurrence, oracle_tree

__all__ = [
    "AGREE",
    "PAPER_DIFFERS",
    "DISAGREE",
    "Grid",
    "ComparisonReport",
    "DEFAULT_GRID",
    "adjudicate",
    "adjudicate_point",
    "write_ledger",
    "format_report",
    "load_grid",
]

AGREE = "AGREE"
PAPER_DIFFERS = "ENGINE_ORACLE_AGREE_PAPER_DIFFERS"
DISAGREE = "DISAGREE"

LEDGER_FIELDS = ("p", "j", "m", "omega", "depth", "quantity", "engine", "oracle", "paper", "deviation", "verdict")


@dataclass(frozen=True)
class Grid:
    p: tuple[float, ...]
    j: tuple[float, ...]
    m: tuple[int, ...] = (0, 1)
    omega: tuple[float, ...] = (0.0, math.pi / 2, math.pi)
    depth: int = 3
    tol_oracle: float = 1e-10
    tol_paper: float = 1e-6

    def points(self) -> Iterable[tuple[float, float, int, float]]:
        return product(self.p, self.j, self.m, self.omega)

    def __len__(self) -> int:
        return len(self.p) * len(self.j) * len(self.m) * len(self.omega)


DEFAULT_GRID = Grid(
    p=(0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95),
    j=(1.0, 2.0, 3.0, 4.0),
    m=(0, 1),
    omega=tuple(k * math.pi / 6 for k in (0, 1, 2, 3, 4, 5, 6, 8)),
    depth=3,
)


@dataclass(frozen=True)
class ComparisonReport:
    p: float
    j: float
    m: int
    omega: float
    depth: int
    quantity: str
    engine: float
    oracle: float
    paper: Optional[float]
    deviation: float
    verdict: str


def _report(point, depth, quantity, engine, oracle, paper, grid: Grid) -> ComparisonReport:
    p, j, m, omega = point
    dev_eo = abs(engine - oracle)
    dev = dev_eo
    if paper is not None:
        dev_p = abs(engine - paper) if math.isfinite(paper) else math.inf
        dev = max(dev, dev_p)
    if not dev_eo <= grid.tol_oracle:
        verdict = DISAGREE
    elif paper is not None and not abs(engine - paper) <= grid.tol_paper:
        verdict = PAPER_DIFFERS
    else:
        verdict = AGREE
    return ComparisonReport(p, j, m, omega, depth, quantity, engine, oracle, paper, dev, verdict)


def coherent_coefficients_for(omega: float, p: float, j: float) -> tuple[float, float]:
    """Unit-length (a, b) whose normalized coherent superposition has angle omega."""
    half = omega / 2.0
    c = to_coherent(np.array([math.cos(half), math.sin(half)]), p, j / 2.0).coeffs.real
    r = math.hypot(c[0], c[1])
    return float(c[0] / r), float(c[1] / r)


def _near(x: float, y: float) -> bool:
    return abs(x - y) < 1e-12


def adjudicate_point(point: tuple[float, float, int, float], grid: Grid) -> list[ComparisonReport]:
    p, j, m, omega = point
    params = ChannelParams(p, j, m)
    target = TargetState.from_angle(omega)
    tree = build_tree(params, target, grid.depth)
    orc = oracle_tree(params, target, grid.depth)
    C = build_channel(params).concurrence
    a, b = coherent_coefficients_for(omega, p, j)
    sym = printed.symbols(p, j, m, a, b)
    out = []

    def add(depth, name, engine, oracle, paper=None):
        out.append(_report(point, depth, name, float(engine), float(oracle), paper, grid))

    add(0, "concurrence", C, oracle_concurrence(params), printed.concurrence(p, j, m))

    probs, fids = printed.primary_probabilities(sym), printed.primary_fidelities(sym)
    for i in range(4):
        node, br = tree.node(str(i)), orc.branch(str(i))
        add(0, f"P_{i}", node.probability, br.probability, probs[i])
        add(0, f"F_{i}", node.fidelity_raw, br.fidelity, fids[i])

    if grid.depth >= 1:
        rp, rf = printed.repeat_probabilities(sym), printed.repeat_fidelities(sym)
        parents = ("1", "2") if m == 0 else ("0", "3")
        for parent in parents:
            for k in range(4):
                label = parent + str(k)
                try:
                    node, br = tree.node(label), orc.branch(label)
                except KeyError:
                    continue
                add(1, f"P_{label}", node.conditional_probability, br.conditional_probability, rp[label])
                add(1, f"F_{label}", node.fidelity_raw, br.fidelity, rf[label])

    for d in range(grid.depth + 1):
        es, os_ = tree.stats(d), orc.stats[d]
        add(d, "p_success", es.p_success, os_.p_success, printed.p_success(p, j, m, omega, d))
        if m == 0 and d >= 1:
            add(d, "p_success[general_n]", es.p_success, os_.p_success,
                printed.p_success_general(C, omega, m, d))
        add(d, "f_av_all", es.f_av_all, os_.f_av_all,
            printed.f_av_primary(p, j, m, omega) if d == 0 else None)
        paper = None
        if d == 1:
            paper = printed.f_av_first_repeat(C, omega, m)
        elif d == 2:
            paper = printed.f_av_second_repeat(C, omega, m)
        add(d, "f_av_accrued", es.f_av_accrued, os_.f_av_accrued, paper)
        if d in (1, 2):
            add(d, "f_av_accrued[closed_form]", es.f_av_accrued, os_.f_av_accrued,
                f_av_closed(params, omega, d))

        zero, pi = _near(omega, 0.0), _near(omega, math.pi)
        if m == 0 and (zero or pi):
            if d == 0:
                add(d, "f_av_all[concurrence_piecewise]", es.f_av_all, os_.f_av_all,
                    printed.f_av_primary_piecewise(C, zero))
            if d == 1:
                add(d, "f_av_accrued[piecewise]", es.f_av_accrued, os_.f_av_accrued,
                    printed.f_av_first_repeat_piecewise(C, zero))
            if d == 2:
                add(d, "f_av_accrued[piecewise]", es.f_av_accrued, os_.f_av_accrued,
                    printed.f_av_second_repeat_piecewise(C, zero))
        if d == 1 and zero:
            add(d, "f_av_accrued[max_rule]", es.f_av_accrued, os_.f_av_accrued,
                printed.f_av_first_repeat_max(p, j, m))
        if m == 0 and d == 0:
            add(d, "f_av_all[concurrence_form]", es.f_av_all, os_.f_av_all,
                printed.f_av_primary_concurrence(C, omega))
        if m == 0 and _near(omega, math.pi / 2):
            if d == 1:
                add(d, "f_av_accrued[prose_superposed]", es.f_av_accrued, os_.f_av_accrued,
                    printed.PROSE_VALUES["f_av_first_repeat_superposed_even"])
                add(d, "f_av_accrued[prose_minimum]", es.f_av_accrued, os_.f_av_accrued,
                    printed.PROSE_VALUES["f_av_first_repeat_min_even"])
            if d == 2:
                add(d, "f_av_accrued[prose_superposed]", es.f_av_accrued, os_.f_av_accrued,
                    printed.PROSE_VALUES["f_av_second_repeat_superposed_even"])
    return out


def adjudicate(grid: Grid = DEFAULT_GRID) -> list[ComparisonReport]:
    reports = []
    for point in grid.points():
        reports.extend(adjudicate_point(point, grid))
    return reports


def _fmt(x: Optional[float]) -> str:
    if x is None:
        return "NA"
    return format(x, ".17g")


def format_report(r: ComparisonReport) -> str:
    fields = [r.p, r.j, r.m, r.omega, r.depth, r.quantity, r.engine, r.oracle, r.paper, r.deviation, r.verdict]
    out = []
    for name, value in zip(LEDGER_FIELDS, fields):
        if name in ("m", "depth", "quantity", "verdict"):
            out.append(str(value))
        else:
            out.append(_fmt(value))
    return "\t".join(out)


def write_ledger(reports: Sequence[ComparisonReport], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("#" + "\t".join(LEDGER_FIELDS) + "\n")
        for r in reports:
            fh.write(format_report(r) + "\n")
    return path


def load_grid(path) -> Grid:
    """Read a JSON grid file; every key is optional and defaults to DEFAULT_GRID."""
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidSpec(f"cannot read grid file {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise InvalidSpec("grid file must hold a JSON object")
    unknown = set(raw) - {"p", "j", "m", "omega", "depth", "tol_oracle", "tol_paper"}
    if unknown:
        raise InvalidSpec(f"unknown grid keys: {sorted(unknown)}")
    d = DEFAULT_GRID
    try:
        grid = Grid(
            p=tuple(float(x) for x in raw.get("p", d.p)),
            j=tuple(parse_spin(x) for x in raw.get("j", d.j)),
            m=tuple(int(x) for x in raw.get("m", d.m)),
            omega=tuple(parse_angle(x) for x in raw.get("omega", d.omega)),
            depth=int(raw.get("depth", d.depth)),
            tol_oracle=float(raw.get("tol_oracle", d.tol_oracle)),
            tol_paper=float(raw.get("tol_paper", d.tol_paper)),
        )
    except (TypeError, ValueError) as exc:
        raise InvalidSpec(f"malformed grid file {path}: {exc}") from exc
    if not grid.p or not grid.j or not grid.m or not grid.omega:
        raise InvalidSpec("grid axes must be non-empty")
    if any(not 0.0 <= x < 1.0 for x in grid.p):
        raise InvalidSpec("oracle grid needs 0 <= p < 1")
    if any(x not in (0, 1) for x in grid.m):
        raise InvalidSpec("m values must be 0 or 1")
    if any(not float(x).is_integer() or x <= 0 for x in grid.j):
        raise InvalidSpec("grid j values must be positive integers")
    if not 0 <= grid.depth <= 12:
        raise InvalidSpec("depth must lie in 0..12")
    return grid
