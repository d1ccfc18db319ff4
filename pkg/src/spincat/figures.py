"""Figure data as parameter sweeps, emitted as bit-stable CSV or JSON.

Every y-value is recomputed from the channel and protocol closed forms on
each call. Rows are ordered by series first, then by ascending x.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from .channel import concurrence_analytic
from .core import ChannelParams
from .errors import InfiniteRepetitions, InvalidSpec, SpinCatError
from .protocol import (
    f_av_closed,
    f_av_from_concurrence,
    p_success_closed,
    p_success_from_concurrence,
    repetitions_required,
)

__all__ = [
    "FIGURES",
    "SweepSpec",
    "default_spec",
    "figure_rows",
    "render",
    "emit_figure",
    "maximizing_omega",
]

FIGURES = ("fig1", "fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b", "fig5c", "custom")
FORMATS = ("csv", "json")
X_DOMAINS = {"p": (0.0, 1.0), "C": (0.0, 1.0), "omega": (0.0, 2.0 * math.pi)}
CUSTOM_QUANTITIES = ("concurrence", "f_av", "f_av_max", "p_success", "repetitions")


@dataclass(frozen=True)
class SweepSpec:
    figure: str
    x: str = "p"
    start: float = 0.0
    stop: float = 1.0
    steps: int = 101
    j: tuple[float, ...] = (1.0,)
    m: tuple[int, ...] = (0,)
    omega: tuple[float, ...] = (0.0,)
    depths: tuple[int, ...] = (0,)
    p: tuple[float, ...] = (0.5,)  # fixed overlaps when x is not p
    quantity: str = "concurrence"  # custom sweeps only
    out: Optional[str] = None
    format: str = "csv"

    def validate(self) -> "SweepSpec":
        if self.figure not in FIGURES:
            raise InvalidSpec(f"unknown figure {self.figure!r}; choose from {', '.join(FIGURES)}")
        if self.format not in FORMATS:
            raise InvalidSpec(f"format must be csv or json, got {self.format!r}")
        if self.x not in X_DOMAINS:
            raise InvalidSpec(f"x variable must be one of {sorted(X_DOMAINS)}, got {self.x!r}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise InvalidSpec(f"steps must be an integer >= 2, got {self.steps!r}")
        lo, hi = X_DOMAINS[self.x]
        if not (lo <= self.start <= hi and lo <= self.stop <= hi) or self.start >= self.stop:
            raise InvalidSpec(f"{self.x} range [{self.start}, {self.stop}] must be increasing within [{lo}, {hi}]")
        if not self.j or any(not (x > 0) for x in self.j):
            raise InvalidSpec("j values must be positive")
        if not self.m or any(x not in (0, 1) for x in self.m):
            raise InvalidSpec("m values must be 0 or 1")
        if not self.p or any(not 0.0 <= x <= 1.0 for x in self.p):
            raise InvalidSpec("fixed p values must lie in [0, 1]")
        if not self.depths or any(d < 0 for d in self.depths):
            raise InvalidSpec("depths must be non-negative")
        if self.figure == "custom" and self.quantity not in CUSTOM_QUANTITIES:
            raise InvalidSpec(f"custom quantity must be one of {', '.join(CUSTOM_QUANTITIES)}")
        return self

    def xs(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, int(self.steps))


_FIG3_J = (1.0, 2.0, 4.0, 8.0, 15.5)

_DEFAULTS = {
    "fig1": dict(x="p", j=(0.5, 1.0, 1.5, 2.5, 15.5), m=(0,)),
    "fig3a": dict(x="p", j=_FIG3_J, m=(0,)),
    "fig3b": dict(x="p", j=_FIG3_J, m=(0,)),
    "fig4a": dict(x="C", m=(0,), omega=(math.pi,), depths=(0, 1, 2)),
    "fig4b": dict(x="C", m=(0,), omega=(0.0,), depths=(0, 1, 2)),
    "fig5a": dict(x="C", m=(0,), omega=(math.pi,), depths=(0, 1, 2)),
    "fig5b": dict(x="C", m=(1,), omega=(0.0,), depths=(0, 1, 2)),
    "fig5c": dict(x="C", m=(0,), omega=(0.0,), depths=(0, 1, 2)),
    "custom": dict(),
}


def default_spec(figure: str, **overrides) -> SweepSpec:
    if figure not in _DEFAULTS:
        raise InvalidSpec(f"unknown figure {figure!r}; choose from {', '.join(FIGURES)}")
    kw = dict(_DEFAULTS[figure])
    kw.update({k: v for k, v in overrides.items() if v is not None})
    for key in ("j", "m", "omega", "depths", "p"):
        if key in kw:
            kw[key] = tuple(kw[key])
    return SweepSpec(figure=figure, **kw).validate()


def maximizing_omega(params: ChannelParams) -> float:
    """omega in {0, pi} with the larger primary-attempt F_av; ties go to 0."""
    f0 = f_av_closed(params, 0.0, 0)
    fpi = f_av_closed(params, math.pi, 0)
    return 0.0 if f0 >= fpi else math.pi


# -- row generators -------------------------------------------------------

Rows = list[tuple]


def _fig1(spec: SweepSpec) -> tuple[list[str], Rows]:
    rows = []
    for j in spec.j:
        for p in spec.xs():
            rows.append((j, p, concurrence_analytic(ChannelParams(p, j, 0))))
    return ["j", "p", "concurrence"], rows


def _fig3(spec: SweepSpec, quantity: str) -> tuple[list[str], Rows]:
    rows = []
    for j in spec.j:
        for p in spec.xs():
            params = ChannelParams(p, j, spec.m[0])
            w = maximizing_omega(params)
            if quantity == "f_av_max":
                y = f_av_closed(params, w, 0)
            else:
                y = p_success_closed(params, w, 0)
            rows.append((j, p, w, y))
    return ["j", "p", "omega", quantity], rows


def _fig_concurrence(spec: SweepSpec, fn: Callable, name: str) -> tuple[list[str], Rows]:
    m, w = spec.m[0], spec.omega[0]
    rows = [(d, C, fn(C, w, m, d)) for d in spec.depths for C in spec.xs()]
    return ["depth", "concurrence", name], rows


def _custom_value(q: str, params: Optional[ChannelParams], m: int, w: float, d: int, C: float) -> float:
    """One custom sweep value; ``params`` is None when sweeping the concurrence."""
    if params is None:
        if q == "concurrence":
            return C
        if q == "f_av":
            return f_av_from_concurrence(C, w, m, d)
        if q == "p_success":
            return p_success_from_concurrence(C, w, m, d)
        raise InvalidSpec(f"quantity {q!r} cannot be swept against C")
    if q == "concurrence":
        return concurrence_analytic(params)
    if q == "f_av":
        return f_av_closed(params, w, d)
    if q == "f_av_max":
        return f_av_closed(params, maximizing_omega(params), 0)
    if q == "p_success":
        return p_success_closed(params, w, d)
    try:
        return repetitions_required(params.p, params.j, w)
    except InfiniteRepetitions:
        return math.inf


def _custom(spec: SweepSpec) -> tuple[list[str], Rows]:
    rows = []
    q = spec.quantity
    if spec.x == "C":
        for m, w, d in product(spec.m, spec.omega, spec.depths):
            for C in spec.xs():
                rows.append((m, w, d, C, _custom_value(q, None, m, w, d, C)))
        return ["m", "omega", "depth", "C", q], rows
    if spec.x == "p":
        for j, m, w, d in product(spec.j, spec.m, spec.omega, spec.depths):
            for p in spec.xs():
                rows.append((j, m, w, d, p, _custom_value(q, ChannelParams(p, j, m), m, w, d, 0.0)))
        return ["j", "m", "omega", "depth", "p", q], rows
    for j, m, p, d in product(spec.j, spec.m, spec.p, spec.depths):
        params = ChannelParams(p, j, m)
        for w in spec.xs():
            rows.append((j, m, p, d, w, _custom_value(q, params, m, w, d, 0.0)))
    return ["j", "m", "p", "depth", "omega", q], rows


def figure_rows(spec: SweepSpec) -> tuple[list[str], Rows]:
    """Column names and rows for ``spec``; raises InvalidSpec on bad input."""
    spec.validate()
    f = spec.figure
    try:
        if f == "fig1":
            return _fig1(spec)
        if f == "fig3a":
            return _fig3(spec, "f_av_max")
        if f == "fig3b":
            return _fig3(spec, "p_success")
        if f in ("fig4a", "fig4b"):
            return _fig_concurrence(spec, f_av_from_concurrence, "f_av")
        if f in ("fig5a", "fig5b", "fig5c"):
            return _fig_concurrence(spec, p_success_from_concurrence, "p_success")
        return _custom(spec)
    except InvalidSpec:
        raise
    except SpinCatError as exc:
        raise InvalidSpec(str(exc)) from exc


# -- serialization --------------------------------------------------------


def _num(x) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _json_num(x) -> str:
    s = _num(x)
    return "null" if s in ("nan", "inf", "-inf") else s


def render(spec: SweepSpec) -> str:
    cols, rows = figure_rows(spec)
    if spec.format == "csv":
        lines = [",".join(cols)] + [",".join(_num(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    items = []
    for row in rows:
        body = ", ".join(f'"{c}": {_json_num(v)}' for c, v in zip(cols, row))
        items.append("  {" + body + "}")
    return "[\n" + ",\n".join(items) + "\n]\n"


def emit_figure(spec: SweepSpec) -> Path:
    """Write the figure file to ``spec.out`` and return its path."""
    if spec.out is None:
        raise InvalidSpec("emit_figure needs an output path")
    text = render(spec)
    path = Path(spec.out)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path
