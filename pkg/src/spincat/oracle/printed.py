"""Published symbolic expressions, transcribed verbatim including their typos.

Used only to compare against the engine and the oracle; no result in the
package is computed from these. ``a`` and ``b`` are coherent coefficients
with a^2 + b^2 = 1 (the state is N (a|eta> + b|-eta>)). Lower-case
``p_i`` denominators are the printed P_i, as in the source.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "Symbols",
    "symbols",
    "primary_probabilities",
    "primary_fidelities",
    "repeat_probabilities",
    "repeat_fidelities",
    "concurrence",
    "f_av_primary",
    "f_av_primary_concurrence",
    "f_av_primary_piecewise",
    "f_av_first_repeat",
    "f_av_first_repeat_piecewise",
    "f_av_first_repeat_max",
    "f_av_second_repeat",
    "f_av_second_repeat_piecewise",
    "p_success",
    "p_success_general",
    "repetitions",
    "PROSE_VALUES",
]


def _div(x: float, y: float) -> float:
    return x / y if y != 0 else math.nan


def _sqrt(x: float) -> float:
    # rounding can push 1 - C^2 a few ulps below zero at C = 1
    if x < 0:
        return 0.0 if x > -1e-12 else math.nan
    return math.sqrt(x)


@dataclass(frozen=True)
class Symbols:
    A: float
    B: float
    N: float
    Nm: float
    a: float
    b: float
    e: complex  # e^{i m pi}
    P: float  # p^j
    P2: float  # p^{2j}

    @property
    def u(self) -> float:
        return self.a + self.b

    @property
    def v(self) -> float:
        return self.a - self.b

    @property
    def bp(self) -> float:
        return (1 + self.e).real

    @property
    def bm(self) -> float:
        return (1 - self.e).real


def symbols(p: float, j: float, m: int, a: float, b: float) -> Symbols:
    P = 0.0 if p == 0 else p ** j
    P2 = P * P
    Nm2 = 2 + 2 * P2 * math.cos(m * math.pi)
    return Symbols(
        A=math.sqrt((1 + P) / 2),
        B=math.sqrt((1 - P) / 2),
        N=(1 + 2 * a * b * P) ** -0.5,
        Nm=Nm2 ** -0.5 if Nm2 > 0 else math.inf,
        a=a,
        b=b,
        e=cmath.exp(1j * m * math.pi),
        P=P,
        P2=P2,
    )


def primary_probabilities(s: Symbols) -> list[float]:
    A, B, u, v, bp, bm = s.A, s.B, s.u, s.v, s.bp, s.bm
    k = (s.N * s.Nm) ** 2 / 2
    return [
        k * (A * (A**2 * u * bp + B**2 * v * bm) ** 2 + B * (A**2 * u * bm + B**2 * v * bp) ** 2),
        k * (B * A**2 * (u * bm + v * bp) ** 2 + A * B**2 * (u * bp + v * bm) ** 2),
        k * (B * A**2 * (u * bm - v * bp) ** 2 + A * B**2 * (u * bp - v * bm) ** 2),
        k * (A * (A**2 * u * bp - B**2 * v * bm) ** 2 + B * (A**2 * u * bm - B**2 * v * bp) ** 2),
    ]


def primary_fidelities(s: Symbols) -> list[float]:
    A, B, u, v, a, b, e = s.A, s.B, s.u, s.v, s.a, s.b, s.e
    p0, p1, p2, p3 = primary_probabilities(s)
    k = (s.N**2 * s.Nm) ** 2
    return [
        _div(k, 2 * p0) * abs((A**2 * u + B**2 * v) ** 2 + (A**2 * u - B**2 * v) ** 2 * e) ** 2,
        _div(2 * k, p1) * abs(B * A**3 * u * (a - b * e) + A * B**3 * v * (a + b * e)) ** 2,
        _div(2 * k, p2) * abs(B * A**3 * u * (b - a * e) + A * B**3 * v * (b + a * e)) ** 2,
        _div(k, 2 * p3) * abs((A**4 * u**2 - B**4 * v**2) * (1 + e)) ** 2,
    ]


def repeat_probabilities(s: Symbols) -> dict[str, float]:
    """Conditional probabilities of the first repeated attempt, keyed by path label."""
    A, B, u, v, bp, bm = s.A, s.B, s.u, s.v, s.bp, s.bm
    p0, p1, p2, p3 = primary_probabilities(s)
    k = (s.N * s.Nm) ** 2 / 8
    out = {}
    out["10"] = out["13"] = _div(k, p1) * ((A * B**2 * (u * bp + v * bm)) ** 2 + (A**2 * B * (u * bm + v * bp)) ** 2)
    out["11"] = out["12"] = _div(k, p1) * ((B * A**2 * (u * bm + v * bp)) ** 2 + (B**2 * A * (u * bp + v * bm)) ** 2)
    out["20"] = out["23"] = _div(k, p2) * ((A * B**2 * (u * bp - v * bm)) ** 2 + (A**2 * B * (u * bm - v * bp)) ** 2)
    out["21"] = out["22"] = _div(k, p2) * ((B * A**2 * (u * bm + v * bp)) ** 2 + (B**2 * A * (u * bp + v * bm)) ** 2)
    out["00"] = out["03"] = _div(k, p0) * ((A * (A**2 * u * bp + B**2 * v * bm)) ** 2 + (B * (A**2 * u * bm + B**2 * v * bp)) ** 2)
    out["01"] = out["02"] = _div(k, p0) * ((B * (A**2 * u * bm + B**2 * v * bp)) ** 2 + (A * (A**2 * u * bp + B**2 * v * bm)) ** 2)
    out["30"] = out["33"] = _div(k, p3) * ((A * (A**2 * u * bp - B**2 * v * bm)) ** 2 + (B * (A**2 * u * bm - B**2 * v * bp)) ** 2)
    out["31"] = out["32"] = _div(k, p3) * ((B * (A**2 * u * bm - B**2 * v * bp)) ** 2 + (A * (A**2 * u * bp - B**2 * v * bm)) ** 2)
    return out


def repeat_fidelities(s: Symbols) -> dict[str, float]:
    A, B, u, v, a, b, e, bp, bm = s.A, s.B, s.u, s.v, s.a, s.b, s.e, s.bp, s.bm
    p0, p1, p2, p3 = primary_probabilities(s)
    q = repeat_probabilities(s)
    k = (s.N**2 * s.Nm) ** 2
    x1 = B * A**3 * u * (a - b * e)
    y1 = A * B**3 * v * (a + b * e)
    x2 = B * A**3 * u * (b - a * e)
    y2 = A * B**3 * v * (b + a * e)
    even = (A**2 * u + B**2 * v) ** 2 + (A**2 * u - B**2 * v) ** 2 * e
    odd = (A**2 * u - B**2 * v) ** 2 + (A**2 * u + B**2 * v) ** 2 * e
    sq = (A**4 * u**2 - B**4 * v**2) * (1 + e)
    return {
        "10": _div(2 * k, p1 * q["10"]) * abs(A**2 * B**2 * (a**2 + b**2 * e)) ** 2,
        "13": _div(k, 2 * p1 * q["13"]) * abs(A**2 * B**2 * (a**2 + b**2) * (1 + e)) ** 2,
        "11": _div(k, 2 * p1 * q["11"]) * abs(x1 + y1) ** 2,
        "12": _div(k, 2 * p1 * q["12"]) * abs(x1 - A * B**3 * v * (b + a * e)) ** 2,
        "20": _div(k, 2 * p2 * q["20"]) * abs(A**2 * B**2 * (a**2 * bm + 2 * a * b * bp - b**2 * bp)) ** 2,
        "23": _div(2 * k, p2 * q["23"]) * abs(A**2 * B**2 * a * b * (1 + e)) ** 2,
        "21": _div(k, 2 * p2 * q["21"]) * abs(x2 - y2) ** 2,
        "22": _div(k, 2 * p2 * q["22"]) * abs(x2 + y2) ** 2,
        "00": _div(k, 8 * p0 * q["00"]) * abs(even) ** 2,
        "01": _div(k, 2 * p0 * q["01"]) * abs(x1 + y1) ** 2,
        "02": _div(k, 2 * p0 * q["02"]) * abs(x2 + y2) ** 2,
        "03": _div(k, 8 * p0 * q["03"]) * abs(sq) ** 2,
        "30": _div(k, 8 * p3 * q["30"]) * abs(odd) ** 2,
        "31": _div(k, 2 * p3 * q["31"]) * abs(x2 - y2) ** 2,
        "32": _div(k, 2 * p3 * q["32"]) * abs(x1 - y1) ** 2,
        "33": _div(k, 8 * p3 * q["33"]) * abs(sq) ** 2,
    }


# -- closed forms ----------------------------------------------------------


def concurrence(p: float, j: float, m: int) -> float:
    P2 = 0.0 if p == 0 else p ** (2 * j)
    return _div(1 - P2, 1 + P2 * math.cos(m * math.pi))


def f_av_primary(p: float, j: float, m: int, omega: float) -> float:
    cw, sw = math.cos(omega), math.sin(omega)
    if m == 1:
        return (1 + abs(cw) ** 2 + sw**2) / 4
    P = 0.0 if p == 0 else p**j
    return ((abs(P + cw) ** 2 + abs(1 + P * cw) ** 2) / (1 + P**2) + sw**2) / 4


def f_av_primary_concurrence(C: float, omega: float) -> float:
    cw, sw = math.cos(omega), math.sin(omega)
    lo, hi = _sqrt(1 - C), math.sqrt(1 + C)
    return (abs(lo + hi * cw) ** 2 + abs(hi + lo * cw) ** 2 + 2 * sw**2) / 8


def f_av_primary_piecewise(C: float, omega_is_zero: bool) -> float:
    r = _sqrt(1 - C**2)
    return (1 + r) / 2 if omega_is_zero else (1 - r) / 2


def f_av_first_repeat(C: float, omega: float, m: int) -> float:
    cw = math.cos(omega)
    if m == 1:
        return 3 / 8 * (1 + abs(cw) ** 2)
    return (3 * (1 + abs(cw) ** 2) + 2 * _sqrt(1 - C**2) * cw) / 8


def f_av_first_repeat_piecewise(C: float, omega_is_zero: bool) -> float:
    r = _sqrt(1 - C**2)
    return (3 + r) / 4 if omega_is_zero else (3 - r) / 4


def f_av_first_repeat_max(p: float, j: float, m: int) -> float:
    if m == 1:
        return 2 * PROSE_VALUES["f_av_first_repeat_min_odd"]
    P = 0.0 if p == 0 else p**j
    return 2 * PROSE_VALUES["f_av_first_repeat_min_even"] + P / (2 * (1 + P**2))


def f_av_second_repeat(C: float, omega: float, m: int) -> float:
    """As printed: note sqrt(1 +- C^2) inside the correction term."""
    if m == 1:
        return 7 / 6 * f_av_first_repeat(C, omega, 1)
    cw = math.cos(omega)
    hi, lo = _sqrt(1 + C**2), _sqrt(1 - C**2)
    return f_av_first_repeat(C, omega, 0) + (abs(hi - lo * cw) ** 2 + abs(lo - hi * cw) ** 2) / 32


def f_av_second_repeat_piecewise(C: float, omega_is_zero: bool) -> float:
    r = _sqrt(1 - C**2)
    return (7 + r) / 8 if omega_is_zero else (7 - r) / 8


def p_success(p: float, j: float, m: int, omega: float, n: int) -> float:
    """Depth-specific printed forms (primary, first, second, third repeat; general n beyond)."""
    if m == 1:
        return {0: 0.5, 1: 0.75, 2: 7 / 8, 3: 15 / 16}.get(n, (2 ** (n + 1) - 1) / 2 ** (n + 1))
    P = 0.0 if p == 0 else p**j
    x = P * math.cos(omega) / (1 + P**2)
    if n == 0:
        return 0.5 + x
    if n == 1:
        return (3 + 2 * x) / 4
    if n == 2:
        return (7 + 2 * x) / 8
    if n == 3:
        return 15 / 16 + x / 8
    return p_success_general(concurrence(p, j, m), omega, m, n)


def p_success_general(C: float, omega: float, m: int, n: int) -> float:
    base = (2 ** (n + 1) - 1) / 2 ** (n + 1)
    if m == 1:
        return base
    return base + _sqrt(1 - C**2) * math.cos(omega) / 2 ** (n + 1)


def repetitions(p: float, j: float, omega: float) -> float:
    P = 0.0 if p == 0 else p**j
    return _div(4 * (1 + P**2), P**2 + 2 * P * math.cos(omega) + 1)


PROSE_VALUES = {
    "f_av_primary_max_p0": 0.5,
    "f_av_primary_superposed": 0.5,
    "f_av_first_repeat_superposed_even": 0.75,
    "f_av_first_repeat_min_even": 3 / 8,
    "f_av_first_repeat_min_odd": 3 / 8,
    "f_av_second_repeat_superposed_even": 7 / 16,
    "p_success_odd_primary": 0.5,
    "repetitions_ground_omega0": 2.0,
    "repetitions_ghz": 4.0,
}
