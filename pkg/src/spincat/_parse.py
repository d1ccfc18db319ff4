"""Parsing of angle and spin literals such as ``3pi/4`` or ``31/2``."""
from __future__ import annotations

import math
import re
from fractions import Fraction

_ANGLE = re.compile(r"^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_angle(text) -> float:
    """Radians from a number or a multiple of pi (``pi``, ``pi/2``, ``-3*pi/4``)."""
    if isinstance(text, (int, float)):
        return float(text)
    s = str(text).strip().lower()
    m = _ANGLE.match(s)
    if m:
        coef = m.group(1)
        if coef in ("", "+", None):
            k = 1.0
        elif coef == "-":
            k = -1.0
        else:
            k = float(coef)
        den = float(m.group(2)) if m.group(2) else 1.0
        return k * math.pi / den
    return float(s)


def parse_spin(text) -> float:
    """Spin from a number or a fraction string (``31/2``)."""
    if isinstance(text, (int, float)):
        return float(text)
    return float(Fraction(str(text).strip()))


def parse_list(text, item=float) -> list:
    return [item(x) for x in str(text).split(",") if x.strip()]
