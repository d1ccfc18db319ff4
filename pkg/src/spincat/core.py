"""Scalar algebra of spin coherent cat states.

Everything here depends on the coherent amplitude only through the overlap
``p = <eta|-eta>`` of the spin-1/2 factors; a spin-s block contributes
``p**(2s)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DegenerateCat, DegenerateTarget, InvalidParams

__all__ = [
    "ChannelParams",
    "TargetState",
    "CatCoefficients",
    "LimitingForm",
    "overlap_from_eta",
    "overlap_power",
    "basis_weights",
    "cat_normalization",
    "cat_coefficients",
    "target_logical",
    "limiting_form",
]


def overlap_power(p: float, x: float) -> float:
    """``p**x`` for p in [0, 1], x > 0, with p == 0 giving exactly 0."""
    if p == 0.0:
        return 0.0
    return math.exp(x * math.log(p)) if p != 1.0 else 1.0


@dataclass(frozen=True)
class ChannelParams:
    """Overlap ``p``, spin ``j`` and parity ``m`` of the shared cat state."""

    p: float
    j: float
    m: int = 0

    def __post_init__(self):
        p = float(self.p)
        j = float(Fraction(self.j)) if isinstance(self.j, (str, Fraction)) else float(self.j)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "j", j)
        if not (0.0 <= p <= 1.0) or math.isnan(p):
            raise InvalidParams(f"overlap p must lie in [0, 1], got {self.p!r}")
        if not (j > 0.0) or math.isinf(j):
            raise InvalidParams(f"spin j must be positive, got {self.j!r}")
        if self.m not in (0, 1):
            raise InvalidParams(f"parity m must be 0 or 1, got {self.m!r}")

    @property
    def q(self) -> float:
        """Overlap of one half of the equal split, ``p**j``."""
        return overlap_power(self.p, self.j)

    @property
    def overlap(self) -> float:
        """Full overlap ``<j,eta|j,-eta> = p**(2j)``."""
        return overlap_power(self.p, 2.0 * self.j)

    @property
    def is_physical(self) -> bool:
        """True when the equal split j/2 is itself a valid spin."""
        return float(self.j).is_integer()

    def require_physical(self) -> None:
        if not self.is_physical:
            raise InvalidParams(
                f"state construction needs integer j (split j/2 must be a spin), got j={self.j}"
            )
        if self.m == 1 and self.overlap == 1.0:
            raise DegenerateCat("odd cat state is undefined at p**(2j) == 1 (W limit)")


@dataclass(frozen=True)
class CatCoefficients:
    A: float
    B: float
    N: float
    s: float


def overlap_from_eta(eta: complex) -> float:
    """Overlap ``(1 - |eta|^2) / (1 + |eta|^2)`` of ``|eta>`` and ``|-eta>``.

    Negative for ``|eta| > 1``; the protocol itself only uses p in [0, 1].
    """
    r2 = abs(eta) ** 2
    return (1.0 - r2) / (1.0 + r2)


def basis_weights(p: float, s: float) -> tuple[float, float]:
    """Weights (A, B) of ``|eta>^{(x)2s}`` on the even/odd logical vectors."""
    if not 0.0 <= p <= 1.0:
        raise InvalidParams(f"overlap p must lie in [0, 1], got {p!r}")
    P = overlap_power(p, 2.0 * s)
    return math.sqrt((1.0 + P) / 2.0), math.sqrt((1.0 - P) / 2.0)


def cat_normalization(params: ChannelParams) -> float:
    """Normalization ``(2 + 2 p^{2j} cos(m pi))^{-1/2}`` of the cat state."""
    P = params.overlap
    sign = 1.0 if params.m == 0 else -1.0
    denom = 2.0 + 2.0 * sign * P
    if denom <= 0.0:
        raise DegenerateCat("odd cat state is undefined at p**(2j) == 1 (W limit)")
    return denom ** -0.5


def cat_coefficients(p: float, s: float, a: float, b: float) -> CatCoefficients:
    A, B = basis_weights(p, s)
    norm2 = 1.0 + 2.0 * a * b * overlap_power(p, 2.0 * s)
    if norm2 <= 0.0:
        raise DegenerateTarget(f"1 + 2ab p^(2s) = {norm2} is not positive")
    return CatCoefficients(A=A, B=B, N=norm2 ** -0.5, s=s)


@dataclass(frozen=True)
class TargetState:
    """State to teleport, stored as the angle on the logical Bloch circle.

    Build with :meth:`from_angle` or :meth:`from_coefficients`. When built
    from coherent coefficients, ``a`` and ``b`` stay authoritative and are
    re-expressed for whatever ``(p, j)`` the target is used with.
    """

    omega: float
    a: Optional[float] = None
    b: Optional[float] = None

    @classmethod
    def from_angle(cls, omega: float) -> "TargetState":
        return cls(omega=float(omega))

    @classmethod
    def from_coefficients(cls, a: float, b: float, p: float, j: float) -> "TargetState":
        a, b = _unit_pair(a, b)
        vec = _coefficients_to_logical(a, b, p, j / 2.0)
        omega = 2.0 * math.atan2(vec[1], vec[0])
        return cls(omega=omega % (2.0 * math.pi), a=a, b=b)

    @property
    def from_coherent(self) -> bool:
        return self.a is not None


def _unit_pair(a: float, b: float) -> tuple[float, float]:
    r = math.hypot(a, b)
    if r == 0.0:
        raise DegenerateTarget("a and b are both zero")
    return a / r, b / r


def _coefficients_to_logical(a: float, b: float, p: float, s: float) -> np.ndarray:
    c = cat_coefficients(p, s, a, b)
    vec = np.array([c.N * c.A * (a + b), c.N * c.B * (a - b)])
    # a^2 + b^2 = 1 makes vec a unit vector; rounding only.
    return vec / np.linalg.norm(vec)


def target_logical(target: TargetState, p: float, j: float) -> np.ndarray:
    """Unit logical amplitudes ``(cos(w/2), sin(w/2))`` of the target."""
    if target.from_coherent:
        return _coefficients_to_logical(target.a, target.b, p, j / 2.0).astype(complex)
    half = target.omega / 2.0
    return np.array([math.cos(half), math.sin(half)], dtype=complex)


class LimitingForm(enum.Enum):
    GHZ_TYPE = "GHZ_type"
    GROUND_TYPE = "Ground_type"
    W_TYPE = "W_type"
    GENERIC = "Generic"


def limiting_form(params: ChannelParams, tol: float = 0.0) -> LimitingForm:
    """Classify the cat state by the p -> 0 and p -> 1 limits."""
    if params.p <= tol:
        return LimitingForm.GHZ_TYPE
    if params.p >= 1.0 - tol:
        return LimitingForm.GROUND_TYPE if params.m == 0 else LimitingForm.W_TYPE
    return LimitingForm.GENERIC
